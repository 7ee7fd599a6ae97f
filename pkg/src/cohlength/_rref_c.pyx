# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled Gauss-Jordan elimination over F_p on int64 buffers."""

ctypedef long long i64


cdef inline i64 _inv(i64 a, i64 p):
    cdef i64 t = 0, nt = 1, r = p, nr = a % p, q, tmp
    while nr != 0:
        q = r // nr
        tmp = t - q * nt
        t = nt
        nt = tmp
        tmp = r - q * nr
        r = nr
        nr = tmp
    if t < 0:
        t += p
    return t


cdef list _eliminate(i64[:, ::1] a, i64 p, bint full):
    cdef Py_ssize_t rows = a.shape[0], cols = a.shape[1]
    cdef Py_ssize_t r = 0, c, i, j, piv
    cdef i64 inv, f, negf
    cdef list pivots = []
    for c in range(cols):
        if r == rows:
            break
        piv = -1
        for i in range(r, rows):
            if a[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(c, cols):
                f = a[r, j]
                a[r, j] = a[piv, j]
                a[piv, j] = f
        inv = _inv(a[r, c], p)
        if inv != 1:
            for j in range(c, cols):
                a[r, j] = (a[r, j] * inv) % p
        for i in range(0 if full else r + 1, rows):
            if i == r:
                continue
            f = a[i, c]
            if f == 0:
                continue
            negf = p - f
            for j in range(c, cols):
                if a[r, j] != 0:
                    a[i, j] = (a[i, j] + negf * a[r, j]) % p
        pivots.append(c)
        r += 1
    return pivots


def rref_inplace(i64[:, ::1] a, i64 p):
    """Reduce ``a`` (entries in [0, p)) to reduced row echelon form; return pivot columns."""
    return _eliminate(a, p, True)


def rank_inplace(i64[:, ::1] a, i64 p):
    """Row echelon form in place; return the rank."""
    return len(_eliminate(a, p, False))
