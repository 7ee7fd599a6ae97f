import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from cohlength.exactlin import (
    Field,
    Matrix,
    PolyMatrix,
    kernel_basis,
    poly,
    poly_matrix_rank,
    rank,
    solve_linear,
)


def brute_rank(p: int, rows: list[list[int]]) -> int:
    """log_p of the size of the row space, by enumerating all combinations."""
    if not rows or not rows[0]:
        return 0
    span = {tuple((np.array(c) @ np.array(rows)) % p) for c in itertools.product(range(p), repeat=len(rows))}
    return round(np.log(len(span)) / np.log(p))


def minor_rank(p: int, grid) -> int:
    """Largest k with a nonzero k x k minor, determinants by Leibniz over F_p[x]."""
    rows, cols = len(grid), len(grid[0]) if grid else 0

    def det(sub):
        n = len(sub)
        total: tuple = ()
        for perm in itertools.permutations(range(n)):
            sign = 1
            for i in range(n):
                for j in range(i + 1, n):
                    if perm[i] > perm[j]:
                        sign = -sign
            term: tuple = (1,)
            for i in range(n):
                term = poly.mul(term, sub[i][perm[i]], p)
            total = poly.add(total, poly.scale(term, sign % p, p), p)
        return total

    for k in range(min(rows, cols), 0, -1):
        for ri in itertools.combinations(range(rows), k):
            for ci in itertools.combinations(range(cols), k):
                if det([[grid[i][j] for j in ci] for i in ri]):
                    return k
    return 0


def test_rank_examples(F5):
    assert rank(Matrix.zeros(F5, 0, 0)) == 0
    assert rank(Matrix.identity(F5, 3)) == 3
    assert rank(Matrix(F5, [[1, 2], [2, 4]])) == 1


def test_kernel_examples(F5):
    assert kernel_basis(Matrix.identity(F5, 2)) == []
    F2 = Field.prime(2)
    ker = kernel_basis(Matrix(F2, [[1, 1]]))
    assert len(ker) == 1 and list(ker[0]) == [1, 1]


def test_kernel_random(F5):
    rng = np.random.default_rng(3)
    m = Matrix.random(F5, 4, 6, rng)
    ker = kernel_basis(m)
    assert len(ker) == 6 - rank(m)
    for v in ker:
        assert not ((m.data @ v) % 5).any()


def test_solve_examples(F5):
    x = solve_linear(Matrix.identity(F5, 3), [1, 2, 3])
    assert list(x) == [1, 2, 3]
    assert solve_linear(Matrix.zeros(F5, 2, 2), [1, 0]) is None
    x = solve_linear(Matrix(F5, [[1, 1], [0, 0]]), [2, 0])
    assert (x[0] + x[1]) % 5 == 2


def test_solve_shape_error(F5):
    with pytest.raises(ValueError):
        solve_linear(Matrix.identity(F5, 2), [1, 2, 3])


def test_poly_rank_examples():
    x = (0, 1)
    assert poly_matrix_rank(PolyMatrix.from_rows(5, [[x, ()], [(), (4, 1)]])) == 2
    assert poly_matrix_rank(PolyMatrix.from_rows(5, [[x, (0, 0, 1)], [(1,), x]])) == 1
    assert poly_matrix_rank(PolyMatrix(5, 0, 3, ())) == 0


def test_extension_field_rank():
    F25 = Field.extension(5, (2, 0, 1))
    t = F25.element((0, 1))
    # t^2 = -2, so [[t, -2], [1, t]] has determinant t^2 + 2 = 0
    m = Matrix(F25, [[t, F25.element(-2)], [F25.one, t]])
    assert rank(m) == 1


def test_rationals_rank():
    Q = Field.rationals()
    assert rank(Matrix(Q, [[1, 2], [3, 4]])) == 2
    assert rank(Matrix(Q, [[1, 2], [2, 4]])) == 1


@given(st.integers(0, 4), st.integers(0, 4), st.data())
def test_rank_matches_row_space(r, c, data):
    rows = [[data.draw(st.integers(0, 2)) for _ in range(c)] for _ in range(r)]
    F3 = Field.prime(3)
    m = Matrix(F3, rows, shape=(r, c)) if r and c else Matrix.zeros(F3, r, c)
    assert rank(m) == brute_rank(3, rows if c else [])


@given(st.integers(1, 3), st.integers(1, 3), st.data())
def test_poly_rank_matches_minors(r, c, data):
    entry = st.lists(st.integers(0, 2), max_size=3).map(tuple)
    grid = [[poly.normalize(data.draw(entry), 3) for _ in range(c)] for _ in range(r)]
    assert poly_matrix_rank(PolyMatrix.from_rows(3, grid)) == minor_rank(3, grid)


@given(st.integers(1, 5), st.integers(1, 5), st.integers(0, 10 ** 6))
def test_rank_nullity(r, c, seed):
    F7 = Field.prime(7)
    m = Matrix.random(F7, r, c, np.random.default_rng(seed))
    assert rank(m) + len(kernel_basis(m)) == c
    assert rank(m) == rank(m.transpose())
