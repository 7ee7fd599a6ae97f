"""Pure-Python/numpy fallback for the F_p elimination kernel."""
from __future__ import annotations

import numpy as np


def _eliminate(a: np.ndarray, p: int, full: bool) -> list[int]:
    rows, cols = a.shape
    r = 0
    pivots: list[int] = []
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv], c:] = a[[piv, r], c:]
        inv = pow(int(a[r, c]), -1, p)
        if inv != 1:
            a[r, c:] = (a[r, c:] * inv) % p
        start = 0 if full else r + 1
        col = a[start:, c].copy()
        if full:
            col[r - start] = 0
        hit = np.flatnonzero(col)
        if hit.size:
            idx = hit + start
            a[idx, c:] = (a[idx, c:] - np.outer(col[hit], a[r, c:])) % p
        pivots.append(c)
        r += 1
    return pivots


def rref_inplace(a: np.ndarray, p: int) -> list[int]:
    return _eliminate(a, p, True)


def rank_inplace(a: np.ndarray, p: int) -> int:
    return len(_eliminate(a, p, False))
