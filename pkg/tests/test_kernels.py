import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, strategies as st

from cohlength import _rref_py, kernels

try:
    from cohlength import _rref_c
except ImportError:  # extension not built
    _rref_c = None

needs_ext = pytest.mark.skipif(_rref_c is None, reason="compiled kernel not built")


@st.composite
def fp_arrays(draw):
    p = draw(st.sampled_from([2, 3, 5, 7, 65521]))
    r, c = draw(st.integers(1, 12)), draw(st.integers(1, 12))
    seed = draw(st.integers(0, 10 ** 6))
    a = np.random.default_rng(seed).integers(0, p, size=(r, c), dtype=np.int64)
    if draw(st.booleans()):
        a[:, : c // 2] = 0  # force skipped pivot columns
    return p, a


@given(fp_arrays())
def test_fallback_rref_is_reduced(case):
    p, a = case
    work = a.copy()
    piv = list(_rref_py.rref_inplace(work, p))
    assert len(piv) == _rref_py.rank_inplace(a.copy(), p)
    for i, c in enumerate(piv):
        col = work[:, c]
        assert col[i] == 1 and np.count_nonzero(col) == 1
    assert not work[len(piv):].any()


@needs_ext
@given(fp_arrays())
def test_backends_agree(case):
    p, a = case
    w1, w2 = a.copy(), a.copy()
    assert list(_rref_py.rref_inplace(w1, p)) == list(_rref_c.rref_inplace(w2, p))
    assert np.array_equal(w1, w2)
    assert _rref_py.rank_inplace(a.copy(), p) == _rref_c.rank_inplace(a.copy(), p)


@pytest.mark.parametrize("flag, expected", [("1", "python"), ("0", None)])
def test_environment_switch(flag, expected):
    env = dict(os.environ, COHLENGTH_PURE_PYTHON=flag)
    out = subprocess.run([sys.executable, "-c", "from cohlength import kernels; print(kernels.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True).stdout.strip()
    if expected is None:
        expected = "cython" if _rref_c is not None else "python"
    assert out == expected


def test_selected_backend_matches_import():
    assert kernels.BACKEND in ("python", "cython")
