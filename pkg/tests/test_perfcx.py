import numpy as np
import pytest
from hypothesis import given, strategies as st

from cohlength.coeffalg import CoeffAlgebra
from cohlength.exactlin import Field, rank_of
from cohlength.generators import random_chain_map, random_dual_complex
from cohlength.perfcx import (
    Barcode,
    ChainMap,
    ComplexError,
    PerfectComplex,
    ar_triangle,
    barcode,
    cone,
    contractible,
    derived_hom_dim,
    direct_sum,
    from_barcode,
    hom_complex,
    homotopy_equivalent,
    identity_map,
    k_homology_dims,
    minimal_model,
    pad_a_and_b,
    pad_b_and_c,
    schanuel_free_parity_check,
    schanuel_triangle_check,
    shift,
    stalk,
    string_complex,
    validate,
    zero_complex,
    zero_map,
)
from cohlength.perfcx.amat import ops_for
from cohlength.perfcx.serialize import dumps, loads


def eps_map(X: PerfectComplex) -> ChainMap:
    ops = ops_for(X.algebra)
    return ChainMap(X, X, {i: ops.scalar(r, [0, 1]) for i, r in X.ranks.items()})


def test_validate(A):
    assert validate(string_complex(A, 0, 1)) is None
    assert validate(zero_complex(A)) is None
    ops = ops_for(A)
    bad = PerfectComplex(A, {0: 1, 1: 1, 2: 1}, {0: ops.eye(1), 1: ops.eye(1)})
    v = validate(bad)
    assert v is not None and v.degree == 0


def test_differential_shape_checked(A):
    with pytest.raises(ComplexError):
        PerfectComplex(A, {0: 1, 1: 2}, {0: ops_for(A).eye(1)})


def test_shift(A):
    assert shift(string_complex(A, 0, 2), 0) == string_complex(A, 0, 2)
    for n in range(-2, 3):
        for m in range(-2, 3):
            assert barcode(shift(string_complex(A, n, 1), m)) == Barcode.of({(n - m, 1): 1})
    assert shift(zero_complex(A), 5).is_zero


def test_cone_examples(A):
    X = string_complex(A, 0, 1)
    assert homotopy_equivalent(cone(identity_map(X)).C, zero_complex(A))
    B = string_complex(A, 0, 0)
    T = cone(zero_map(X, B))
    assert barcode(T.C) == barcode(B) + barcode(shift(X, 1))
    T = cone(eps_map(string_complex(A, 0, 0)))
    assert barcode(T.C) == Barcode.of({(-1, 1): 1})


def test_cone_rejects_non_chain_map(A):
    X = string_complex(A, 0, 1)
    ops = ops_for(A)
    f = ChainMap(X, X, {0: ops.eye(1)})
    with pytest.raises(ComplexError):
        cone(f)


def test_hom_complex_examples(A):
    X00 = string_complex(A, 0, 0)
    H = hom_complex(X00, X00)
    assert list(H.degree_range) == [0] and H.dim(0) == 2
    assert hom_complex(zero_complex(A), X00).degree_range == range(0)
    H = hom_complex(string_complex(A, 0, 1), X00)
    assert {n: H.dim(n) for n in H.degree_range} == {-1: 2, 0: 2}


def test_derived_hom_dim(A):
    X00 = string_complex(A, 0, 0)
    H = hom_complex(X00, X00)
    oracle = H.dim(0) - (rank_of(A.field, H.matrix(0)) if H.dim(1) else 0)
    assert derived_hom_dim(X00, X00, 0) == oracle == 2
    assert derived_hom_dim(X00, X00, 3) == 0
    assert derived_hom_dim(string_complex(A, 0, 2), X00, -7) == 0


def test_minimal_model(A):
    assert minimal_model(contractible(string_complex(A, 0, 0))).is_zero
    for n, r in [(0, 0), (1, 2), (-2, 3)]:
        assert minimal_model(string_complex(A, n, r)) == string_complex(A, n, r)
    X00 = string_complex(A, 0, 0)
    assert minimal_model(direct_sum(X00, contractible(X00))) == X00


def test_barcode_examples(A):
    for n in range(-2, 3):
        for r in range(4):
            assert barcode(string_complex(A, n, r)) == Barcode.of({(n, r): 1})
    X, Y = string_complex(A, 0, 2), string_complex(A, 1, 0)
    assert barcode(direct_sum(X, Y)) == barcode(X) + barcode(Y)


def test_homotopy_equivalent_examples(A):
    X = string_complex(A, 0, 1)
    assert homotopy_equivalent(X, direct_sum(X, contractible(X)))
    assert not homotopy_equivalent(X, direct_sum(string_complex(A, 0, 0), string_complex(A, 1, 0)))
    X00 = string_complex(A, 0, 0)
    assert derived_hom_dim(X00, X, 0) == 1
    assert derived_hom_dim(X00, direct_sum(X00, string_complex(A, 1, 0)), 0) == 2
    assert homotopy_equivalent(zero_complex(A), contractible(X))


def test_ar_triangles(A):
    for n in range(-2, 3):
        T = ar_triangle(n, 0, A).triangle
        assert T.A == string_complex(A, n + 1, 0)
        assert barcode(T.B) == Barcode.of({(n, 1): 1})
        for r in range(1, 4):
            T = ar_triangle(n, r, A).triangle
            assert barcode(T.B) == Barcode.of({(n + 1, r - 1): 1, (n, r + 1): 1})
            assert homotopy_equivalent(T.C, string_complex(A, n, r))


def test_schanuel_examples(A):
    T1 = ar_triangle(0, 1, A).triangle
    assert schanuel_triangle_check(T1, T1)
    assert schanuel_triangle_check(T1, pad_b_and_c(T1, contractible(stalk(A, 0))))
    assert schanuel_triangle_check(pad_a_and_b(T1, string_complex(A, 2, 1)), T1)
    assert schanuel_free_parity_check([1, 1, 1], [1, 1, 1])
    assert not schanuel_free_parity_check([1, 2, 1], [1, 1, 1])


def test_k_homology_of_strings(A):
    assert {i: v for i, v in k_homology_dims(string_complex(A, 0, 2)).items() if v} == {0: 1, 2: 1}


@given(st.integers(0, 10 ** 6))
def test_barcode_rebuild(seed):
    A = CoeffAlgebra.dual_numbers(Field.prime(3))
    X, known = random_dual_complex(A, np.random.default_rng(seed), lo=-2, hi=2, max_rank=3)
    bc = barcode(X)
    assert bc == known
    assert homotopy_equivalent(from_barcode(bc, A), X)
    assert bc.k_dim() <= X.k_dim() and (X.k_dim() - bc.k_dim()) % 4 == 0


@given(st.integers(0, 10 ** 6))
def test_serialize_round_trip(seed):
    A = CoeffAlgebra.dual_numbers(Field.prime(5))
    X, _ = random_dual_complex(A, np.random.default_rng(seed), lo=-2, hi=2, max_rank=3)
    text = dumps(X)
    assert loads(text) == X
    assert dumps(loads(text)) == text


@given(st.integers(0, 10 ** 6))
def test_cone_is_long_exact(seed):
    # in a cone triangle the alternating k-homology sum telescopes
    A = CoeffAlgebra.dual_numbers(Field.prime(3))
    rng = np.random.default_rng(seed)
    X, _ = random_dual_complex(A, rng, lo=-1, hi=1, max_rank=2)
    Y, _ = random_dual_complex(A, rng, lo=-1, hi=1, max_rank=2)
    T = cone(random_chain_map(X, Y, rng))
    assert validate(T.C) is None
    euler = lambda Z: sum((-1) ** i * v for i, v in k_homology_dims(Z).items())  # noqa: E731
    assert euler(T.C) == euler(Y) - euler(X)


def test_poly_complexes(Px):
    ops = ops_for(Px)
    m = ops.zeros(1, 1)
    m[0, 0] = (0, 1)
    X = PerfectComplex(Px, {-1: 1, 0: 1}, {-1: m})
    assert validate(X) is None
    assert loads(dumps(X)) == X
