import numpy as np
import pytest
from hypothesis import given, strategies as st

from cohlength.coeffalg import (
    AlgebraError,
    AlgebraModule,
    CoeffAlgebra,
    FinDimAlgebra,
    FractionFieldMarker,
    brute_force_radical,
    composition_length_brute,
    end_algebra_as_table,
    module_length,
    radical,
    residue_field,
)
from cohlength.exactlin import Field, rank_of
from cohlength.perfcx import string_complex
from cohlength.cohfun import end_data_of_complex


def table(F, dim, products, unit):
    mult = F.zeros((dim, dim, dim))
    for (a, b), vec in products.items():
        mult[a, b] = F.array(vec)
    return FinDimAlgebra(F, mult, F.array(unit))


def dual(F):
    return table(F, 2, {(0, 0): [1, 0], (0, 1): [0, 1], (1, 0): [0, 1]}, [1, 0])


def k_times_k(F):
    return table(F, 2, {(0, 0): [1, 0], (1, 1): [0, 1]}, [1, 1])


def upper_triangular(F):
    return table(F, 3, {(0, 0): [1, 0, 0], (0, 1): [0, 1, 0], (1, 2): [0, 1, 0], (2, 2): [0, 0, 1]}, [1, 0, 1])


def matrix_units(F):
    prods = {}
    for i in range(2):
        for j in range(2):
            for l in range(2):
                vec = [0, 0, 0, 0]
                vec[2 * i + l] = 1
                prods[(2 * i + j, 2 * j + l)] = vec
    return table(F, 4, prods, [1, 0, 0, 1])


def same_span(F, a, b) -> bool:
    ra, rb = rank_of(F, a), rank_of(F, b)
    if ra != rb:
        return False
    if ra == 0:
        return True
    return rank_of(F, np.vstack([a, b])) == ra


def test_residue_fields(F5, A, Px):
    assert residue_field(A, "eps") == F5
    K = residue_field(Px, (2, 0, 1))
    assert K.degree == 2 and K.order == 25
    assert isinstance(residue_field(Px, ()), FractionFieldMarker)


def test_residue_field_rejects_reducible(Px):
    squares = {x * x % 5 for x in range(5)}
    assert 3 not in squares  # -2 is a non-square, so x^2 + 2 is irreducible
    assert 1 in squares
    with pytest.raises(ValueError):
        residue_field(Px, (4, 0, 1))  # x^2 - 1


def test_radical_examples(F5):
    rad = radical(dual(F5))
    assert same_span(F5, rad, F5.array([[0, 1]]))
    assert radical(k_times_k(F5)).shape[0] == 0
    rad = radical(upper_triangular(F5))
    assert same_span(F5, rad, F5.array([[0, 1, 0]]))
    # the strictly upper part squares to zero
    E = upper_triangular(F5)
    v = F5.array([0, 1, 0])
    assert not E.mul(v, v).any()


@pytest.mark.parametrize("build", [dual, k_times_k, upper_triangular, matrix_units])
def test_radical_matches_brute_force(build):
    F = Field.prime(3)
    E = build(F)
    assert same_span(F, radical(E), brute_force_radical(E))


def test_radical_extension_field():
    F4 = Field.extension(2, (1, 1, 1))
    E = upper_triangular(F4)
    assert same_span(F4, radical(E), F4.array([[0, 1, 0]]))


def test_module_length_examples(F5):
    E = dual(F5)
    assert module_length(E, E.regular_module()) == 2
    k = table(F5, 1, {(0, 0): [1]}, [1])
    M = AlgebraModule(F5, F5.array([np.eye(3, dtype=int).tolist()]))
    assert module_length(k, M) == 3
    zero = AlgebraModule(F5, F5.zeros((2, 0, 0)))
    assert module_length(E, zero) == 0


def test_non_basic_length_below_dimension(F5):
    E = matrix_units(F5)
    M = E.regular_module()
    assert module_length(E, M) == 2 < M.dim


def test_end_algebra_examples(F5):
    one = table(F5, 1, {(0, 0): [1]}, [1])
    E = end_algebra_as_table(F5, ["id"], lambda a, b: "id", lambda x: [1], "id")
    assert np.array_equal(E.mult, one.mult)
    basis = [F5.array([[1, 0], [0, 1]]), F5.array([[0, 0], [1, 0]])]

    def coords(m):
        return [m[0, 0], m[1, 0]]

    E = end_algebra_as_table(F5, basis, F5.matmul, coords, basis[0])
    assert np.array_equal(E.mult, dual(F5).mult)


def test_end_algebra_rejects_nonassociative(F5):
    # basis 1, a, b with a*a = b, a*b = a, b*a = 0: (a*a)*a = 0 but a*(a*a) = a
    mult = F5.zeros((3, 3, 3))
    for a in range(3):
        mult[0, a, a] = mult[a, 0, a] = 1
    mult[1, 1] = F5.array([0, 0, 1])
    mult[1, 2] = F5.array([0, 1, 0])
    with pytest.raises(AlgebraError):
        FinDimAlgebra(F5, mult, F5.array([1, 0, 0]))


def test_end_of_string_complex_is_local(A):
    data = end_data_of_complex(string_complex(A, 0, 1))
    assert data.local_residue_k
    assert data.quotient_dim == 1


@pytest.mark.parametrize("build", [dual, k_times_k, upper_triangular])
@given(seed=st.integers(0, 10 ** 6))
def test_length_matches_composition_series(build, seed):
    F = Field.prime(2)
    E = build(F)
    rng = np.random.default_rng(seed)
    M = E.regular_module().direct_sum(E.regular_module())
    sub = M.submodule(F.random_array(rng, (1, M.dim)))
    N = M.restrict(sub)
    assert module_length(E, N) == composition_length_brute(E, N)
    Q = M.quotient(sub)
    assert module_length(E, Q) == composition_length_brute(E, Q)
