import numpy as np
import pytest
from hypothesis import given, strategies as st

from cohlength.coeffalg import CoeffAlgebra
from cohlength.cohfun import (
    BasisInsufficient,
    IncompatibleAlgebra,
    ObjectLabel,
    ResidueFunction,
    SimpleLabel,
    WindowError,
    check_cohomological,
    check_sequence,
    chi_of_complex,
    chi_of_module,
    chi_table,
    combo,
    decompose_chi,
    extend_chi,
    extend_chi_all,
    five_term_sum,
    lengths_determine_iso,
    probe_window,
    simple_functor_eval,
    simple_module_function,
    strip_values,
)
from cohlength.exactlin import Field
from cohlength.generators import random_chain_map, random_dual_complex
from cohlength.perfcx import (
    ChainMap,
    ar_triangle,
    cone,
    contractible,
    derived_hom_dim,
    direct_sum,
    shift,
    stalk,
    string_complex,
    zero_complex,
    zero_map,
)
from cohlength.perfcx.amat import ops_for

A5 = CoeffAlgebra.dual_numbers(Field.prime(5))
A3 = CoeffAlgebra.dual_numbers(Field.prime(3))
BASIS = [ObjectLabel(n, r) for n in range(-3, 4) for r in range(4)] + [SimpleLabel(s) for s in range(-3, 4)]
PROBES = probe_window(A5, range(-3, 4), 3)


def X(n, r, A=A5):
    return string_complex(A, n, r)


def eps_cone(C):
    ops = ops_for(C.algebra)
    return cone(ChainMap(C, C, {i: ops.scalar(r, [0, 1]) for i, r in C.ranks.items()}))


def random_complex(seed, A=A3):
    return random_dual_complex(A, np.random.default_rng(seed), lo=-2, hi=2, max_rank=2)[0]


def test_object_function_examples():
    chi = chi_of_complex(X(0, 0))
    assert chi(X(0, 0)) == 2
    assert chi(X(0, 1)) == 1
    assert chi(zero_complex(A5)) == 0


def test_simple_module_examples():
    k = simple_module_function(A5)
    for r in range(5):
        assert k(X(0, r)) == 1
        prof = k.profile(X(0, r))
        assert len(prof) == r + 1 and max(prof) - min(prof) == r


def test_residue_function_on_free_stalk(Px):
    assert ResidueFunction(Px, (0, 1))(stalk(Px, 0)) == 1


def test_module_function_rejects_bad_action():
    with pytest.raises(ValueError):
        chi_of_module(A5, A5.field.array([[1]]))  # eps must square to zero


def test_sums_and_additivity():
    chi = chi_of_complex(X(0, 0)) + simple_module_function(A5)
    assert chi(X(0, 0)) == 3
    C = X(-1, 2)
    for f in (chi_of_complex(X(0, 1)), simple_module_function(A5)):
        assert f(direct_sum(C, C)) == 2 * f(C)
        assert f(zero_complex(A5)) == 0


def test_incompatible_algebra(Px):
    with pytest.raises(IncompatibleAlgebra):
        chi_of_complex(X(0, 0))(stalk(Px, 0))


@given(st.integers(0, 3), st.integers(0, 10 ** 6))
def test_indecomposable_endolength_is_hom_dimension(r, seed):
    # End(X_{0,r}) is local with residue field k, so lengths are k-dimensions
    C = random_complex(seed)
    Xr = X(0, r, A3)
    assert chi_of_complex(Xr)(C) == derived_hom_dim(C, Xr, 0)


@given(st.integers(0, 10 ** 6))
def test_weighted_additivity(seed):
    C = random_complex(seed)
    H, H2 = X(0, 1, A3), X(1, 0, A3)
    assert chi_of_complex(direct_sum(H, H))(C) == chi_of_complex(H)(C)
    assert chi_of_complex(direct_sum(H, H2))(C) == chi_of_complex(H)(C) + chi_of_complex(H2)(C)


def test_check_cohomological_examples():
    T = eps_cone(X(0, 0))
    assert check_cohomological(chi_of_complex(X(0, 0)), T) is None
    strip = strip_values(chi_of_complex(X(0, 0)), T, 8)
    assert check_sequence(strip) is None
    for pos in (i for i, v in enumerate(strip) if v):
        mutated = list(strip)
        mutated[pos] += 1
        assert check_sequence(mutated) is not None


def test_window_error():
    with pytest.raises(WindowError):
        check_cohomological(chi_of_complex(X(0, 0)), ar_triangle(4, 2, A5).triangle, window=3)


@given(st.integers(0, 10 ** 6), st.sampled_from([(0, 0), (0, 2), (1, 1)]))
def test_random_cones_cohomological(seed, label):
    rng = np.random.default_rng(seed)
    Y = random_complex(seed)
    Z = random_complex(seed + 1)
    T = cone(random_chain_map(Y, Z, rng))
    assert check_cohomological(chi_of_complex(X(*label, A3)), T, 10) is None
    assert check_cohomological(simple_module_function(A3), T, 10) is None


def test_extend_representable():
    C = X(0, 2)
    T = cone(zero_map(C, zero_complex(A5)))
    for chi in (chi_of_complex(X(0, 0)), simple_module_function(A5), chi_of_complex(X(1, 1))):
        assert extend_chi(chi, T) == chi(C)


@given(st.integers(0, 10 ** 6))
def test_extension_is_anchor_independent(seed):
    rng = np.random.default_rng(seed)
    T = cone(random_chain_map(random_complex(seed), random_complex(seed + 7), rng))
    for chi in (chi_of_complex(X(0, 1, A3)), simple_module_function(A3)):
        assert len(set(extend_chi_all(chi, T, 10).values())) <= 1


def test_extension_matches_simple_functor():
    for n in range(-1, 2):
        for r in range(3):
            T = ar_triangle(n, r, A5).triangle
            for m in range(-1, 3):
                for s in range(3):
                    assert extend_chi(chi_of_complex(X(m, s)), T, 12) == simple_functor_eval(n, r, X(m, s))


def test_simple_functor_delta():
    for n in range(-2, 3):
        for r in range(3):
            assert simple_functor_eval(n, r, zero_complex(A5)) == 0
            for m in range(-2, 4):
                for s in range(3):
                    assert simple_functor_eval(n, r, X(m, s)) == int((m, s) == (n + 1, r))


def test_five_term_sum_vanishes():
    for n in range(-1, 2):
        for r in range(3):
            for C in (X(0, 0), X(1, 2), direct_sum(X(0, 1), X(-1, 0))):
                assert five_term_sum(n, r, C) == 0


def test_decompose_examples():
    chi = chi_of_complex(direct_sum(X(0, 0), X(0, 1)))
    assert decompose_chi(chi, BASIS, PROBES) == {ObjectLabel(0, 0): 1, ObjectLabel(0, 1): 1}
    chi = chi_of_complex(direct_sum(X(0, 1), X(0, 1)))
    assert decompose_chi(chi, BASIS, PROBES) == {ObjectLabel(0, 1): 1}
    want = {SimpleLabel(0): 3, ObjectLabel(0, 3): 2}
    assert decompose_chi(combo(A5, want), BASIS, PROBES) == want


def test_decompose_basis_insufficient():
    chi = chi_of_complex(X(0, 3))
    with pytest.raises(BasisInsufficient):
        decompose_chi(chi, [ObjectLabel(0, 0), SimpleLabel(0)], PROBES)


@given(st.dictionaries(st.sampled_from(BASIS), st.integers(1, 5), min_size=1, max_size=4))
def test_decompose_round_trip(want):
    assert decompose_chi(combo(A5, want), BASIS, PROBES) == dict(sorted(want.items()))


def test_lengths_determine_iso_examples():
    probes = [(f"S{m}X{s}", shift(X(0, s), m)) for m in range(-3, 4) for s in range(3)]
    v = lengths_determine_iso(X(0, 2), X(0, 2), probes)
    assert v.equal_lengths and v.homotopy_equivalent
    v = lengths_determine_iso(X(0, 1), direct_sum(X(0, 0), X(1, 0)), probes)
    assert not v.equal_lengths and not v.homotopy_equivalent and v.conforms
    v = lengths_determine_iso(X(0, 1), direct_sum(X(0, 1), contractible(X(0, 0))), probes)
    assert v.equal_lengths and v.homotopy_equivalent


def test_chi_table_rows():
    rows = chi_table(chi_of_complex(X(0, 0)), probe_window(A5, range(-1, 2), 1))
    assert ("X(0,0)", 0, 2) in rows
    rows = chi_table(chi_of_complex(zero_complex(A5)), probe_window(A5, range(-1, 2), 1))
    assert all(v == 0 for _, _, v in rows)
