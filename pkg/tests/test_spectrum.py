import numpy as np
import pytest
from hypothesis import given, strategies as st

from cohlength.coeffalg import CoeffAlgebra
from cohlength.cohfun import ModuleFunction, ObjectLabel, ResidueFunction, SimpleLabel
from cohlength.exactlin import Field
from cohlength.exactlin import poly as P
from cohlength.generators import random_poly_complex
from cohlength.perfcx import cone, shift, stalk, string_complex, zero_complex, zero_map
from cohlength.spectrum import (
    PrimeDatum,
    SpectrumWindow,
    basic_open_membership,
    closed_length_set_check,
    closure_extra_point_check,
    default_primes,
    empty_window,
    enumerate_sp_dual_numbers,
    isolated_points,
    multiplication_cone,
    rho,
    rho_injectivity_check,
    supp_dichotomy_check,
)
from cohlength.spectrum.core import functor_value, simple_functor_probe


@pytest.fixture(scope="module")
def W3(A):
    return enumerate_sp_dual_numbers(3, A)


def test_enumerate_label_counts(A, W3):
    assert enumerate_sp_dual_numbers(0, A).labels == [ObjectLabel(0, 0), SimpleLabel(0)]
    assert len(W3.labels) == 5
    assert W3.distinguished() == []


def test_enumerate_rejects_negative(A):
    with pytest.raises(ValueError):
        enumerate_sp_dual_numbers(-1, A)


def test_basic_open_membership(A):
    assert basic_open_membership(SimpleLabel(0), string_complex(A, 0, 5))
    assert not basic_open_membership(ObjectLabel(0, 0), zero_complex(A), A)
    assert basic_open_membership(ObjectLabel(0, 0), string_complex(A, 0, 0))


def test_isolated_points(A, W3):
    iso = isolated_points(W3)
    assert [i.label for i in iso] == [ObjectLabel(0, r) for r in range(4)]
    assert SimpleLabel(0) not in [i.label for i in iso]
    assert dict((str(i.label), i.witness) for i in iso)["X(0,1)"] == "S(0,1)"
    assert isolated_points(empty_window(A)) == []


def test_simple_functor_witness_values(A):
    probe = simple_functor_probe(A, 0, 1)
    assert functor_value(ObjectLabel(0, 1), probe, A) == 1
    for lab in (ObjectLabel(0, 0), ObjectLabel(0, 2), SimpleLabel(0)):
        assert functor_value(lab, probe, A) == 0


def window(A, labels, probes):
    return SpectrumWindow(A, labels, probes, range(-8, 9)).materialize()


def test_closure_examples(A):
    labels = [ObjectLabel(0, r) for r in range(3)] + [SimpleLabel(0)]
    X00 = string_complex(A, 0, 0)
    rep = closure_extra_point_check(window(A, labels, [("X(0,0)", X00)]), 8)
    assert rep.ok and rep.limit_label == SimpleLabel(0)
    pair = [("X(0,0)", X00), ("S-1 X(0,2)", shift(string_complex(A, 0, 2), -1))]
    assert closure_extra_point_check(window(A, labels, pair), 8).ok
    rep = closure_extra_point_check(window(A, labels[:3], pair), 8)
    assert rep.ok and rep.limit_label is None


def test_closure_on_enumerated_window(W3):
    rep = closure_extra_point_check(W3, 8)
    assert rep.ok and rep.counterexample == ()


def test_closed_length_sets(A):
    X00 = string_complex(A, 0, 0)
    points = [ObjectLabel(n, r) for n in range(-1, 2) for r in range(3)] + [SimpleLabel(s) for s in range(-1, 2)]
    sources = [(str(ObjectLabel(n, r)), string_complex(A, n, r)) for n in range(-1, 2) for r in range(3)]
    rep = closed_length_set_check(X00, 1, points, sources)
    assert rep.ok
    assert SimpleLabel(0) in rep.inside and ObjectLabel(0, 0) not in rep.inside
    rep = closed_length_set_check(X00, 0, points, sources)
    assert rep.ok and all(lab.function(A)(X00) == 0 for lab in rep.inside)
    rep = closed_length_set_check(X00, 2, points, sources)
    assert rep.ok and rep.inside == points


def test_rho_values(Px):
    cx = multiplication_cone(Px, (0, 1))
    at = lambda g, C: rho(PrimeDatum(Px, g)).function(Px)(C)  # noqa: E731
    assert at((0, 1), cx) == 1
    assert at((), cx) == 0
    assert at((0, 1), stalk(Px, 0)) == 1
    assert at((4, 1), cx) == 0


def test_rho_injectivity_examples(Px):
    x, x1, zero = PrimeDatum(Px, (0, 1)), PrimeDatum(Px, (4, 1)), PrimeDatum(Px, ())
    rep = rho_injectivity_check([x, x1])
    assert rep.ok and rep.separations[0][3:] == (1, 0)
    rep = rho_injectivity_check([x, zero])
    assert rep.ok and rep.separations[0][3:] == (1, 0)
    assert rho_injectivity_check([x]).ok
    assert rho_injectivity_check(default_primes(Px)).ok


def test_prime_datum_rejects_reducible(Px):
    with pytest.raises(ValueError):
        PrimeDatum(Px, (4, 0, 1))


def test_supp_examples(Px):
    primes = default_primes(Px)
    rep = supp_dichotomy_check(multiplication_cone(Px, (0, 1)), primes)
    assert rep.ok and rep.support == ["(x)"]
    rep = supp_dichotomy_check(stalk(Px, 0), primes)
    assert rep.ok and len(rep.support) == len(primes)
    rep = supp_dichotomy_check(cone(zero_map(stalk(Px, 0), stalk(Px, 0))).C, primes)
    assert rep.ok and len(rep.support) == len(primes)


def companion(F, f):
    d = len(f) - 1
    T = F.zeros((d, d))
    for i in range(1, d):
        T[i, i - 1] = F.one
    for i in range(d):
        T[i, d - 1] = F.element(-f[i])
    return T


@given(st.integers(0, 10 ** 6))
def test_residue_function_matches_module_oracle(seed):
    F = Field.prime(5)
    Px = CoeffAlgebra.poly_ring(F)
    X = random_poly_complex(Px, np.random.default_rng(seed), max_deg=3)
    primes = default_primes(Px)
    assert supp_dichotomy_check(X, primes).ok
    for q in primes[1:]:
        assert P.is_irreducible(q.generator, 5)
        oracle = ModuleFunction(Px, companion(F, q.generator)).profile(X)
        assert ResidueFunction(Px, q.generator).profile(X) == oracle
