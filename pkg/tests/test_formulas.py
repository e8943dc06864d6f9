import random
from fractions import Fraction

import pytest
from hypothesis import given, settings

from polyatrace.checks import check_instance, instance_set
from polyatrace.formulas import (alt_cheah_hodge_series, alt_euler_series, alt_generating_function,
                                 alt_generating_function_det, alt_generating_function_raw, cheah_hodge_series,
                                 conjugacy_trace_formula, euler_series, hodge_invariant_formula, hodge_quotient,
                                 invariant_lefschetz_formula, quotient_poincare, specialize_u,
                                 sym_generating_function)
from polyatrace.graded import GradedMap, betti_to_identity_map, hodge_polynomial, hodge_to_map, lefschetz
from polyatrace.instances import random_graded_map
from polyatrace.kunneth import invariant_lefschetz_oracle
from polyatrace.perms import Permutation, named_group
from polyatrace.poly import parse_poly
from polyatrace.series import TruncatedSeries

from conftest import graded_maps

U = ("u",)
XYU = ("x", "y", "u")
P1 = betti_to_identity_map([1, 0, 1])
ELLIPTIC = {(0, 0): 1, (1, 0): 1, (0, 1): 1, (1, 1): 1}


def P(text, variables=U):
    return parse_poly(text, variables)


def test_conjugacy_formula_examples():
    phi = random_graded_map(random.Random(1))
    assert conjugacy_trace_formula(Permutation.identity(3), phi) == lefschetz(phi) ** 3
    swap = Permutation.parse("(1 2)", 2)
    assert conjugacy_trace_formula(swap, betti_to_identity_map([0, 2])) == P("-2*u^2")
    assert conjugacy_trace_formula(Permutation.parse("(1 2 3)"), P1) == P("1 + u^6")


def test_invariant_formula_examples():
    assert invariant_lefschetz_formula(named_group("symmetric", 2), P1) == P("1 + u^2 + u^4")
    a3 = invariant_lefschetz_formula(named_group("alternating", 3), P1)
    assert a3 == P("((1+u^2)^3 + 2*(1+u^6))/3")
    assert a3 == invariant_lefschetz_oracle(named_group("alternating", 3), P1, 3)
    phi = random_graded_map(random.Random(2))
    assert invariant_lefschetz_formula(named_group("trivial", 1), phi) == lefschetz(phi)


def test_formula_matches_oracle_on_seeded_instances():
    for G, phi in instance_set(seed=4, ns=(1, 2, 3), max_dims=(2, 2, 1, 1), maps_per_group=2):
        assert check_instance(G, phi).ok, (G, phi.dims)


def test_conjugacy_invariance():
    rng = random.Random(8)
    for n in range(2, 5):
        phi = random_graded_map(rng)
        S = list(named_group("symmetric", n))
        for g in S:
            w = rng.choice(S)
            assert conjugacy_trace_formula(w * g * w.inverse(), phi) == conjugacy_trace_formula(g, phi)


def test_macdonald_projective_line():
    gf = sym_generating_function(P1, 10)
    assert gf.numerator == 1
    assert gf.denominator == parse_poly("(1 - t)*(1 - u^2*t)", ["u", "t"])
    for n in range(11):
        assert gf.expansion[n] == sum((P(f"u^{2 * j}") for j in range(n + 1)), P("0"))
    assert gf.check()


def test_point_and_scalar_cases():
    point = sym_generating_function(betti_to_identity_map([1]), 6).expansion
    assert point == euler_series(1, 6).with_variables(U)
    q_map = GradedMap.from_rows([[["q"]]])
    gf = sym_generating_function(q_map, 6)
    assert all(gf.expansion[n] == parse_poly(f"q^{n}", ["q", "u"]) for n in range(7))


@settings(max_examples=15, deadline=None)
@given(graded_maps())
def test_generating_functions_match_cycle_indices(phi):
    N = 4
    sym = sym_generating_function(phi, N)
    alt = alt_generating_function(phi, N)
    assert sym.check()
    for n in range(1, N + 1):
        assert sym.expansion[n] == invariant_lefschetz_formula(named_group("symmetric", n), phi)
        if n >= 2:
            assert alt[n] == invariant_lefschetz_formula(named_group("alternating", n), phi)
    assert alt[0] == 1 and alt[1] == lefschetz(phi)
    assert alt == alt_generating_function_det(phi, N)


def test_raw_alternating_reading_differs_only_at_low_order():
    phi = random_graded_map(random.Random(21))
    N = 5
    graded, raw = alt_generating_function(phi, N), alt_generating_function_raw(phi, N)
    L = lefschetz(phi)
    assert raw[0] == graded[0] - L and raw[1] == graded[1] + L
    assert all(raw[n] == graded[n] for n in range(2, N + 1))


def test_alternating_scalar_case():
    q_map = GradedMap.from_rows([[["q"]]])
    alt = alt_generating_function(q_map, 6)
    assert all(alt[n] == parse_poly(f"q^{n}", ["q", "u"]) for n in range(7))


@pytest.mark.parametrize("betti", [[1], [1, 0, 1], [1, 2, 1], [1, 4, 1], [2, 3], [0, 1]])
def test_euler_specializations(betti):
    N = 6
    chi = sum((-1) ** i * d for i, d in enumerate(betti))
    phi = betti_to_identity_map(betti)
    sym = specialize_u(sym_generating_function(phi, N).expansion)
    assert sym == euler_series(chi, N)
    alt = specialize_u(alt_generating_function(phi, N))
    assert alt == alt_euler_series(chi, N)


def test_quotient_poincare_examples():
    assert quotient_poincare(named_group("symmetric", 2), [1, 0, 1]) == P("1 + u^2 + u^4")
    assert quotient_poincare(named_group("cyclic", 4), [2]) == 6
    assert quotient_poincare(named_group("symmetric", 3), [1]) == 1


def test_cheah_examples():
    N = 4
    assert cheah_hodge_series({(0, 0): 1}, N) == TruncatedSeries([1] * (N + 1), N, XYU)
    p1 = cheah_hodge_series({(0, 0): 1, (1, 1): 1}, 2)
    assert p1[2] == parse_poly("1 + x*y*u^2 + x^2*y^2*u^4", XYU)


def test_cheah_matches_generic_formula_and_oracle():
    N = 3
    series = cheah_hodge_series(ELLIPTIC, N)
    alt = alt_cheah_hodge_series(ELLIPTIC, N)
    phi = hodge_to_map(ELLIPTIC)
    for n in range(1, N + 1):
        G = named_group("symmetric", n)
        assert series[n] == hodge_quotient(G, ELLIPTIC) == hodge_invariant_formula(G, ELLIPTIC)
        if n >= 2:
            assert alt[n] == hodge_quotient(named_group("alternating", n), ELLIPTIC)
    assert series[2] == invariant_lefschetz_oracle(named_group("symmetric", 2), phi, 2)


def test_hodge_quotient_small_groups():
    chi = hodge_polynomial(ELLIPTIC)
    assert hodge_quotient(named_group("trivial", 2), ELLIPTIC) == chi ** 2
    assert hodge_quotient(named_group("alternating", 2), ELLIPTIC) == chi ** 2


def test_group_degree_mismatch():
    with pytest.raises(ValueError):
        invariant_lefschetz_formula(named_group("symmetric", 3), P1, n=2)
