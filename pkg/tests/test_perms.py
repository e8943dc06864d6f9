import itertools
import math
from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polyatrace.errors import CapExceededError
from polyatrace.perms import (Permutation, PermGroup, alternating_cycle_index, alternating_series_identity_check,
                              compose, cycle_index, cycle_index_series_symmetric, cycle_type, group_closure,
                              named_group)
from polyatrace.poly import MultiPoly, parse_poly, variable_names

KINDS = ["symmetric", "alternating", "cyclic", "dihedral", "trivial"]


def groups_up_to(n_max):
    for n in range(1, n_max + 1):
        for kind in KINDS:
            if kind == "dihedral" and n < 3:
                continue
            yield named_group(kind, n)


def enumerated_index(n, keep=lambda images: True):
    """Cycle index from raw image tuples, with cycle counting done inline."""
    counts = Counter()
    total = 0
    for images in itertools.permutations(range(1, n + 1)):
        if not keep(images):
            continue
        total += 1
        seen, m = set(), [0] * n
        for start in range(1, n + 1):
            if start in seen:
                continue
            length, j = 0, start
            while j not in seen:
                seen.add(j)
                j = images[j - 1]
                length += 1
            m[length - 1] += 1
        counts[tuple(m)] += 1
    return MultiPoly(variable_names("x", n), {m: Fraction(c, total) for m, c in counts.items()})


def is_even(images):
    inversions = sum(1 for i in range(len(images)) for j in range(i + 1, len(images)) if images[i] > images[j])
    return inversions % 2 == 0


def test_compose_examples():
    t12 = Permutation.parse("(1 2)", 3)
    t23 = Permutation.parse("(2 3)", 3)
    assert compose(t12, t12).is_identity()
    assert compose(t12, Permutation.identity(3)) == t12
    assert compose(t12, t23).images == (2, 3, 1)
    with pytest.raises(ValueError):
        compose(t12, Permutation.identity(4))


def test_parse_both_notations():
    assert Permutation.parse("[2,1,3]") == Permutation.parse("(1 2)", 3)
    assert str(Permutation.parse("[2,3,1]")) == "(1 2 3)"
    assert str(Permutation.identity(3)) == "()"
    with pytest.raises(ValueError):
        Permutation([1, 1, 2])


def test_cycle_type_examples():
    assert cycle_type(Permutation.identity(3)) == (3, 0, 0)
    assert cycle_type(Permutation.parse("(1 2)(3 4)", 4)) == (0, 2, 0, 0)
    assert cycle_type(Permutation.parse("(1 2 3)", 4)) == (1, 0, 1, 0)


def test_closure_examples():
    assert len(group_closure([], 3)) == 1
    assert len(group_closure([Permutation.parse("(1 2 3 4)")], 4)) == 4
    gens = [Permutation.parse("(1 2)", 3), Permutation.parse("(1 2 3)")]
    assert len(group_closure(gens, 3)) == 6


def test_closure_cap():
    gens = [Permutation.parse("(1 2)", 6), Permutation.parse("(1 2 3 4 5 6)")]
    with pytest.raises(CapExceededError):
        group_closure(gens, 6, size_cap=100)
    with pytest.raises(CapExceededError):
        named_group("symmetric", 7, size_cap=1000)


def test_named_group_sizes():
    assert len(named_group("symmetric", 3)) == 6
    a3 = named_group("alternating", 3)
    assert {str(g) for g in a3} == {"()", "(1 2 3)", "(1 3 2)"}
    assert len(named_group("dihedral", 4)) == 8
    with pytest.raises(ValueError):
        named_group("dihedral", 2)
    with pytest.raises(ValueError):
        named_group("quaternion", 4)


@pytest.mark.parametrize("G", list(groups_up_to(5)), ids=repr)
def test_group_axioms(G):
    assert G.is_closed()
    assert Permutation.identity(G.n) in G
    assert all(g.inverse() in G for g in G)
    assert math.factorial(G.n) % len(G) == 0
    assert all(sum(i * m for i, m in enumerate(g.cycle_type(), 1)) == G.n for g in G)


def test_cycle_index_examples():
    assert str(cycle_index(named_group("symmetric", 2))) == "1/2*x_1^2 + 1/2*x_2"
    assert str(cycle_index(named_group("symmetric", 3))) == "1/6*x_1^3 + 1/2*x_1*x_2 + 1/3*x_3"
    assert str(cycle_index(named_group("alternating", 3))) == "1/3*x_1^3 + 2/3*x_3"
    assert cycle_index(named_group("cyclic", 4)) == parse_poly(
        "(x_1^4 + x_2^2 + 2*x_4)/4", variable_names("x", 4))


@pytest.mark.parametrize("n", range(1, 7))
def test_symmetric_series_matches_enumeration(n):
    series = cycle_index_series_symmetric(6)
    assert series[n].with_variables(variable_names("x", n)) == enumerated_index(n)
    assert cycle_index(named_group("symmetric", n)) == enumerated_index(n)


def test_symmetric_series_low_coefficients():
    series = cycle_index_series_symmetric(6)
    assert series[0] == 1
    assert str(series[2].with_variables(variable_names("x", 2))) == "1/2*x_1^2 + 1/2*x_2"


@pytest.mark.parametrize("n", range(2, 7))
def test_alternating_index_matches_enumeration(n):
    assert alternating_cycle_index(n) == enumerated_index(n, is_even)
    assert alternating_cycle_index(n) == cycle_index(named_group("alternating", n))


def test_alternating_small_cases():
    assert str(alternating_cycle_index(2)) == "x_1^2"
    with pytest.raises(ValueError):
        alternating_cycle_index(1)


@pytest.mark.parametrize("N", [2, 3, 6])
def test_alternating_series_identity(N):
    assert alternating_series_identity_check(N)


@pytest.mark.parametrize("G", list(groups_up_to(5)), ids=repr)
def test_cycle_index_normalized(G):
    z = cycle_index(G)
    assert z.evaluate({v: 1 for v in z.variables}) == 1


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 5).flatmap(lambda n: st.tuples(st.just(n), st.permutations(range(1, n + 1)),
                                                      st.permutations(range(1, n + 1)))))
def test_composition_is_pointwise(data):
    n, a, b = data
    g, h = Permutation(a), Permutation(b)
    gh = g * h
    assert all(gh(i) == g(h(i)) for i in range(1, n + 1))
    assert (g * g.inverse()).is_identity()
    assert (g * h).sign() == g.sign() * h.sign()


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 6).flatmap(lambda n: st.permutations(range(1, n + 1))))
def test_cycle_type_is_conjugation_invariant(images):
    g = Permutation(images)
    w = Permutation(list(reversed(images)))
    assert (w * g * w.inverse()).cycle_type() == g.cycle_type()
