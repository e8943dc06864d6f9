import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import strategies as st

from polyatrace.graded import GradedMap
from polyatrace.matrix import SquareMatrix
from polyatrace.poly import MultiPoly

VARS = ("a", "b", "c")


def to_sympy(p: MultiPoly):
    syms = sympy.symbols(p.variables) if p.variables else ()
    if len(p.variables) == 1:
        syms = (syms,)
    expr = sympy.Integer(0)
    for exps, c in p.items():
        term = sympy.Rational(c.numerator, c.denominator)
        for s, e in zip(syms, exps):
            term *= s ** e
        expr += term
    return sympy.expand(expr)


def from_sympy(expr, variables) -> MultiPoly:
    syms = sympy.symbols(variables)
    if len(variables) == 1:
        syms = (syms,)
    poly = sympy.Poly(sympy.expand(expr), *syms)
    terms = {}
    for exps, c in poly.terms():
        c = sympy.Rational(c)
        terms[tuple(exps)] = Fraction(int(c.p), int(c.q))
    return MultiPoly(variables, terms)


rationals = st.fractions(min_value=-9, max_value=9, max_denominator=9)


@st.composite
def polys(draw, variables=VARS, max_terms=4, max_exp=3):
    n = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(n):
        exps = tuple(draw(st.integers(0, max_exp)) for _ in variables)
        terms[exps] = draw(rationals)
    return MultiPoly(variables, terms)


@st.composite
def rational_matrices(draw, max_dim=4):
    d = draw(st.integers(0, max_dim))
    rows = [[draw(rationals) for _ in range(d)] for _ in range(d)]
    return SquareMatrix(rows)


@st.composite
def graded_maps(draw, max_dims=(2, 2, 2, 1), max_total=3):
    dims = [draw(st.integers(0, m)) for m in max_dims]
    while sum(dims) > max_total:
        i = max(range(len(dims)), key=lambda k: dims[k])
        dims[i] -= 1
    blocks = [SquareMatrix([[draw(rationals) for _ in range(d)] for _ in range(d)]) for d in dims]
    return GradedMap(blocks, ())


@pytest.fixture
def rng():
    return random.Random(20240601)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
