from fractions import Fraction

import pytest
from hypothesis import given, settings

from polyatrace.matrix import SquareMatrix, det_one_minus_tA, determinant
from polyatrace.poly import MultiPoly, parse_poly
from polyatrace.series import TruncatedSeries

from conftest import rational_matrices

T = ("t",)
t = MultiPoly.var("t", T)


def cofactor_det(rows):
    """Laplace expansion along the first row; an oracle independent of Newton's identities."""
    n = len(rows)
    if n == 0:
        return MultiPoly.one(T)
    if n == 1:
        return rows[0][0]
    total = MultiPoly.zero(T)
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in rows[1:]]
        term = rows[0][j] * cofactor_det(minor)
        total = total + (term if j % 2 == 0 else -term)
    return total


def naive_det_one_minus_tA(A: SquareMatrix) -> MultiPoly:
    n = A.dim
    rows = [[(1 if i == j else 0) - t * A[i, j].constant_value() for j in range(n)] for i in range(n)]
    rows = [[e if isinstance(e, MultiPoly) else MultiPoly.constant(e, T) for e in row] for row in rows]
    return cofactor_det(rows)


def test_one_by_one():
    assert det_one_minus_tA(SquareMatrix([[2]])) == 1 - 2 * t


def test_swap_matrix():
    assert det_one_minus_tA(SquareMatrix([[0, 1], [1, 0]])) == 1 - t ** 2


def test_identity():
    assert det_one_minus_tA(SquareMatrix.identity(2)) == (1 - t) ** 2


def test_empty_matrix():
    assert det_one_minus_tA(SquareMatrix([])) == MultiPoly.one(T)
    assert determinant(SquareMatrix([])) == 1


def test_max_degree_precondition():
    with pytest.raises(ValueError):
        det_one_minus_tA(SquareMatrix.identity(3), max_degree=2)


def test_polynomial_entries():
    A = SquareMatrix([[parse_poly("x", ["x"]), 1], [0, parse_poly("2*x", ["x"])]])
    expected = parse_poly("(1 - x*t)*(1 - 2*x*t)", ["x", "t"])
    assert det_one_minus_tA(A) == expected
    assert determinant(A) == parse_poly("2*x^2", ["x"])


def test_matrix_power_and_trace():
    A = SquareMatrix([[1, 1], [0, 1]])
    assert A ** 3 == SquareMatrix([[1, 3], [0, 1]])
    assert A.power_traces(3) == [2, 2, 2]


@settings(max_examples=60, deadline=None)
@given(rational_matrices())
def test_newton_matches_cofactor(A):
    assert det_one_minus_tA(A) == naive_det_one_minus_tA(A)


@settings(max_examples=40, deadline=None)
@given(rational_matrices())
def test_exp_det_identity(A):
    N = 6
    inner = [0] + [A.power_traces(r)[-1] * Fraction(1, r) for r in range(1, N + 1)]
    lhs = TruncatedSeries(inner, N).exp()
    det = TruncatedSeries.from_poly(det_one_minus_tA(A), "t", N)
    assert lhs * det == TruncatedSeries.one(N)


@settings(max_examples=40, deadline=None)
@given(rational_matrices())
def test_determinant_matches_cofactor(A):
    rows = [[MultiPoly.constant(A[i, j].constant_value(), T) for j in range(A.dim)] for i in range(A.dim)]
    assert determinant(A) == cofactor_det(rows).constant_value()
