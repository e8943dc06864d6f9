"""Closed-form Lefschetz polynomials on invariants and their generating series.

Every function here is cycle-index or determinant algebra; the brute-force
counterpart lives in :mod:`polyatrace.kunneth`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Mapping, Sequence, Tuple

from .graded import (HODGE_VARIABLES, U, GradedMap, betti_to_identity_map, hodge_polynomial,
                     hodge_to_map, lefschetz, lefschetz_at, lefschetz_variables)
from .matrix import det_one_minus_tA
from .perms import Permutation, PermGroup, cycle_index
from .poly import MultiPoly
from .series import TruncatedSeries

T = "t"


@dataclass(frozen=True)
class RationalGF:
    """``numerator / denominator`` as polynomials in ``t``, plus the expansion to order ``N``."""

    numerator: MultiPoly
    denominator: MultiPoly
    expansion: TruncatedSeries

    def check(self) -> bool:
        N = self.expansion.order
        num = TruncatedSeries.from_poly(self.numerator, T, N)
        den = TruncatedSeries.from_poly(self.denominator, T, N)
        return self.expansion * den == num


def conjugacy_trace_formula(g: Permutation, phi: GradedMap) -> MultiPoly:
    """``prod_r L_{u^r}(phi^r)^{m_r(g)}``."""
    result = MultiPoly.one(lefschetz_variables(phi))
    for r, m in enumerate(g.cycle_type(), start=1):
        if m:
            result = result * lefschetz_at(phi, r) ** m
    return result


def invariant_lefschetz_formula(G: PermGroup, phi: GradedMap, n: int | None = None) -> MultiPoly:
    """``Z_G(L_u(phi), L_{u^2}(phi^2), ..., L_{u^n}(phi^n))``."""
    if n is not None and n != G.n:
        raise ValueError(f"group acts on {G.n} points, not {n}")
    z = cycle_index(G)
    variables = lefschetz_variables(phi)
    assignment = {f"x_{r}": lefschetz_at(phi, r) for r in range(1, G.n + 1)}
    return z.substitute(assignment, variables)


def _degree_factors(phi: GradedMap, sign: int = 1) -> Dict[int, MultiPoly]:
    """``det(I - sign * phi_i u^i t)`` for each degree ``i`` with a nonzero block."""
    variables = lefschetz_variables(phi)
    u = MultiPoly.var(U, variables)
    out = {}
    for i, block in enumerate(phi.blocks):
        if block.dim:
            A = block.with_variables(variables).scale(u ** i * sign)
            out[i] = det_one_minus_tA(A, t=T)
    return out


def sym_generating_function(phi: GradedMap, N: int) -> RationalGF:
    """``sum_n L_u(phi^{(x)n} | S_n-invariants) t^n`` as a ratio of determinants.

    Numerator: ``prod_{i odd} det(I - phi_i u^i t)``;
    denominator: ``prod_{i even} det(I - phi_i u^i t)``.
    """
    variables = lefschetz_variables(phi) + (T,)
    numerator = MultiPoly.one(variables)
    denominator = MultiPoly.one(variables)
    for i, factor in _degree_factors(phi).items():
        if i % 2:
            numerator = numerator * factor
        else:
            denominator = denominator * factor
    num = TruncatedSeries.from_poly(numerator, T, N)
    den = TruncatedSeries.from_poly(denominator, T, N)
    return RationalGF(numerator, denominator, num * den.inverse())


def _linear_term(poly: MultiPoly, N: int) -> TruncatedSeries:
    return TruncatedSeries([0, poly], N, poly.variables)


def alt_generating_function(phi: GradedMap, N: int) -> TruncatedSeries:
    """``S(t) + 1/S(-t) - 1 - L_u(phi) t`` with ``S`` the symmetric-power series.

    The ``t^0`` and ``t^1`` coefficients are those of the trivial groups
    ``A_0`` and ``A_1``; every ``t^n`` with ``n >= 2`` is the ``A_n`` value.
    """
    S = sym_generating_function(phi, N).expansion
    return S + S.scale_t(-1).inverse() - 1 - _linear_term(lefschetz(phi), N)


def alt_generating_function_raw(phi: GradedMap, N: int) -> TruncatedSeries:
    """Literal reading that subtracts ``1 + L_u(phi)`` from the constant term only."""
    S = sym_generating_function(phi, N).expansion
    return S + S.scale_t(-1).inverse() - 1 - lefschetz(phi)


def alt_generating_function_det(phi: GradedMap, N: int) -> TruncatedSeries:
    """The same series from the explicit ``det(I -+ phi_i u^i t)`` products."""
    variables = lefschetz_variables(phi)
    first = TruncatedSeries.one(N, variables)
    second = TruncatedSeries.one(N, variables)
    minus = _degree_factors(phi, 1)
    plus = _degree_factors(phi, -1)
    for i in minus:
        sign = (-1) ** i
        first = first * TruncatedSeries.from_poly(minus[i], T, N) ** (-sign)
        second = second * TruncatedSeries.from_poly(plus[i], T, N) ** sign
    return first + second - 1 - _linear_term(lefschetz(phi), N)


def quotient_poincare(G: PermGroup, betti: Sequence[int], n: int | None = None) -> MultiPoly:
    """``chi_u(X^n / G)`` from the Betti numbers of ``X``."""
    return invariant_lefschetz_formula(G, betti_to_identity_map(betti), n)


def euler_series(chi: int, N: int) -> TruncatedSeries:
    """``(1/(1-t))^chi``: the ``u = 1`` specialization for symmetric powers."""
    return TruncatedSeries([1, -1], N) ** (-chi)


def alt_euler_series(chi: int, N: int) -> TruncatedSeries:
    """``(1/(1-t))^chi + (1/(1+t))^(-chi) - 1 - chi t``."""
    return (TruncatedSeries([1, -1], N) ** (-chi) + TruncatedSeries([1, 1], N) ** chi
            - 1 - TruncatedSeries([0, chi], N))


def _hodge_factor_series(hodge: Mapping[Tuple[int, int], int], N: int, sign: int) -> TruncatedSeries:
    """``prod_{p,q} (1 / (1 - sign x^p y^q u^{p+q} t))^{(-1)^{p+q} h^{p,q} * (+-1)}``."""
    variables = HODGE_VARIABLES + (U,)
    out = TruncatedSeries.one(N, variables)
    for (p, q), h in sorted(hodge.items()):
        if not h:
            continue
        mono = MultiPoly.monomial({"x": p, "y": q, U: p + q}, sign, variables)
        factor = TruncatedSeries([1, -mono], N, variables)
        exponent = -((-1) ** (p + q)) * h
        out = out * factor ** (exponent if sign == 1 else -exponent)
    return out


def cheah_hodge_series(hodge: Mapping[Tuple[int, int], int], N: int) -> TruncatedSeries:
    """``sum_n chi_u(Sym^n X, x, y) t^n`` as a product over Hodge numbers."""
    return _hodge_factor_series(hodge, N, 1)


def alt_cheah_hodge_series(hodge: Mapping[Tuple[int, int], int], N: int) -> TruncatedSeries:
    """Alternating-power version: ``P(t) + P'(t) - 1 - chi_u(X, x, y) t``."""
    first = _hodge_factor_series(hodge, N, 1)
    second = _hodge_factor_series(hodge, N, -1)
    return first + second - 1 - _linear_term(hodge_polynomial(hodge), N)


def hodge_quotient(G: PermGroup, hodge: Mapping[Tuple[int, int], int], n: int | None = None) -> MultiPoly:
    """``Z_G(chi_u(X,x,y), chi_{u^2}(X,x^2,y^2), ...)`` over ``x, y, u``."""
    if n is not None and n != G.n:
        raise ValueError(f"group acts on {G.n} points, not {n}")
    chi = hodge_polynomial(hodge)
    variables = chi.variables
    powered = {}
    for r in range(1, G.n + 1):
        scaled = {v: MultiPoly.var(v, variables) ** r for v in variables}
        powered[f"x_{r}"] = chi.substitute(scaled, variables)
    return cycle_index(G).substitute(powered, variables)


def hodge_invariant_formula(G: PermGroup, hodge: Mapping[Tuple[int, int], int]) -> MultiPoly:
    """Same quantity through the generic trace formula on the Hodge operator."""
    return invariant_lefschetz_formula(G, hodge_to_map(hodge))


def specialize_u(series: TruncatedSeries, value: int | Fraction = 1) -> TruncatedSeries:
    return series.evaluate({U: value})
