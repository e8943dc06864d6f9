"""Colorings up to symmetry, quotient point counts and zeta series."""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Tuple

from .errors import OracleMismatchError
from .perms import PermGroup, alternating_cycle_index, cycle_index, symmetric_cycle_index
from .poly import MultiPoly, variable_names
from .series import TruncatedSeries


@dataclass(frozen=True)
class CountVector:
    """Point counts ``N_r = |X(F_{q^r})|`` for ``r = 1..len(counts)``."""

    counts: Tuple[int, ...]
    q: int | None = None

    def __init__(self, counts: Iterable[int], q: int | None = None):
        counts = tuple(int(c) for c in counts)
        if not counts:
            raise ValueError("a count vector needs at least N_1")
        if any(c < 0 for c in counts):
            raise ValueError(f"negative point count in {counts}")
        object.__setattr__(self, "counts", counts)
        object.__setattr__(self, "q", q)

    def __len__(self) -> int:
        return len(self.counts)

    def __getitem__(self, r: int) -> int:
        """1-based: ``cv[r] == |X(F_{q^r})|``."""
        if r < 1:
            raise IndexError("count vectors are indexed from 1")
        return self.counts[r - 1]


def _as_counts(counts) -> CountVector:
    return counts if isinstance(counts, CountVector) else CountVector(counts)


def _evaluate_integral(z: MultiPoly, values: Dict[str, int]) -> int:
    value = z.evaluate(values)
    if value.denominator != 1:
        raise ValueError(f"cycle index evaluated to the non-integer {value}; inconsistent count vector")
    return int(value)


def polya_count(G: PermGroup, colors: int) -> int:
    """Colorings of ``n`` slots with ``colors`` colors up to ``G``: ``Z_G(c, ..., c)``."""
    if colors < 0:
        raise ValueError("number of colors must be nonnegative")
    z = cycle_index(G)
    return _evaluate_integral(z, {v: colors for v in z.variables})


def polya_weight_poly(G: PermGroup, r_colors: int) -> MultiPoly:
    """``Z_G(p_1, ..., p_n)`` with power sums ``p_j = t_1^j + ... + t_r^j``."""
    if r_colors < 1:
        raise ValueError("need at least one color")
    variables = variable_names("t", r_colors)
    ts = [MultiPoly.var(v, variables) for v in variables]
    power_sums = {f"x_{j}": sum((t ** j for t in ts), MultiPoly.zero(variables)) for j in range(1, G.n + 1)}
    return cycle_index(G).substitute(power_sums, variables)


def orbit_census(G: PermGroup, colors: int) -> Counter:
    """Brute force: orbits of ``G`` on ``{0..colors-1}^n``, keyed by color multiplicities."""
    census: Counter = Counter()
    seen = set()
    for coloring in itertools.product(range(colors), repeat=G.n):
        if coloring in seen:
            continue
        # g moves the color at slot i to slot g(i)
        orbit = {tuple(coloring[g.images.index(j + 1)] for j in range(G.n)) for g in G}
        seen |= orbit
        census[tuple(coloring.count(c) for c in range(colors))] += 1
    return census


def burnside_orbit_count(G: PermGroup, colors: int) -> int:
    return sum(orbit_census(G, colors).values())


def quotient_point_count(G: PermGroup, counts) -> int:
    """``|(X^n/G)(F_q)| = Z_G(N_1, ..., N_n)``."""
    counts = _as_counts(counts)
    if len(counts) < G.n:
        raise ValueError(f"need {G.n} point counts, got {len(counts)}")
    z = cycle_index(G)
    return _evaluate_integral(z, {f"x_{r}": counts[r] for r in range(1, G.n + 1)})


def _symmetric_value(n: int, counts: CountVector) -> Fraction:
    if n == 0:
        return Fraction(1)
    return symmetric_cycle_index(n).evaluate({f"x_{r}": counts[r] for r in range(1, n + 1)})


def _alternating_value(n: int, counts: CountVector) -> Fraction:
    if n < 2:
        return Fraction(counts[1] ** n)
    return alternating_cycle_index(n).evaluate({f"x_{r}": counts[r] for r in range(1, n + 1)})


def zeta_from_counts(counts, N: int) -> TruncatedSeries:
    """``Z_X(t) = exp(sum_r N_r t^r / r)`` to order ``N``.

    Each coefficient is checked against ``Z_{S_n}(N_1, ..., N_n)``.  The
    check is over the rationals: vectors that are not point counts of any
    variety still satisfy the identity, they just give fractional values.
    """
    counts = _as_counts(counts)
    if len(counts) < N:
        raise ValueError(f"need {N} point counts, got {len(counts)}")
    inner = [0] + [Fraction(counts[r], r) for r in range(1, N + 1)]
    zeta = TruncatedSeries(inner, N).exp()
    for n in range(N + 1):
        if zeta[n] != _symmetric_value(n, counts):
            raise OracleMismatchError(f"zeta coefficient t^{n} disagrees with the Sym^{n} count")
    return zeta


def alt_zeta_from_counts(counts, N: int) -> TruncatedSeries:
    """``Z_X(t) + 1/Z_X(-t) - 1 - N_1 t``: counts of ``X^n / A_n``."""
    counts = _as_counts(counts)
    zeta = zeta_from_counts(counts, N)
    alt = zeta + zeta.scale_t(-1).inverse() - 1 - TruncatedSeries([0, counts[1]], N)
    for n in range(N + 1):
        if alt[n] != _alternating_value(n, counts):
            raise OracleMismatchError(f"alternating zeta coefficient t^{n} disagrees with the A_{n} count")
    return alt


def series_integers(series: TruncatedSeries) -> list:
    """Coefficients of a numeric series as Python ints (must be integral)."""
    out = []
    for c in series:
        value = c.constant_value()
        if not c.is_constant() or value.denominator != 1:
            raise ValueError(f"coefficient {c} is not an integer")
        out.append(int(value))
    return out
