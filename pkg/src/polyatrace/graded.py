"""Finite graded vector spaces, degree-0 endomorphisms and Lefschetz polynomials.

The Lefschetz polynomial of ``phi = (+)_i phi_i`` is
``L_u(phi) = sum_i (-u)^i Tr(phi_i)``; it lives on ``phi.variables + ("u",)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from .matrix import SquareMatrix
from .poly import MultiPoly, Scalar, parse_poly

U = "u"


@dataclass(frozen=True)
class GradedSpace:
    dims: Tuple[int, ...]

    def __init__(self, dims: Iterable[int]):
        dims = [int(d) for d in dims]
        if any(d < 0 for d in dims):
            raise ValueError(f"negative dimension in {dims}")
        while dims and dims[-1] == 0:
            dims.pop()
        object.__setattr__(self, "dims", tuple(dims))

    @property
    def top_degree(self) -> int:
        return len(self.dims) - 1

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def euler_characteristic(self) -> int:
        return sum((-1) ** i * d for i, d in enumerate(self.dims))

    def basis(self) -> List[Tuple[int, int]]:
        """Homogeneous basis vectors as ``(degree, index within degree)``."""
        return [(i, k) for i, d in enumerate(self.dims) for k in range(d)]


class GradedMap:
    """A graded endomorphism given by one square block per degree."""

    __slots__ = ("blocks", "variables", "space")

    def __init__(self, blocks: Iterable[SquareMatrix], variables: Sequence[str] | None = None):
        blocks = list(blocks)
        while blocks and blocks[-1].dim == 0:
            blocks.pop()
        if variables is None:
            variables = []
            for b in blocks:
                for v in b.variables:
                    if v not in variables:
                        variables.append(v)
        variables = tuple(variables)
        if U in variables:
            raise ValueError(f"{U!r} is reserved for the Lefschetz variable")
        self.blocks: Tuple[SquareMatrix, ...] = tuple(b.with_variables(variables) for b in blocks)
        self.variables = variables
        self.space = GradedSpace(b.dim for b in self.blocks)

    @classmethod
    def identity(cls, space: GradedSpace, variables: Sequence[str] = ()) -> "GradedMap":
        return cls([SquareMatrix.identity(d, variables) for d in space.dims], variables)

    @classmethod
    def from_rows(cls, blocks: Sequence[Sequence[Sequence]], variables: Sequence[str] | None = None) -> "GradedMap":
        """Build from nested row-major lists of numbers or polynomial strings."""
        if variables is None:
            names: list = []
            for block in blocks:
                for row in block:
                    for e in row:
                        if isinstance(e, str):
                            for v in parse_poly(e).variables:
                                if v not in names:
                                    names.append(v)
            variables = names
        variables = tuple(variables)

        def entry(e):
            if isinstance(e, MultiPoly):
                return e.with_variables(variables)
            if isinstance(e, str):
                return parse_poly(e, variables)
            return MultiPoly.constant(e, variables)

        return cls([SquareMatrix([[entry(e) for e in row] for row in block], variables) for block in blocks],
                   variables)

    @property
    def dims(self) -> Tuple[int, ...]:
        return self.space.dims

    def block(self, i: int) -> SquareMatrix:
        if i < len(self.blocks):
            return self.blocks[i]
        return SquareMatrix.identity(0, self.variables)

    def power(self, r: int) -> "GradedMap":
        if r < 1:
            raise ValueError("graded powers need r >= 1")
        return GradedMap([b ** r for b in self.blocks], self.variables)

    def compose(self, other: "GradedMap") -> "GradedMap":
        self._check(other)
        return GradedMap([a @ b for a, b in zip(self.blocks, other.blocks)], self.variables)

    def __add__(self, other: "GradedMap") -> "GradedMap":
        self._check(other)
        return GradedMap([a + b for a, b in zip(self.blocks, other.blocks)], self.variables)

    def scale(self, c: "MultiPoly | Scalar") -> "GradedMap":
        return GradedMap([b.scale(c) for b in self.blocks], self.variables)

    def _check(self, other: "GradedMap") -> None:
        if self.dims != other.dims:
            raise ValueError(f"graded dimensions differ: {self.dims} vs {other.dims}")
        if self.variables != other.variables:
            raise ValueError(f"variable lists differ: {self.variables} vs {other.variables}")

    def lefschetz(self) -> MultiPoly:
        return lefschetz(self)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedMap):
            return NotImplemented
        return self.variables == other.variables and self.blocks == other.blocks

    def __hash__(self) -> int:
        return hash((self.variables, self.blocks))

    def __repr__(self) -> str:
        return f"GradedMap(dims={self.dims}, variables={self.variables})"


def lefschetz_variables(phi: GradedMap) -> Tuple[str, ...]:
    return phi.variables + (U,)


def lefschetz_at(phi: GradedMap, r: int = 1) -> MultiPoly:
    """``L_{u^r}(phi^r) = sum_i (-u^r)^i Tr(phi_i^r)``."""
    if r < 1:
        raise ValueError("r must be at least 1")
    variables = lefschetz_variables(phi)
    minus_ur = -MultiPoly.var(U, variables) ** r
    acc = MultiPoly.zero(variables)
    for i, block in enumerate(phi.blocks):
        if block.dim:
            tr = (block ** r).trace().with_variables(variables)
            acc = acc + tr * minus_ur ** i
    return acc


def lefschetz(phi: GradedMap) -> MultiPoly:
    """``L_u(phi) = sum_i (-u)^i Tr(phi_i)``."""
    return lefschetz_at(phi, 1)


def graded_power(phi: GradedMap, r: int) -> GradedMap:
    return phi.power(r)


def betti_to_identity_map(betti: Sequence[int]) -> GradedMap:
    """The identity on a space with the given Betti numbers."""
    return GradedMap.identity(GradedSpace(betti))


HODGE_VARIABLES = ("x", "y")


def hodge_to_map(hodge: Mapping[Tuple[int, int], int]) -> GradedMap:
    """The operator ``(+)_{p,q} x^p y^q id`` on ``H^{p,q}``, graded by ``p+q``.

    Its Lefschetz polynomial is ``sum h^{p,q} x^p y^q (-u)^{p+q}``.
    """
    by_degree: Dict[int, List[MultiPoly]] = {}
    for (p, q), h in sorted(hodge.items()):
        if h < 0 or p < 0 or q < 0:
            raise ValueError(f"invalid Hodge entry h^({p},{q}) = {h}")
        mono = MultiPoly.monomial({"x": p, "y": q}, 1, HODGE_VARIABLES)
        by_degree.setdefault(p + q, []).extend([mono] * h)
    top = max(by_degree, default=-1)
    blocks = [SquareMatrix.diagonal(by_degree.get(i, []), HODGE_VARIABLES) for i in range(top + 1)]
    return GradedMap(blocks, HODGE_VARIABLES)


def hodge_polynomial(hodge: Mapping[Tuple[int, int], int]) -> MultiPoly:
    """``chi_u(X, x, y) = sum h^{p,q} x^p y^q (-u)^{p+q}`` written out directly."""
    variables = HODGE_VARIABLES + (U,)
    terms = {}
    for (p, q), h in hodge.items():
        if h:
            terms[(p, q, p + q)] = (-1) ** (p + q) * h
    return MultiPoly(variables, terms)


def hodge_numbers(poly: MultiPoly) -> Dict[Tuple[int, int], int]:
    """Invert :func:`hodge_polynomial`: read ``h^{p,q}`` from a polynomial in ``x, y, u``."""
    poly = poly.with_variables(HODGE_VARIABLES + (U,))
    out = {}
    for (p, q, i), c in poly.items():
        if i != p + q:
            raise ValueError(f"monomial x^{p} y^{q} u^{i} is not of Hodge type")
        value = c * (-1) ** i
        if value.denominator != 1:
            raise ValueError(f"non-integral Hodge number {value}")
        out[(p, q)] = int(value)
    return dict(sorted(out.items()))


def align_maps(*maps: GradedMap) -> List[GradedMap]:
    """Re-express graded maps over a common variable list."""
    names: list = []
    for m in maps:
        for v in m.variables:
            if v not in names:
                names.append(v)
    return [GradedMap(m.blocks, names) for m in maps]


__all__ = [
    "U", "GradedSpace", "GradedMap", "lefschetz", "lefschetz_at", "graded_power",
    "betti_to_identity_map", "hodge_to_map", "hodge_polynomial", "hodge_numbers",
    "HODGE_VARIABLES", "align_maps",
]
