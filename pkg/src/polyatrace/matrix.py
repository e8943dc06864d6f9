"""Square matrices with polynomial entries and ``det(I - tA)`` via Newton's identities."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, List, Sequence

from .poly import MultiPoly, Scalar, align


class SquareMatrix:
    """An immutable ``dim x dim`` matrix of :class:`MultiPoly` entries."""

    __slots__ = ("dim", "variables", "_rows")

    def __init__(self, rows: Iterable[Iterable], variables: Sequence[str] | None = None):
        rows = [list(r) for r in rows]
        dim = len(rows)
        for r in rows:
            if len(r) != dim:
                raise ValueError("matrix is not square")
        if variables is None:
            flat = align(*[e for r in rows for e in r]) if dim else []
            variables = flat[0].variables if flat else ()
        variables = tuple(variables)

        def coerce(e):
            if isinstance(e, MultiPoly):
                return e.with_variables(variables)
            return MultiPoly.constant(e, variables)

        self.dim = dim
        self.variables = variables
        self._rows = tuple(tuple(coerce(e) for e in r) for r in rows)

    @classmethod
    def identity(cls, dim: int, variables: Sequence[str] = ()) -> "SquareMatrix":
        return cls([[1 if i == j else 0 for j in range(dim)] for i in range(dim)], variables)

    @classmethod
    def diagonal(cls, entries: Sequence, variables: Sequence[str] | None = None) -> "SquareMatrix":
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)], variables)

    @property
    def rows(self):
        return self._rows

    def __getitem__(self, ij):
        i, j = ij
        return self._rows[i][j]

    def with_variables(self, variables: Sequence[str]) -> "SquareMatrix":
        return SquareMatrix(self._rows, variables)

    def trace(self) -> MultiPoly:
        acc = MultiPoly.zero(self.variables)
        for i in range(self.dim):
            acc = acc + self._rows[i][i]
        return acc

    def __add__(self, other: "SquareMatrix") -> "SquareMatrix":
        self._check(other)
        return SquareMatrix([[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self._rows, other._rows)],
                            self.variables)

    def __neg__(self) -> "SquareMatrix":
        return self.scale(-1)

    def __sub__(self, other: "SquareMatrix") -> "SquareMatrix":
        return self + (-other)

    def scale(self, c: "MultiPoly | Scalar") -> "SquareMatrix":
        return SquareMatrix([[e * c for e in r] for r in self._rows], self.variables)

    def _check(self, other: "SquareMatrix") -> None:
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")
        if self.variables != other.variables:
            raise ValueError(f"variable lists differ: {self.variables} vs {other.variables}")

    def __matmul__(self, other: "SquareMatrix") -> "SquareMatrix":
        self._check(other)
        n = self.dim
        cols = list(zip(*other._rows)) if n else []
        out = []
        for r in self._rows:
            row = []
            for c in cols:
                acc = MultiPoly.zero(self.variables)
                for a, b in zip(r, c):
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return SquareMatrix(out, self.variables)

    def __pow__(self, k: int) -> "SquareMatrix":
        if k < 0:
            raise ValueError("matrix powers must be nonnegative")
        result = SquareMatrix.identity(self.dim, self.variables)
        base = self
        while k:
            if k & 1:
                result = result @ base
            k >>= 1
            if k:
                base = base @ base
        return result

    def power_traces(self, count: int) -> List[MultiPoly]:
        """``[Tr(A), Tr(A^2), ..., Tr(A^count)]``."""
        traces = []
        power = SquareMatrix.identity(self.dim, self.variables)
        for _ in range(count):
            power = power @ self
            traces.append(power.trace())
        return traces

    def __eq__(self, other) -> bool:
        if not isinstance(other, SquareMatrix):
            return NotImplemented
        return self.variables == other.variables and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self.variables, self._rows))

    def __repr__(self) -> str:
        body = "; ".join(", ".join(str(e) for e in r) for r in self._rows)
        return f"SquareMatrix([{body}])"


def elementary_from_power_sums(power_sums: Sequence[MultiPoly], variables: Sequence[str]) -> List[MultiPoly]:
    """Newton's identities: ``k e_k = sum_{i=1}^{k} (-1)^(i-1) e_{k-i} p_i``."""
    e = [MultiPoly.one(variables)]
    for k in range(1, len(power_sums) + 1):
        acc = MultiPoly.zero(variables)
        for i in range(1, k + 1):
            term = e[k - i] * power_sums[i - 1]
            acc = acc + term if i % 2 else acc - term
        e.append(acc * Fraction(1, k))
    return e


def det_one_minus_tA(A: SquareMatrix, max_degree: int | None = None, t: str = "t") -> MultiPoly:
    """The polynomial ``det(I - tA)`` over ``A.variables + (t,)``.

    Coefficients come from the power sums ``Tr(A^r)`` via Newton's identities:
    ``det(I - tA) = sum_k (-1)^k e_k t^k``.
    """
    if max_degree is not None and max_degree < A.dim:
        raise ValueError(f"max_degree {max_degree} is below the matrix dimension {A.dim}")
    if t in A.variables:
        raise ValueError(f"series variable {t!r} clashes with matrix variables")
    variables = A.variables + (t,)
    e = elementary_from_power_sums(A.power_traces(A.dim), A.variables)
    tvar = MultiPoly.var(t, variables)
    result = MultiPoly.zero(variables)
    for k, ek in enumerate(e):
        term = ek.with_variables(variables) * tvar ** k
        result = result + term if k % 2 == 0 else result - term
    return result


def determinant(A: SquareMatrix) -> MultiPoly:
    """``det(A) = e_dim`` from the same Newton recursion."""
    e = elementary_from_power_sums(A.power_traces(A.dim), A.variables)
    return e[A.dim]
