"""Univariate power series in ``t`` truncated at a fixed order, with
:class:`~polyatrace.poly.MultiPoly` coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, List, Sequence

from .poly import MultiPoly, Scalar


class TruncatedSeries:
    """``c_0 + c_1 t + ... + c_N t^N``; everything beyond ``t^N`` is unknown.

    Coefficients all share one variable list.  Arithmetic between series
    requires the same truncation order and the same variable list.
    """

    __slots__ = ("order", "variables", "_coeffs")

    def __init__(self, coefficients: Iterable, order: int, variables: Sequence[str] | None = None):
        if order < 0:
            raise ValueError("truncation order must be nonnegative")
        coefficients = list(coefficients)[: order + 1]
        if variables is None:
            polys = [c for c in coefficients if isinstance(c, MultiPoly)]
            variables = polys[0].variables if polys else ()
        variables = tuple(variables)
        coeffs: List[MultiPoly] = []
        for c in coefficients:
            if isinstance(c, MultiPoly):
                if c.variables != variables:
                    c = c.with_variables(variables)
            else:
                c = MultiPoly.constant(c, variables)
            coeffs.append(c)
        coeffs.extend(MultiPoly.zero(variables) for _ in range(order + 1 - len(coeffs)))
        self.order = order
        self.variables = variables
        self._coeffs = tuple(coeffs)

    @classmethod
    def zero(cls, order: int, variables: Sequence[str] = ()) -> "TruncatedSeries":
        return cls([], order, variables)

    @classmethod
    def one(cls, order: int, variables: Sequence[str] = ()) -> "TruncatedSeries":
        return cls([1], order, variables)

    @classmethod
    def from_poly(cls, poly: MultiPoly, t: str, order: int) -> "TruncatedSeries":
        """Read a polynomial containing the variable ``t`` as a series in ``t``."""
        if t not in poly.variables:
            return cls([poly], order, poly.variables)
        parts = poly.collect(t)
        rest = tuple(v for v in poly.variables if v != t)
        coeffs = [parts.get(k, MultiPoly.zero(rest)) for k in range(order + 1)]
        return cls(coeffs, order, rest)

    # -- inspection ---------------------------------------------------------

    @property
    def coefficients(self) -> tuple:
        return self._coeffs

    def __getitem__(self, n: int) -> MultiPoly:
        return self._coeffs[n]

    def __len__(self) -> int:
        return self.order + 1

    def __iter__(self):
        return iter(self._coeffs)

    def to_poly(self, t: str = "t") -> MultiPoly:
        variables = self.variables + (t,)
        out = {}
        for n, c in enumerate(self._coeffs):
            for e, v in c.items():
                out[e + (n,)] = v
        return MultiPoly(variables, out)

    def map_coefficients(self, fn) -> "TruncatedSeries":
        coeffs = [fn(c) for c in self._coeffs]
        variables = coeffs[0].variables if coeffs and isinstance(coeffs[0], MultiPoly) else self.variables
        return TruncatedSeries(coeffs, self.order, variables)

    def with_variables(self, variables: Sequence[str]) -> "TruncatedSeries":
        return TruncatedSeries([c.with_variables(variables) for c in self._coeffs], self.order, variables)

    def evaluate(self, values) -> "TruncatedSeries":
        """Specialize coefficient variables to scalars."""
        remaining = tuple(v for v in self.variables if v not in values)
        coeffs = []
        for c in self._coeffs:
            value = c.evaluate(values)
            coeffs.append(value if isinstance(value, MultiPoly) else MultiPoly.constant(value, remaining))
        return TruncatedSeries(coeffs, self.order, remaining)

    def scale_t(self, factor: Scalar) -> "TruncatedSeries":
        """Substitute ``t -> factor * t`` (``factor=-1`` gives ``S(-t)``)."""
        factor = Fraction(factor)
        return TruncatedSeries([c * factor ** n for n, c in enumerate(self._coeffs)], self.order, self.variables)

    def shift(self, k: int) -> "TruncatedSeries":
        """Multiply by ``t**k``."""
        zero = MultiPoly.zero(self.variables)
        return TruncatedSeries([zero] * k + list(self._coeffs), self.order, self.variables)

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: "TruncatedSeries") -> None:
        if other.order != self.order:
            raise ValueError(f"truncation orders differ: {self.order} vs {other.order}")
        if other.variables != self.variables:
            raise ValueError(f"coefficient variables differ: {self.variables} vs {other.variables}")

    def _coerce(self, other):
        if isinstance(other, TruncatedSeries):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction, MultiPoly)):
            return TruncatedSeries([other], self.order, self.variables)
        return NotImplemented

    def __add__(self, other) -> "TruncatedSeries":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return TruncatedSeries([a + b for a, b in zip(self._coeffs, other._coeffs)], self.order, self.variables)

    __radd__ = __add__

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries([-a for a in self._coeffs], self.order, self.variables)

    def __sub__(self, other) -> "TruncatedSeries":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "TruncatedSeries":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other) -> "TruncatedSeries":
        if isinstance(other, (int, Fraction, MultiPoly)):
            return TruncatedSeries([a * other for a in self._coeffs], self.order, self.variables)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        N = self.order
        a, b = self._coeffs, other._coeffs
        out = []
        for n in range(N + 1):
            acc = MultiPoly.zero(self.variables)
            for k in range(n + 1):
                if a[k] and b[n - k]:
                    acc = acc + a[k] * b[n - k]
            out.append(acc)
        return TruncatedSeries(out, N, self.variables)

    __rmul__ = __mul__

    def inverse(self) -> "TruncatedSeries":
        """Multiplicative inverse; the constant term must be a nonzero rational."""
        a0 = self._coeffs[0]
        if not a0.is_constant() or a0.is_zero():
            raise ZeroDivisionError("series inverse needs a nonzero rational constant term")
        inv0 = 1 / a0.constant_value()
        out = [MultiPoly.constant(inv0, self.variables)]
        for n in range(1, self.order + 1):
            acc = MultiPoly.zero(self.variables)
            for k in range(1, n + 1):
                if self._coeffs[k]:
                    acc = acc + self._coeffs[k] * out[n - k]
            out.append(acc * (-inv0))
        return TruncatedSeries(out, self.order, self.variables)

    def __truediv__(self, other) -> "TruncatedSeries":
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other) -> "TruncatedSeries":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, k: int) -> "TruncatedSeries":
        if not isinstance(k, int):
            raise TypeError("series powers must be integers")
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = TruncatedSeries.one(self.order, self.variables)
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def exp(self) -> "TruncatedSeries":
        """``exp`` of a series with zero constant term.

        Uses ``n b_n = sum_{k=1}^{n} k a_k b_{n-k}``, which follows from
        ``b' = a' b``; division by ``n`` is exact over the rationals.
        """
        if self._coeffs[0]:
            raise ValueError("series exp needs a zero constant term")
        out = [MultiPoly.one(self.variables)]
        for n in range(1, self.order + 1):
            acc = MultiPoly.zero(self.variables)
            for k in range(1, n + 1):
                if self._coeffs[k]:
                    acc = acc + self._coeffs[k] * out[n - k] * k
            out.append(acc * Fraction(1, n))
        return TruncatedSeries(out, self.order, self.variables)

    def log(self) -> "TruncatedSeries":
        """``log`` of a series with constant term 1."""
        if self._coeffs[0] != 1:
            raise ValueError("series log needs constant term 1")
        # b' = a'/a, so n b_n = n a_n - sum_{k=1}^{n-1} k b_k a_{n-k}
        out = [MultiPoly.zero(self.variables)]
        for n in range(1, self.order + 1):
            acc = self._coeffs[n] * n
            for k in range(1, n):
                if out[k] and self._coeffs[n - k]:
                    acc = acc - out[k] * self._coeffs[n - k] * k
            out.append(acc * Fraction(1, n))
        return TruncatedSeries(out, self.order, self.variables)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.order == other.order and self.variables == other.variables
                and self._coeffs == other._coeffs)

    def __hash__(self) -> int:
        return hash((self.order, self.variables, self._coeffs))

    def __repr__(self) -> str:
        return f"TruncatedSeries([{', '.join(str(c) for c in self._coeffs)}], order={self.order})"
