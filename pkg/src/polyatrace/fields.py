"""Small finite fields, brute-force point counts and the discriminant census.

Everything is exhaustive and meant for desk-scale fields (``q <= ~100``,
extension degree ``<= 4``).
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterator, List, NamedTuple, Sequence, Tuple

from .enumeration import CountVector
from .errors import CapExceededError, OracleMismatchError
from .matrix import SquareMatrix, determinant
from .poly import MultiPoly, variable_names

DEFAULT_ENUM_BUDGET = 10**7
TABLE_LIMIT = 1024


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    k = 2
    while k * k <= p:
        if p % k == 0:
            return False
        k += 1
    return True


class PrimeField:
    """``F_p`` with elements ``0..p-1``."""

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p

    @property
    def order(self) -> int:
        return self.p

    def elements(self) -> range:
        return range(self.p)

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def mul(self, a: int, b: int) -> int:
        return a * b % self.p

    def neg(self, a: int) -> int:
        return -a % self.p

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise ZeroDivisionError("0 has no inverse")
        return pow(a, self.p - 2, self.p)

    @property
    def squares(self) -> frozenset:
        return _nonzero_squares(self.p)

    def __repr__(self) -> str:
        return f"PrimeField({self.p})"


@lru_cache(maxsize=None)
def _nonzero_squares(p: int) -> frozenset:
    return frozenset(x * x % p for x in range(1, p))


# Polynomials over F_p are coefficient tuples, lowest degree first.

def _poly_mod(a: Sequence[int], m: Sequence[int], p: int) -> List[int]:
    """Remainder of ``a`` modulo the monic ``m``."""
    a = [c % p for c in a]
    dm = len(m) - 1
    for k in range(len(a) - 1, dm - 1, -1):
        c = a[k]
        if c:
            for j in range(dm + 1):
                a[k - dm + j] = (a[k - dm + j] - c * m[j]) % p
    return a[:dm] if dm else []


def _monic_polys(p: int, degree: int) -> Iterator[Tuple[int, ...]]:
    for low in itertools.product(range(p), repeat=degree):
        yield low + (1,)


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Exhaustive trial division by every monic polynomial of degree ``<= deg/2``."""
    degree = len(modulus) - 1
    if degree < 1 or modulus[-1] % p != 1:
        raise ValueError("irreducibility test expects a monic polynomial of degree >= 1")
    if degree == 1:
        return True
    if any(sum(c * pow(x, k, p) for k, c in enumerate(modulus)) % p == 0 for x in range(p)):
        return False
    for d in range(2, degree // 2 + 1):
        for f in _monic_polys(p, d):
            if not any(_poly_mod(modulus, f, p)):
                return False
    return True


@lru_cache(maxsize=None)
def smallest_irreducible(p: int, degree: int) -> Tuple[int, ...]:
    """Lexicographically smallest monic irreducible, scanning ``(c_0, ..., c_{r-1})``."""
    for cand in _monic_polys(p, degree):
        if is_irreducible(cand, p):
            return cand
    raise ArithmeticError(f"no irreducible polynomial of degree {degree} over F_{p}")


class ExtensionField:
    """``F_{p^r} = F_p[z] / (modulus)``.

    Elements are encoded as integers ``sum c_k p^k`` (``c_k`` the coefficient
    of ``z^k``); small fields use precomputed addition and multiplication tables.
    """

    def __init__(self, p: int, degree: int, modulus: Sequence[int] | None = None):
        self.base = PrimeField(p)
        self.p = p
        self.degree = degree
        if modulus is None:
            modulus = smallest_irreducible(p, degree)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != degree + 1 or not is_irreducible(modulus, p):
            raise ValueError(f"{modulus} is not a monic irreducible of degree {degree} over F_{p}")
        self.modulus = modulus
        self.order = p ** degree
        self._digits = [self._decode(x) for x in range(self.order)]
        self._add = self._mul = None
        if self.order <= TABLE_LIMIT:
            self._add = [[self._slow_add(x, y) for y in range(self.order)] for x in range(self.order)]
            self._mul = [[self._slow_mul(x, y) for y in range(self.order)] for x in range(self.order)]

    def _decode(self, x: int) -> List[int]:
        out = []
        for _ in range(self.degree):
            out.append(x % self.p)
            x //= self.p
        return out

    def _encode(self, digits: Sequence[int]) -> int:
        x = 0
        for c in reversed(list(digits)):
            x = x * self.p + c
        return x

    def _slow_add(self, x: int, y: int) -> int:
        return self._encode([(a + b) % self.p for a, b in zip(self._digits[x], self._digits[y])])

    def _slow_mul(self, x: int, y: int) -> int:
        a, b = self._digits[x], self._digits[y]
        prod = [0] * (2 * self.degree - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    prod[i + j] += ca * cb
        rem = _poly_mod(prod, self.modulus, self.p)
        return self._encode(rem + [0] * (self.degree - len(rem)))

    def elements(self) -> range:
        return range(self.order)

    def from_int(self, c: int) -> int:
        """Embed an integer through ``F_p``."""
        return c % self.p

    def add(self, x: int, y: int) -> int:
        return self._add[x][y] if self._add else self._slow_add(x, y)

    def mul(self, x: int, y: int) -> int:
        return self._mul[x][y] if self._mul else self._slow_mul(x, y)

    def power(self, x: int, e: int) -> int:
        out = 1
        for _ in range(e):
            out = self.mul(out, x)
        return out

    def __repr__(self) -> str:
        return f"ExtensionField({self.p}, {self.degree}, modulus={self.modulus})"


def _integer_terms(poly: MultiPoly) -> List[Tuple[Tuple[int, ...], int]]:
    terms = []
    for exps, c in poly.items():
        if c.denominator != 1:
            raise ValueError(f"equation {poly} has non-integer coefficient {c}")
        terms.append((exps, int(c)))
    return terms


def brute_force_affine_counts(equations: Sequence[MultiPoly], q: int, r_max: int,
                              variables: Sequence[str] | None = None,
                              budget: int = DEFAULT_ENUM_BUDGET) -> CountVector:
    """Solutions in ``(F_{q^r})^m`` of all ``equations`` for ``r = 1..r_max``.

    ``variables`` fixes the ambient affine space; by default it is the union of
    the equations' variables.
    """
    if not is_prime(q):
        raise ValueError(f"q = {q} must be prime for brute-force counting")
    if variables is None:
        variables = []
        for eq in equations:
            for v in eq.variables:
                if v not in variables:
                    variables.append(v)
    variables = tuple(variables)
    m = len(variables)
    systems = [_integer_terms(eq.with_variables(variables)) for eq in equations]
    counts = []
    for r in range(1, r_max + 1):
        if q ** (m * r) > budget:
            raise CapExceededError(f"{q}^({m}*{r}) points exceed the enumeration budget {budget}")
        F = ExtensionField(q, r)
        pow_table = [[F.power(x, e) for e in range(_max_exponent(systems) + 1)] for x in F.elements()]
        total = 0
        for point in itertools.product(F.elements(), repeat=m):
            if all(_eval_terms(F, terms, point, pow_table) == 0 for terms in systems):
                total += 1
        counts.append(total)
    return CountVector(counts, q)


def _max_exponent(systems) -> int:
    return max((e for terms in systems for exps, _ in terms for e in exps), default=0)


def _eval_terms(F: ExtensionField, terms, point, pow_table) -> int:
    acc = 0
    for exps, c in terms:
        value = F.from_int(c)
        for x, e in zip(point, exps):
            if e:
                value = F.mul(value, pow_table[x][e])
        acc = F.add(acc, value)
    return acc


# -- discriminants ----------------------------------------------------------

def sylvester_matrix(f: Sequence[MultiPoly], g: Sequence[MultiPoly]) -> SquareMatrix:
    """Sylvester matrix of two polynomials given by coefficients, highest degree first."""
    m, n = len(f) - 1, len(g) - 1
    size = m + n
    variables = f[0].variables
    zero = MultiPoly.zero(variables)
    rows = []
    for i in range(n):
        rows.append([zero] * i + list(f) + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + list(g) + [zero] * (size - n - 1 - i))
    return SquareMatrix(rows, variables)


def resultant(f: Sequence[MultiPoly], g: Sequence[MultiPoly]) -> MultiPoly:
    return determinant(sylvester_matrix(f, g))


@lru_cache(maxsize=None)
def discriminant_poly(n: int) -> MultiPoly:
    """Discriminant of ``x^n + t_1 x^{n-1} + ... + t_n`` in ``t_1..t_n``.

    ``Disc = (-1)^{n(n-1)/2} Res(f, f')``, the resultant taken as the
    determinant of the Sylvester matrix.
    """
    if n < 2:
        raise ValueError("discriminants need n >= 2")
    variables = variable_names("t", n)
    f = [MultiPoly.one(variables)] + [MultiPoly.var(v, variables) for v in variables]
    df = [c * (n - k) for k, c in enumerate(f[:-1])]
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return resultant(f, df) * sign


def quadratic_character(a: int, q: int) -> int:
    """``0`` for ``a = 0``, ``+1`` for a nonzero square, ``-1`` otherwise (``q`` an odd prime)."""
    if q % 2 == 0 or not is_prime(q):
        raise ValueError(f"quadratic character needs an odd prime, got {q}")
    a %= q
    if a == 0:
        return 0
    return 1 if a in _nonzero_squares(q) else -1


class DiscriminantCensus(NamedTuple):
    zero: int
    qr: int
    qnr: int
    double_cover: int


def discriminant_census(n: int, q: int, budget: int = DEFAULT_ENUM_BUDGET) -> DiscriminantCensus:
    """Sort all ``t`` in ``F_q^n`` by the quadratic character of ``Disc(t)``.

    Raises :class:`OracleMismatchError` unless the zero fiber has ``q^{n-1}``
    points, residues and non-residues are equinumerous, and ``y^2 = Disc``
    has exactly ``q^n`` points.
    """
    if q % 2 == 0 or not is_prime(q):
        raise ValueError(f"the census needs an odd prime q, got {q}")
    if q ** n > budget:
        raise CapExceededError(f"{q}^{n} points exceed the enumeration budget {budget}")
    terms = _integer_terms(discriminant_poly(n))
    roots = [0] * q
    for y in range(q):
        roots[y * y % q] += 1
    zero = qr = qnr = cover = 0
    for t in itertools.product(range(q), repeat=n):
        value = 0
        for exps, c in terms:
            mono = c
            for x, e in zip(t, exps):
                if e:
                    mono *= pow(x, e, q)
            value += mono
        value %= q
        cover += roots[value]
        chi = quadratic_character(value, q)
        if chi == 0:
            zero += 1
        elif chi > 0:
            qr += 1
        else:
            qnr += 1
    census = DiscriminantCensus(zero, qr, qnr, cover)
    if zero != q ** (n - 1) or qr != qnr or cover != q ** n:
        raise OracleMismatchError(f"discriminant census {census} violates the expected fiber counts")
    return census
