"""Exact multivariate polynomials over the rationals.

A :class:`MultiPoly` carries an explicit, ordered variable list.  Arithmetic
between two polynomials requires identical variable lists; use :func:`align`
or :meth:`MultiPoly.with_variables` to bring operands onto a common list.
Scalars (``int`` and ``Fraction``) are accepted wherever a polynomial is.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Sequence, Tuple, Union

Exponents = Tuple[int, ...]
Scalar = Union[int, Fraction]


def format_rational(value: Scalar) -> str:
    """Canonical text form: ``p/q`` in lowest terms, ``p`` when ``q == 1``."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


class MultiPoly:
    """An immutable polynomial with ``Fraction`` coefficients.

    ``terms`` maps exponent tuples (one entry per variable) to nonzero
    coefficients.
    """

    __slots__ = ("variables", "_terms", "_hash")

    def __init__(self, variables: Iterable[str], terms: Mapping[Sequence[int], Scalar] | None = None):
        self.variables: Tuple[str, ...] = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise ValueError(f"duplicate variable names in {self.variables}")
        nvars = len(self.variables)
        clean: Dict[Exponents, Fraction] = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != nvars:
                raise ValueError(f"exponent vector {exps} does not match {nvars} variables")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            coeff = Fraction(coeff)
            if coeff:
                clean[exps] = clean.get(exps, 0) + coeff
        self._terms = {e: c for e, c in clean.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, variables: Tuple[str, ...], terms: Dict[Exponents, Fraction]) -> "MultiPoly":
        # trusted constructor: terms already normalized
        obj = cls.__new__(cls)
        obj.variables = variables
        obj._terms = terms
        obj._hash = None
        return obj

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, variables: Iterable[str] = ()) -> "MultiPoly":
        return cls._raw(tuple(variables), {})

    @classmethod
    def constant(cls, value: Scalar, variables: Iterable[str] = ()) -> "MultiPoly":
        variables = tuple(variables)
        value = Fraction(value)
        return cls._raw(variables, {(0,) * len(variables): value} if value else {})

    @classmethod
    def one(cls, variables: Iterable[str] = ()) -> "MultiPoly":
        return cls.constant(1, variables)

    @classmethod
    def var(cls, name: str, variables: Iterable[str] | None = None) -> "MultiPoly":
        variables = (name,) if variables is None else tuple(variables)
        if name not in variables:
            raise ValueError(f"variable {name!r} not in {variables}")
        exps = tuple(1 if v == name else 0 for v in variables)
        return cls._raw(variables, {exps: Fraction(1)})

    @classmethod
    def monomial(cls, exponents: Mapping[str, int], coeff: Scalar = 1,
                 variables: Iterable[str] | None = None) -> "MultiPoly":
        variables = tuple(exponents) if variables is None else tuple(variables)
        exps = tuple(exponents.get(v, 0) for v in variables)
        return cls(variables, {exps: coeff})

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> Dict[Exponents, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and not any(next(iter(self._terms))))

    def constant_value(self) -> Fraction:
        """The coefficient of the constant monomial."""
        return self._terms.get((0,) * len(self.variables), Fraction(0))

    def coefficient(self, exponents: Sequence[int] | Mapping[str, int]) -> Fraction:
        if isinstance(exponents, Mapping):
            exponents = tuple(exponents.get(v, 0) for v in self.variables)
        return self._terms.get(tuple(exponents), Fraction(0))

    def total_degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def degree(self, name: str) -> int:
        """Degree in one variable; ``-1`` for the zero polynomial."""
        if not self._terms:
            return -1
        if name not in self.variables:
            return 0
        k = self.variables.index(name)
        return max(e[k] for e in self._terms)

    def used_variables(self) -> Tuple[str, ...]:
        return tuple(v for k, v in enumerate(self.variables) if any(e[k] for e in self._terms))

    # -- variable list management ------------------------------------------

    def with_variables(self, variables: Iterable[str]) -> "MultiPoly":
        """Re-express over another variable list (reorder, add or drop unused)."""
        variables = tuple(variables)
        if variables == self.variables:
            return self
        for v in self.used_variables():
            if v not in variables:
                raise ValueError(f"variable {v!r} is used and cannot be dropped")
        index = [self.variables.index(v) if v in self.variables else None for v in variables]
        terms = {tuple(e[k] if k is not None else 0 for k in index): c for e, c in self._terms.items()}
        return MultiPoly._raw(variables, terms)

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.variables != self.variables:
                raise ValueError(f"variable lists differ: {self.variables} vs {other.variables}")
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.constant(other, self.variables)
        return NotImplemented

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for e, c in other._terms.items():
            s = terms.get(e, 0) + c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        return MultiPoly._raw(self.variables, terms)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly._raw(self.variables, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other) -> "MultiPoly":
        if isinstance(other, (int, Fraction)):
            if not other:
                return MultiPoly._raw(self.variables, {})
            return MultiPoly._raw(self.variables, {e: c * other for e, c in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: Dict[Exponents, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return MultiPoly._raw(self.variables, {e: c for e, c in terms.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if not other.is_constant() or other.is_zero():
                raise ZeroDivisionError("polynomial division only by nonzero constants")
            other = other.constant_value()
        other = Fraction(other)
        if not other:
            raise ZeroDivisionError("division by zero")
        return self * (1 / other)

    def __pow__(self, k: int) -> "MultiPoly":
        if not isinstance(k, int) or k < 0:
            raise ValueError("polynomial powers must be nonnegative integers")
        result = MultiPoly.one(self.variables)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, MultiPoly):
            return self.variables == other.variables and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.variables, frozenset(self._terms.items())))
        return self._hash

    # -- substitution and evaluation ---------------------------------------

    def substitute(self, assignment: Mapping[str, "MultiPoly | Scalar"],
                   variables: Iterable[str] | None = None) -> "MultiPoly":
        """Replace variables by polynomials; unassigned variables map to themselves.

        The result lives on ``variables`` when given, otherwise on the ordered
        union of the images' variable lists (walking ``self.variables``).
        """
        for name in assignment:
            if name not in self.variables:
                raise ValueError(f"cannot substitute unknown variable {name!r}")
        if variables is None:
            target: list = []
            for v in self.variables:
                image = assignment.get(v, None)
                names = image.variables if isinstance(image, MultiPoly) else (() if v in assignment else (v,))
                for name in names:
                    if name not in target:
                        target.append(name)
            variables = target
        variables = tuple(variables)
        images = []
        for v in self.variables:
            image = assignment[v] if v in assignment else MultiPoly.var(v, variables)
            if isinstance(image, MultiPoly):
                image = image.with_variables(variables)
            else:
                image = MultiPoly.constant(image, variables)
            images.append(image)
        powers: list = [{0: MultiPoly.one(variables)} for _ in images]

        def power(k: int, e: int) -> MultiPoly:
            cache = powers[k]
            if e not in cache:
                cache[e] = power(k, e - 1) * images[k]
            return cache[e]

        result = MultiPoly.zero(variables)
        for exps, coeff in self._terms.items():
            term = MultiPoly.constant(coeff, variables)
            for k, e in enumerate(exps):
                if e:
                    term = term * power(k, e)
            result = result + term
        return result

    def evaluate(self, values: Mapping[str, Scalar]) -> "MultiPoly | Fraction":
        """Substitute scalars.  Returns a ``Fraction`` once every variable is fixed."""
        remaining = tuple(v for v in self.variables if v not in values)
        out = self.substitute(dict(values), variables=remaining)
        if not remaining:
            return out.constant_value()
        return out

    def collect(self, name: str) -> Dict[int, "MultiPoly"]:
        """Split by powers of ``name``: ``{k: coefficient of name**k}``."""
        k = self.variables.index(name)
        rest = self.variables[:k] + self.variables[k + 1:]
        buckets: Dict[int, Dict[Exponents, Fraction]] = {}
        for e, c in self._terms.items():
            buckets.setdefault(e[k], {})[e[:k] + e[k + 1:]] = c
        return {p: MultiPoly._raw(rest, t) for p, t in sorted(buckets.items())}

    # -- printing -----------------------------------------------------------

    def sorted_terms(self):
        """Terms in graded-lex order (highest total degree first)."""
        return sorted(self._terms.items(), key=lambda item: (sum(item[0]), item[0]), reverse=True)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for exps, coeff in self.sorted_terms():
            factors = []
            for v, e in zip(self.variables, exps):
                if e == 1:
                    factors.append(v)
                elif e > 1:
                    factors.append(f"{v}^{e}")
            mono = "*".join(factors)
            mag = abs(coeff)
            if not mono:
                body = format_rational(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{format_rational(mag)}*{mono}"
            if not pieces:
                pieces.append(("-" if coeff < 0 else "") + body)
            else:
                pieces.append((" - " if coeff < 0 else " + ") + body)
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"MultiPoly({list(self.variables)!r}, {str(self)!r})"


def align(*polys: "MultiPoly | Scalar") -> list:
    """Bring polynomials onto the ordered union of their variable lists."""
    variables: list = []
    for p in polys:
        if isinstance(p, MultiPoly):
            for v in p.variables:
                if v not in variables:
                    variables.append(v)
    out = []
    for p in polys:
        if isinstance(p, MultiPoly):
            out.append(p.with_variables(variables))
        else:
            out.append(MultiPoly.constant(p, variables))
    return out


def variable_names(prefix: str, count: int, start: int = 1) -> Tuple[str, ...]:
    return tuple(f"{prefix}_{i}" for i in range(start, start + count))


# -- parsing --------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\*\*|[-+*/^()]))")


def _tokenize(text: str):
    pos = 0
    tokens = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"unexpected character at position {pos} in {text!r}")
        number, name, op = m.groups()
        if number is not None:
            tokens.append(("num", int(number)))
        elif name is not None:
            tokens.append(("name", name))
        else:
            tokens.append(("op", "^" if op == "**" else op))
        pos = m.end()
    return tokens


def parse_poly(text: str, variables: Iterable[str] | None = None) -> MultiPoly:
    """Parse ``"1/2*x_1^2 - 3*x_2 + (y+1)^2"``-style strings.

    Without ``variables`` the list is inferred in order of first appearance.
    """
    tokens = _tokenize(str(text))
    if not tokens:
        raise ValueError("empty polynomial string")
    if variables is None:
        seen: list = []
        for kind, val in tokens:
            if kind == "name" and val not in seen:
                seen.append(val)
        variables = seen
    variables = tuple(variables)
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else (None, None)

    def take():
        nonlocal pos
        tok = peek()
        pos += 1
        return tok

    def expr() -> MultiPoly:
        acc = term()
        while peek() in (("op", "+"), ("op", "-")):
            _, op = take()
            rhs = term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term() -> MultiPoly:
        acc = unary()
        while peek() in (("op", "*"), ("op", "/")):
            _, op = take()
            rhs = unary()
            acc = acc * rhs if op == "*" else acc / rhs
        return acc

    def unary() -> MultiPoly:
        if peek() == ("op", "-"):
            take()
            return -unary()
        if peek() == ("op", "+"):
            take()
            return unary()
        return power()

    def power() -> MultiPoly:
        base = atom()
        if peek() == ("op", "^"):
            take()
            sign = 1
            if peek() == ("op", "-"):
                raise ValueError("negative exponents are not polynomials")
            kind, val = take()
            if kind != "num":
                raise ValueError(f"exponent must be an integer literal in {text!r}")
            base = base ** (sign * val)
        return base

    def atom() -> MultiPoly:
        kind, val = take()
        if kind == "num":
            return MultiPoly.constant(val, variables)
        if kind == "name":
            if val not in variables:
                raise ValueError(f"unknown variable {val!r}; declared {variables}")
            return MultiPoly.var(val, variables)
        if (kind, val) == ("op", "("):
            inner = expr()
            if take() != ("op", ")"):
                raise ValueError(f"unbalanced parentheses in {text!r}")
            return inner
        raise ValueError(f"unexpected token {val!r} in {text!r}")

    result = expr()
    if pos != len(tokens):
        raise ValueError(f"trailing input in {text!r}")
    return result
