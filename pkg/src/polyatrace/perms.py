"""Permutations of ``{1..n}``, explicit permutation groups and cycle indices."""

from __future__ import annotations

import itertools
import re
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, List, Sequence, Tuple

from .errors import CapExceededError
from .poly import MultiPoly, variable_names
from .series import TruncatedSeries

DEFAULT_GROUP_CAP = 10**6

GROUP_KINDS = ("symmetric", "alternating", "cyclic", "dihedral", "trivial")


class Permutation:
    """A bijection of ``{1..n}`` stored by its images: ``images[i-1] == g(i)``."""

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{list(images)} is not a permutation of 1..{len(images)}")
        if not images:
            raise ValueError("permutations need n >= 1")
        self.images = images

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], n: int) -> "Permutation":
        images = list(range(1, n + 1))
        seen = set()
        for cyc in cycles:
            for a in cyc:
                if not 1 <= a <= n:
                    raise ValueError(f"point {a} outside 1..{n}")
                if a in seen:
                    raise ValueError(f"point {a} appears twice in cycle notation")
                seen.add(a)
            for a, b in zip(cyc, tuple(cyc[1:]) + tuple(cyc[:1])):
                images[a - 1] = b
        return cls(images)

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> "Permutation":
        """Accepts one-line ``"[2,1,3]"`` or cycle notation ``"(1 2)(3 4)"``."""
        text = text.strip()
        if text.startswith("["):
            if not text.endswith("]"):
                raise ValueError(f"unterminated image list {text!r}")
            body = text[1:-1].replace(",", " ").split()
            perm = cls(int(x) for x in body)
            if n is not None and perm.n != n:
                raise ValueError(f"{text!r} has degree {perm.n}, expected {n}")
            return perm
        if not re.fullmatch(r"(\s*\(\s*[\d\s,]*\)\s*)*", text):
            raise ValueError(f"cannot parse permutation {text!r}")
        cycles = [tuple(int(x) for x in body.replace(",", " ").split())
                  for body in re.findall(r"\(([^)]*)\)", text)]
        largest = max((max(c) for c in cycles if c), default=1)
        if n is None:
            n = largest
        if largest > n:
            raise ValueError(f"{text!r} moves points beyond n={n}")
        return cls.from_cycles([c for c in cycles if c], n)

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def compose(self, other: "Permutation") -> "Permutation":
        """``(self o other)(i) = self(other(i))``."""
        if self.n != other.n:
            raise ValueError(f"size mismatch: {self.n} vs {other.n}")
        mine = self.images
        return Permutation._trusted(tuple(mine[j - 1] for j in other.images))

    __mul__ = compose

    @classmethod
    def _trusted(cls, images: Tuple[int, ...]) -> "Permutation":
        obj = cls.__new__(cls)
        obj.images = images
        return obj

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, gi in enumerate(self.images, start=1):
            inv[gi - 1] = i
        return Permutation._trusted(tuple(inv))

    def is_identity(self) -> bool:
        return all(g == i for i, g in enumerate(self.images, start=1))

    def cycles(self, include_fixed: bool = False) -> List[Tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            nxt = self(start)
            while nxt != start:
                cyc.append(nxt)
                seen.add(nxt)
                nxt = self(nxt)
            if include_fixed or len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def cycle_type(self) -> Tuple[int, ...]:
        """``m`` with ``m[i-1]`` the number of ``i``-cycles (fixed points included)."""
        m = [0] * self.n
        for cyc in self.cycles(include_fixed=True):
            m[len(cyc) - 1] += 1
        return tuple(m)

    def sign(self) -> int:
        return -1 if sum(len(c) - 1 for c in self.cycles()) % 2 else 1

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __str__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)

    def __repr__(self) -> str:
        return f"Permutation({list(self.images)})"


def compose(g: Permutation, h: Permutation) -> Permutation:
    return g.compose(h)


def cycle_type(g: Permutation) -> Tuple[int, ...]:
    return g.cycle_type()


class PermGroup:
    """A subgroup of ``S_n`` held as an explicit, sorted element list."""

    __slots__ = ("n", "elements", "_set", "name")

    def __init__(self, n: int, elements: Iterable[Permutation], name: str | None = None):
        elements = sorted(set(elements))
        if not elements:
            raise ValueError("a group needs at least the identity")
        for g in elements:
            if g.n != n:
                raise ValueError(f"element {g} is not in S_{n}")
        self.n = n
        self.elements: Tuple[Permutation, ...] = tuple(elements)
        self._set = frozenset(elements)
        self.name = name
        if Permutation.identity(n) not in self._set:
            raise ValueError("group element list is missing the identity")

    def __len__(self) -> int:
        return len(self.elements)

    order = property(__len__)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, g: Permutation) -> bool:
        return g in self._set

    def is_closed(self) -> bool:
        return all(g * h in self._set for g in self.elements for h in self.elements)

    def __eq__(self, other) -> bool:
        return isinstance(other, PermGroup) and self.n == other.n and self._set == other._set

    def __hash__(self) -> int:
        return hash((self.n, self._set))

    def __repr__(self) -> str:
        label = self.name or "PermGroup"
        return f"<{label} in S_{self.n}, order {len(self)}>"


def group_closure(generators: Iterable[Permutation], n: int,
                  size_cap: int = DEFAULT_GROUP_CAP, name: str | None = None) -> PermGroup:
    """Breadth-first closure of ``generators`` under composition."""
    gens = list(generators)
    for g in gens:
        if g.n != n:
            raise ValueError(f"generator {g} is not in S_{n}")
    identity = Permutation.identity(n)
    found = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for h in frontier:
            for g in gens:
                k = h * g
                if k not in found:
                    found.add(k)
                    if len(found) > size_cap:
                        raise CapExceededError(f"group closure exceeds size cap {size_cap}")
                    nxt.append(k)
        frontier = nxt
    return PermGroup(n, found, name)


def named_group(kind: str, n: int, size_cap: int = DEFAULT_GROUP_CAP) -> PermGroup:
    """Standard copies of S_n, A_n, C_n, D_n and the trivial group inside S_n."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if kind == "trivial":
        return PermGroup(n, [Permutation.identity(n)], f"1_{n}")
    if kind in ("symmetric", "alternating"):
        size = _factorial(n) // (2 if kind == "alternating" and n > 1 else 1)
        if size > size_cap:
            raise CapExceededError(f"|{kind} group on {n} points| = {size} exceeds size cap {size_cap}")
        perms = (Permutation(p) for p in itertools.permutations(range(1, n + 1)))
        if kind == "alternating":
            perms = (g for g in perms if g.sign() == 1)
        return PermGroup(n, perms, ("S_" if kind == "symmetric" else "A_") + str(n))
    if kind == "cyclic":
        rotation = Permutation([i % n + 1 for i in range(1, n + 1)])
        return group_closure([rotation], n, size_cap, f"C_{n}")
    if kind == "dihedral":
        if n < 3:
            raise ValueError("dihedral groups need n >= 3")
        rotation = Permutation([i % n + 1 for i in range(1, n + 1)])
        reflection = Permutation([n + 1 - i for i in range(1, n + 1)])
        return group_closure([rotation, reflection], n, size_cap, f"D_{n}")
    raise ValueError(f"unsupported group kind {kind!r}; expected one of {GROUP_KINDS}")


def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def cycle_index_variables(n: int) -> Tuple[str, ...]:
    return variable_names("x", n)


def cycle_index(G: PermGroup) -> MultiPoly:
    """``Z_G = (1/|G|) sum_g prod_i x_i^{m_i(g)}`` over ``x_1..x_n``."""
    types = Counter(g.cycle_type() for g in G)
    scale = Fraction(1, len(G))
    return MultiPoly(cycle_index_variables(G.n), {m: count * scale for m, count in types.items()})


@lru_cache(maxsize=32)
def cycle_index_series_symmetric(N: int) -> TruncatedSeries:
    """``sum_n Z_{S_n} t^n = exp(sum_r x_r t^r / r)`` to order ``N``, over ``x_1..x_N``."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    variables = cycle_index_variables(N)
    inner = [MultiPoly.zero(variables)]
    inner += [MultiPoly.var(f"x_{r}", variables) * Fraction(1, r) for r in range(1, N + 1)]
    return TruncatedSeries(inner, N, variables).exp()


def symmetric_cycle_index(n: int) -> MultiPoly:
    """``Z_{S_n}`` read off the exponential generating series (no enumeration)."""
    return cycle_index_series_symmetric(n)[n].with_variables(cycle_index_variables(n))


def alternating_cycle_index(n: int) -> MultiPoly:
    """``Z_{A_n} = Z_{S_n}(x_1, x_2, ...) + Z_{S_n}(x_1, -x_2, ..., (-1)^{n+1} x_n)``."""
    if n < 2:
        raise ValueError("the signed-substitution identity needs n >= 2")
    z = symmetric_cycle_index(n)
    signs = {f"x_{r}": -MultiPoly.var(f"x_{r}", z.variables) for r in range(2, n + 1, 2)}
    return z + z.substitute(signs)


def alternating_series_identity_check(N: int, enumerate_up_to: int = 7) -> bool:
    """Check ``Z_A(x,t) = Z_S(x,t) + 1/Z_S(x,-t) - 1 - x_1 t`` coefficientwise.

    Coefficients with ``n <= enumerate_up_to`` are compared against cycle
    indices of explicitly enumerated alternating groups, larger ones against
    the signed-substitution identity.
    """
    if N < 2:
        raise ValueError("N must be at least 2")
    S = cycle_index_series_symmetric(N)
    x1t = TruncatedSeries([0, MultiPoly.var("x_1", S.variables)], N, S.variables)
    rhs = S + S.scale_t(-1).inverse() - 1 - x1t
    for n in range(N + 1):
        if n < 2:
            expected = MultiPoly.var("x_1", S.variables) ** n
        elif n <= enumerate_up_to:
            expected = cycle_index(named_group("alternating", n))
        else:
            expected = alternating_cycle_index(n)
        if rhs[n] != expected.with_variables(S.variables):
            return False
    return True
