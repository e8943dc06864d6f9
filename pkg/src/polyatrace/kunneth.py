"""Brute-force traces on tensor powers of a graded space.

A subgroup ``G`` of ``S_n`` acts on ``V^{(x)n}`` by permuting tensor slots with
the Koszul sign: for homogeneous ``v_1, ..., v_n``

    g . (v_1 (x) ... (x) v_n) = (-1)^{Q_g(deg v_1, ..., deg v_n)} v_{g^-1(1)} (x) ... (x) v_{g^-1(n)}

with ``Q_g(x) = sum_{i<j, g(i)>g(j)} x_i x_j``.  Everything here is computed
from explicit matrices on each graded piece ``(V^{(x)n})_r``, and serves as
the independent check for the closed-form layer.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from .errors import CapExceededError
from .graded import U, GradedMap, GradedSpace, lefschetz_variables
from .perms import Permutation, PermGroup
from .poly import MultiPoly

DEFAULT_ORACLE_CAP = 20_000

BasisVector = Tuple[int, int]
TensorIndex = Tuple[BasisVector, ...]


def q_form(g: Permutation, degrees: Sequence[int]) -> int:
    """``Q_g(degrees) = sum_{i<j} eps_ij(g) d_i d_j`` with ``eps_ij = [g(i) > g(j)]``."""
    if len(degrees) != g.n:
        raise ValueError(f"need {g.n} degrees, got {len(degrees)}")
    total = 0
    for i in range(g.n):
        for j in range(i + 1, g.n):
            if g.images[i] > g.images[j]:
                total += degrees[i] * degrees[j]
    return total


def koszul_sign(g: Permutation, degrees: Sequence[int]) -> int:
    return -1 if q_form(g, degrees) % 2 else 1


class SignedPermutationAction:
    """The signed basis map of one group element on ``V^{(x)n}``."""

    def __init__(self, g: Permutation, space: GradedSpace, n: int):
        if g.n != n:
            raise ValueError(f"permutation of degree {g.n} cannot act on {n} tensor slots")
        self.g = g
        self.space = space
        self.n = n
        self._ginv = g.inverse().images

    def __call__(self, index: TensorIndex) -> Tuple[TensorIndex, int]:
        degrees = [b[0] for b in index]
        image = tuple(index[j - 1] for j in self._ginv)
        return image, koszul_sign(self.g, degrees)

    def table(self, indices) -> Dict[TensorIndex, Tuple[TensorIndex, int]]:
        return {b: self(b) for b in indices}


def act(g: Permutation, space: GradedSpace, n: int) -> SignedPermutationAction:
    return SignedPermutationAction(g, space, n)


def tensor_basis(space: GradedSpace, n: int, cap: int = DEFAULT_ORACLE_CAP) -> Dict[int, List[TensorIndex]]:
    """Pure tensors of basis vectors, grouped by total degree."""
    if n < 1:
        raise ValueError("tensor powers need n >= 1")
    size = space.total_dim ** n
    if size > cap:
        raise CapExceededError(f"dim V^(x){n} = {size} exceeds the oracle cap {cap}")
    pieces: Dict[int, List[TensorIndex]] = {}
    for index in itertools.product(space.basis(), repeat=n):
        pieces.setdefault(sum(b[0] for b in index), []).append(index)
    return dict(sorted(pieces.items()))


def representation_check(G: PermGroup, space: GradedSpace, n: int, cap: int = DEFAULT_ORACLE_CAP) -> bool:
    """Check ``act(s) o act(t) == act(s t)`` on every basis tensor for all ``s, t`` in ``G``."""
    if G.n != n:
        raise ValueError(f"group acts on {G.n} points, not {n}")
    indices = [b for piece in tensor_basis(space, n, cap).values() for b in piece]
    tables = {g: act(g, space, n).table(indices) for g in G}
    for s in G:
        ts = tables[s]
        for t in G:
            tt, tst = tables[t], tables[s * t]
            for b in indices:
                b1, s1 = tt[b]
                b2, s2 = ts[b1]
                if (b2, s1 * s2) != tst[b]:
                    return False
    return True


class TensorPower:
    """The blocks of ``phi^{(x)n}`` on each graded piece, materialized densely."""

    def __init__(self, phi: GradedMap, n: int, cap: int = DEFAULT_ORACLE_CAP):
        self.phi = phi
        self.n = n
        self.variables = phi.variables
        self.pieces = tensor_basis(phi.space, n, cap)
        self.position = {b: (r, k) for r, piece in self.pieces.items() for k, b in enumerate(piece)}
        self.blocks: Dict[int, List[List[MultiPoly]]] = {
            r: [[self._entry(a, b) for b in piece] for a in piece] for r, piece in self.pieces.items()
        }

    def _entry(self, a: TensorIndex, b: TensorIndex) -> MultiPoly:
        value = MultiPoly.one(self.variables)
        for (da, ia), (db, ib) in zip(a, b):
            if da != db:
                return MultiPoly.zero(self.variables)
            entry = self.phi.blocks[da][ia, ib]
            if not entry:
                return MultiPoly.zero(self.variables)
            value = value * entry
        return value

    def signed_permutation(self, g: Permutation) -> Dict[int, List[Tuple[int, int]]]:
        """Per degree ``r``: column ``k`` of ``P_g`` is ``sign * e_{target}``, as ``(target, sign)``."""
        action = act(g, self.phi.space, self.n)
        out: Dict[int, List[Tuple[int, int]]] = {}
        for r, piece in self.pieces.items():
            cols = []
            for b in piece:
                image, sign = action(b)
                cols.append((self.position[image][1], sign))
            out[r] = cols
        return out

    def g_phi(self, g: Permutation) -> Dict[int, List[List[MultiPoly]]]:
        """The matrices of ``g o phi^{(x)n}`` per degree."""
        perm = self.signed_permutation(g)
        out = {}
        for r, block in self.blocks.items():
            rows: List = [None] * len(block)
            for c, (target, sign) in enumerate(perm[r]):
                rows[target] = block[c] if sign > 0 else [-e for e in block[c]]
            out[r] = rows
        return out

    def phi_g(self, g: Permutation) -> Dict[int, List[List[MultiPoly]]]:
        """The matrices of ``phi^{(x)n} o g`` per degree."""
        perm = self.signed_permutation(g)
        out = {}
        for r, block in self.blocks.items():
            out[r] = [[row[target] if sign > 0 else -row[target] for (target, sign) in perm[r]]
                      for row in block]
        return out

    def commutes_with(self, g: Permutation) -> bool:
        return self.g_phi(g) == self.phi_g(g)

    def trace_with(self, g: Permutation) -> MultiPoly:
        """``L_u(g phi^{(x)n}) = sum_r (-u)^r Tr((g phi^{(x)n})_r)``."""
        variables = lefschetz_variables(self.phi)
        minus_u = -MultiPoly.var(U, variables)
        acc = MultiPoly.zero(variables)
        for r, rows in self.g_phi(g).items():
            tr = MultiPoly.zero(self.variables)
            for k, row in enumerate(rows):
                tr = tr + row[k]
            acc = acc + tr.with_variables(variables) * minus_u ** r
        return acc

    def trace_against(self, averaging: Dict[int, List[List[Fraction]]]) -> MultiPoly:
        """``sum_r (-u)^r Tr(phi^{(x)n}_r E_r)`` for per-degree matrices ``E_r``."""
        variables = lefschetz_variables(self.phi)
        minus_u = -MultiPoly.var(U, variables)
        acc = MultiPoly.zero(variables)
        for r, block in self.blocks.items():
            E = averaging[r]
            tr = MultiPoly.zero(self.variables)
            for a, row in enumerate(block):
                for c, entry in enumerate(row):
                    if entry and E[c][a]:
                        tr = tr + entry * E[c][a]
            acc = acc + tr.with_variables(variables) * minus_u ** r
        return acc


def commutation_check(g: Permutation, phi: GradedMap, n: int, cap: int = DEFAULT_ORACLE_CAP) -> bool:
    """``g o phi^{(x)n} == phi^{(x)n} o g`` as explicit matrices."""
    return TensorPower(phi, n, cap).commutes_with(g)


def oracle_trace(g: Permutation, phi: GradedMap, n: int, cap: int = DEFAULT_ORACLE_CAP,
                 verify_commutation: bool = False) -> MultiPoly:
    """``L_u(g phi^{(x)n})`` from the explicit matrices on ``V^{(x)n}``."""
    if g.n != n:
        raise ValueError(f"permutation of degree {g.n} cannot act on {n} tensor slots")
    tp = TensorPower(phi, n, cap)
    if verify_commutation and not tp.commutes_with(g):
        raise AssertionError(f"{g} does not commute with phi^(x){n}")
    return tp.trace_with(g)


def averaging_operator(G: PermGroup, space: GradedSpace, n: int,
                       cap: int = DEFAULT_ORACLE_CAP) -> Dict[int, List[List[Fraction]]]:
    """Dense matrices of ``e_G = (1/|G|) sum_g g`` on each graded piece."""
    if G.n != n:
        raise ValueError(f"group acts on {G.n} points, not {n}")
    pieces = tensor_basis(space, n, cap)
    position = {b: k for piece in pieces.values() for k, b in enumerate(piece)}
    weight = Fraction(1, len(G))
    out = {r: [[Fraction(0)] * len(piece) for _ in piece] for r, piece in pieces.items()}
    for g in G:
        action = act(g, space, n)
        for r, piece in pieces.items():
            E = out[r]
            for c, b in enumerate(piece):
                image, sign = action(b)
                E[position[image]][c] += sign * weight
    return out


def is_idempotent(blocks: Dict[int, List[List[Fraction]]]) -> bool:
    for E in blocks.values():
        size = len(E)
        for i in range(size):
            for j in range(size):
                if sum(E[i][k] * E[k][j] for k in range(size)) != E[i][j]:
                    return False
    return True


def invariant_lefschetz_oracle(G: PermGroup, phi: GradedMap, n: int,
                               cap: int = DEFAULT_ORACLE_CAP) -> MultiPoly:
    """``L_u`` of ``phi^{(x)n}`` restricted to the ``G``-invariants.

    Computed as ``Tr(phi^{(x)n} e_G)`` on the full space: ``e_G`` is an
    idempotent commuting with ``phi^{(x)n}`` whose image is the invariant
    subspace, so the two traces agree.
    """
    tp = TensorPower(phi, n, cap)
    return tp.trace_against(averaging_operator(G, phi.space, n, cap))


def average_of_traces(G: PermGroup, phi: GradedMap, n: int, cap: int = DEFAULT_ORACLE_CAP) -> MultiPoly:
    """``(1/|G|) sum_g L_u(g phi^{(x)n})`` from per-element explicit traces."""
    tp = TensorPower(phi, n, cap)
    acc = MultiPoly.zero(lefschetz_variables(phi))
    for g in G:
        acc = acc + tp.trace_with(g)
    return acc * Fraction(1, len(G))
