"""Seeded formula-versus-oracle equivalence runs."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator, List, Sequence, Tuple

from .formulas import conjugacy_trace_formula, invariant_lefschetz_formula
from .graded import GradedMap
from .instances import random_graded_map, random_subgroup
from .kunneth import DEFAULT_ORACLE_CAP, TensorPower, averaging_operator
from .perms import PermGroup, named_group


@dataclass(frozen=True)
class InstanceResult:
    group: str
    n: int
    dims: Tuple[int, ...]
    invariant_ok: bool
    per_element_ok: bool

    @property
    def ok(self) -> bool:
        return self.invariant_ok and self.per_element_ok


def standard_groups(n: int) -> List[PermGroup]:
    kinds = ["symmetric", "cyclic", "trivial"]
    if n >= 2:
        kinds.insert(1, "alternating")
    if n >= 3:
        kinds.append("dihedral")
    return [named_group(k, n) for k in kinds]


def instance_set(seed: int, ns: Sequence[int], max_dims: Sequence[int], maps_per_group: int,
                 random_groups: int = 1) -> Iterator[Tuple[PermGroup, GradedMap]]:
    """Named groups for each ``n`` plus ``random_groups`` random generated subgroups,
    each paired with ``maps_per_group`` random graded maps."""
    rng = random.Random(seed)
    max_total = sum(max_dims)
    for n in ns:
        groups = standard_groups(n) + [random_subgroup(rng, n) for _ in range(random_groups)]
        for G in groups:
            for _ in range(maps_per_group):
                yield G, random_graded_map(rng, max_dims, max_total)


def check_instance(G: PermGroup, phi: GradedMap, cap: int = DEFAULT_ORACLE_CAP) -> InstanceResult:
    tp = TensorPower(phi, G.n, cap)
    oracle = tp.trace_against(averaging_operator(G, phi.space, G.n, cap))
    invariant_ok = oracle == invariant_lefschetz_formula(G, phi)
    per_element_ok = all(tp.trace_with(g) == conjugacy_trace_formula(g, phi) for g in G)
    return InstanceResult(G.name or repr(G), G.n, phi.dims, invariant_ok, per_element_ok)


def run_equivalence(seed: int, max_n: int, max_dims: Sequence[int], maps_per_group: int = 2,
                    random_groups: int = 1, cap: int = DEFAULT_ORACLE_CAP) -> List[InstanceResult]:
    ns = range(1, max_n + 1)
    return [check_instance(G, phi, cap)
            for G, phi in instance_set(seed, ns, max_dims, maps_per_group, random_groups)]
