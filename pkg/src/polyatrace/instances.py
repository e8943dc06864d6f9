"""Seeded random inputs for the formula/oracle equivalence checks."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Sequence

from .graded import GradedMap
from .matrix import SquareMatrix
from .perms import Permutation, PermGroup, group_closure


def random_rational(rng: random.Random, bound: int = 9) -> Fraction:
    """Numerator in ``[-bound, bound]``, denominator in ``[1, bound]``."""
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def random_dims(rng: random.Random, max_dims: Sequence[int] = (3, 3, 3, 3), max_total_dim: int = 3) -> list:
    """Nonzero graded dimensions with ``d_i <= max_dims[i]`` and total at most ``max_total_dim``."""
    while True:
        dims = [rng.randint(0, m) for m in max_dims]
        if 0 < sum(dims) <= max_total_dim:
            return dims


def random_graded_map(rng: random.Random, max_dims: Sequence[int] = (3, 3, 3, 3),
                      max_total_dim: int = 3, bound: int = 9) -> GradedMap:
    dims = random_dims(rng, max_dims, max_total_dim)
    blocks = [SquareMatrix([[random_rational(rng, bound) for _ in range(d)] for _ in range(d)]) for d in dims]
    return GradedMap(blocks, ())


def random_permutation(rng: random.Random, n: int) -> Permutation:
    images = list(range(1, n + 1))
    rng.shuffle(images)
    return Permutation(images)


def random_subgroup(rng: random.Random, n: int, max_generators: int = 2) -> PermGroup:
    gens = [random_permutation(rng, n) for _ in range(rng.randint(1, max_generators))]
    return group_closure(gens, n, name="<" + ", ".join(map(str, gens)) + ">")
