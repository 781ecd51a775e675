"""Seeded k-tree generators and the book / path 2-tree families.

Random generation uses ``random.Random(seed)`` (Mersenne Twister, integer
seeding) and draws only through ``randrange``, so a seed fixes the trace on
every platform running CPython 3.

Each new vertex picks a uniformly random existing (k+1)-clique and drops one
uniformly random vertex from it to get its attachment k-clique. The result
is not uniform over k-trees.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .ktree import KTreeTrace

FAMILIES = ("random", "book", "path")


@dataclass(frozen=True)
class GenSpec:
    n: int
    k: int = 2
    seed: int = 0
    family: str = "random"

    def validate(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; choose from {', '.join(FAMILIES)}")
        if self.k < 1:
            raise ValueError(f"k must be positive, got {self.k}")
        if not 0 <= self.seed < 2**64:
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {self.seed}")
        if self.family == "random":
            if self.n < self.k + 1:
                raise ValueError(f"random {self.k}-tree needs n >= {self.k + 1}, got {self.n}")
        else:
            if self.k != 2:
                raise ValueError(f"{self.family} family is defined for k=2 only, got k={self.k}")
            if self.n < 3:
                raise ValueError(f"{self.family} family needs n >= 3, got {self.n}")


def random_ktree(spec: GenSpec) -> KTreeTrace:
    spec.validate()
    if spec.family != "random":
        raise ValueError(f"random_ktree expects family 'random', got {spec.family!r}")
    k, n = spec.k, spec.n
    rng = random.Random(spec.seed)
    base = tuple(range(k + 1))
    cliques = [base]
    additions = []
    for v in range(k + 1, n):
        clique = cliques[rng.randrange(len(cliques))]
        drop = rng.randrange(k + 1)
        attach = clique[:drop] + clique[drop + 1:]
        additions.append((v, attach))
        cliques.append(attach + (v,))
    return KTreeTrace(k, base, tuple(additions))


def book_two_tree(n: int) -> KTreeTrace:
    """Every triangle contains edge (0, 1)."""
    GenSpec(n, 2, family="book").validate()
    return KTreeTrace(2, (0, 1, 2), tuple((v, (0, 1)) for v in range(3, n)))


def path_two_tree(n: int) -> KTreeTrace:
    """Vertex j attaches to the most recent edge (j-2, j-1)."""
    GenSpec(n, 2, family="path").validate()
    return KTreeTrace(2, (0, 1, 2), tuple((v, (v - 2, v - 1)) for v in range(3, n)))


def generate(spec: GenSpec) -> KTreeTrace:
    spec.validate()
    if spec.family == "book":
        return book_two_tree(spec.n)
    if spec.family == "path":
        return path_two_tree(spec.n)
    return random_ktree(spec)
