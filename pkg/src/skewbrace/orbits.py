"""Orbit partitions of finite actions given as permutation tables."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np


class UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))
        self.rank = [0] * n

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        x, y = self.find(x), self.find(y)
        if x == y:
            return
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x


@dataclass(frozen=True)
class OrbitPartition:
    """A partition of ``range(n)`` into orbits, each stored as a sorted tuple."""

    n: int
    orbits: tuple[tuple[int, ...], ...]

    @property
    def trivial_count(self) -> int:
        return sum(1 for o in self.orbits if len(o) == 1)

    @property
    def sizes(self) -> list[int]:
        return [len(o) for o in self.orbits]

    @property
    def nontrivial(self) -> list[tuple[int, ...]]:
        return [o for o in self.orbits if len(o) > 1]

    def orbit_index(self) -> np.ndarray:
        """Array mapping each point to the position of its orbit."""
        idx = np.empty(self.n, dtype=np.int64)
        for i, orbit in enumerate(self.orbits):
            idx[list(orbit)] = i
        return idx

    def orbit_of(self, x: int) -> tuple[int, ...]:
        for orbit in self.orbits:
            if x in orbit:
                return orbit
        raise ValueError(f"{x} not in [0, {self.n})")

    def fixed_points(self) -> frozenset[int]:
        return frozenset(o[0] for o in self.orbits if len(o) == 1)


@dataclass(frozen=True)
class OrbitProfile:
    """Counts of nontrivial orbits by size, plus the number of fixed points."""

    counts: dict[int, int]
    trivial_count: int

    def __getitem__(self, m: int) -> int:
        if m == 1:
            return self.trivial_count
        return self.counts.get(m, 0)

    def total(self) -> int:
        return self.trivial_count + sum(m * c for m, c in self.counts.items())


def orbits(action) -> OrbitPartition:
    """Orbit partition of an action given as an ``actors x n`` table of images."""
    table = np.asarray(action)
    if table.ndim != 2:
        raise ValueError("action table must be two-dimensional")
    n = table.shape[1]
    uf = UnionFind(n)
    for row in table:
        for x, y in enumerate(row.tolist()):
            uf.union(x, y)
    classes: dict[int, list[int]] = {}
    for x in range(n):
        classes.setdefault(uf.find(x), []).append(x)
    parts = sorted(tuple(c) for c in classes.values())
    return OrbitPartition(n, tuple(parts))


def orbit_profile(partition: OrbitPartition) -> OrbitProfile:
    counts = Counter(len(o) for o in partition.orbits if len(o) > 1)
    return OrbitProfile(dict(sorted(counts.items())), partition.trivial_count)
