"""Finite groups stored as Cayley tables over the indices ``0..n-1``.

The identity is always index 0. Every structural query is a table walk, so the
functions here double as brute-force oracles for the rest of the package.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, Sequence

import numpy as np

from .errors import (
    ActionNotAutomorphism,
    ActionNotHomomorphism,
    BudgetExceeded,
    NoIdentity,
    NoInverse,
    NotAssociative,
    NotLatinSquare,
)
from .orbits import OrbitPartition, orbits

DEFAULT_MAX_NODES = 10**7
MAX_ORDER = 255


@dataclass(frozen=True, eq=False)
class CayleyGroup:
    """A finite group as an ``n x n`` multiplication table with identity 0.

    Use :func:`validate_group` to build one from an untrusted table.
    """

    op: np.ndarray
    name: str | None = None
    inverse: np.ndarray = field(init=False, repr=False)
    element_order: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        op = np.ascontiguousarray(self.op, dtype=np.int64)
        op.setflags(write=False)
        object.__setattr__(self, "op", op)
        n = op.shape[0]
        inv = np.argmin(op, axis=1)  # column holding the identity 0
        inv.setflags(write=False)
        object.__setattr__(self, "inverse", inv)
        orders = np.ones(n, dtype=np.int64)
        for x in range(1, n):
            k, y = 1, x
            while y != 0:
                y = op[y, x]
                k += 1
            orders[x] = k
        orders.setflags(write=False)
        object.__setattr__(self, "element_order", orders)

    @property
    def order(self) -> int:
        return self.op.shape[0]

    def __len__(self):
        return self.order

    def __repr__(self):
        label = f" {self.name}" if self.name else ""
        return f"<CayleyGroup{label} of order {self.order}>"

    def mul(self, x: int, y: int) -> int:
        return int(self.op[x, y])

    def power(self, x: int, k: int) -> int:
        k %= int(self.element_order[x])
        y = 0
        for _ in range(k):
            y = int(self.op[y, x])
        return y

    def same_table(self, other: "CayleyGroup") -> bool:
        return np.array_equal(self.op, other.op)

    def commutator(self, x: int, y: int) -> int:
        """``x y x^-1 y^-1``."""
        inv = self.inverse
        return int(self.op[self.op[self.op[x, y], inv[x]], inv[y]])

    @cached_property
    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.op, self.op.T))

    @cached_property
    def conjugation(self) -> np.ndarray:
        """``conj[g, x] = g x g^-1``."""
        op = self.op
        return op[op, self.inverse[:, None]]

    @cached_property
    def classes(self) -> OrbitPartition:
        return conjugacy_classes(self)

    @cached_property
    def class_size(self) -> np.ndarray:
        sizes = np.empty(self.order, dtype=np.int64)
        for c in self.classes.orbits:
            sizes[list(c)] = len(c)
        return sizes

    @cached_property
    def center(self) -> frozenset[int]:
        return frozenset(int(z) for z in np.flatnonzero((self.op == self.op.T).all(axis=1)))

    @cached_property
    def derived_subgroup(self) -> frozenset[int]:
        n = self.order
        comms = {self.commutator(x, y) for x in range(n) for y in range(n)}
        return subgroup_closure(self, comms)

    @cached_property
    def is_nilpotent(self) -> bool:
        return _upper_central_series(self)[-1] == frozenset(range(self.order))

    @cached_property
    def profile(self) -> tuple:
        """Isomorphism invariants used to screen isomorphism searches."""
        return (
            self.order,
            self.is_abelian,
            tuple(sorted(Counter(self.element_order.tolist()).items())),
            len(self.center),
            tuple(sorted(Counter(zip(self.element_order.tolist(),
                                     self.class_size.tolist())).items())),
        )


def _check_table(table) -> np.ndarray:
    op = np.asarray(table)
    if op.ndim != 2 or op.shape[0] != op.shape[1] or op.shape[0] == 0:
        raise ValueError("operation table must be a non-empty square table")
    if op.shape[0] > MAX_ORDER:
        raise ValueError(f"groups of order > {MAX_ORDER} are not supported")
    if not np.issubdtype(op.dtype, np.integer):
        raise ValueError("operation table entries must be integers")
    n = op.shape[0]
    if op.min() < 0 or op.max() >= n:
        raise ValueError(f"operation table entries must lie in [0, {n})")
    return op.astype(np.int64)


def _swap_labels(op: np.ndarray, e: int) -> np.ndarray:
    """Relabel so that element ``e`` becomes index 0 (swap 0 and e)."""
    perm = np.arange(op.shape[0])
    perm[0], perm[e] = e, 0
    # new_op[i, j] = perm[op[perm[i], perm[j]]]; perm is an involution
    return perm[op[np.ix_(perm, perm)]]


def find_identity(op: np.ndarray) -> int | None:
    n = op.shape[0]
    ident = np.arange(n)
    for e in range(n):
        if np.array_equal(op[e], ident) and np.array_equal(op[:, e], ident):
            return e
    return None


def first_nonassociative(op: np.ndarray) -> tuple[int, int, int] | None:
    lhs = op[op, :]                # lhs[a, b, c] = (ab)c
    rhs = op[:, op]                # rhs[a, b, c] = a(bc)
    bad = np.argwhere(lhs != rhs)
    if len(bad):
        a, b, c = (int(v) for v in bad[0])
        return a, b, c
    return None


def validate_group(table, name: str | None = None, normalize: bool = True) -> CayleyGroup:
    """Check the group axioms on a table and return a normalized group.

    With ``normalize`` the identity is relabeled to index 0 (by swapping it
    with 0); otherwise an identity elsewhere raises :class:`NoIdentity`.
    """
    op = _check_table(table)
    n = op.shape[0]
    full = np.arange(n)
    for r in range(n):
        if len(np.unique(op[r])) != n:
            raise NotLatinSquare(row=r)
    for c in range(n):
        if len(np.unique(op[:, c])) != n:
            raise NotLatinSquare(column=c)
    e = find_identity(op)
    if e is None or (e != 0 and not normalize):
        raise NoIdentity()
    if e != 0:
        op = _swap_labels(op, e)
    witness = first_nonassociative(op)
    if witness is not None:
        raise NotAssociative(*witness)
    for x in range(n):
        row = np.flatnonzero(op[x] == 0)
        if len(row) != 1 or op[row[0], x] != 0:
            raise NoInverse(x)
    assert np.array_equal(op[0], full)
    return CayleyGroup(op, name)


# -- constructions -----------------------------------------------------------

def cyclic_group(n: int) -> CayleyGroup:
    idx = np.arange(n)
    return CayleyGroup((idx[:, None] + idx[None, :]) % n, f"C{n}")


def trivial_group() -> CayleyGroup:
    return cyclic_group(1)


def direct_product(G: CayleyGroup, H: CayleyGroup, name: str | None = None) -> CayleyGroup:
    """Direct product on pairs ``(g, h)`` flattened as ``g * |H| + h``."""
    identity = np.arange(G.order)
    return semidirect_product(G, H, [identity] * H.order,
                              name=name or f"{G.name}x{H.name}", check=False)


def semidirect_product(N: CayleyGroup, H: CayleyGroup, act: Sequence,
                       name: str | None = None, check: bool = True) -> CayleyGroup:
    """``N ⋊ H`` with ``(n1, h1)(n2, h2) = (n1 act[h1](n2), h1 h2)``.

    ``act[h]`` is the image table of the automorphism of ``N`` attached to ``h``.
    Pairs are flattened row-major: ``(n, h) -> n * |H| + h``.
    """
    act = np.asarray(act, dtype=np.int64)
    nN, nH = N.order, H.order
    if act.shape != (nH, nN):
        raise ValueError("action must give one permutation of N per element of H")
    if check:
        for h in range(nH):
            perm = act[h]
            if sorted(perm.tolist()) != list(range(nN)) or perm[0] != 0:
                raise ActionNotAutomorphism(h)
            if not np.array_equal(perm[N.op], N.op[np.ix_(perm, perm)]):
                raise ActionNotAutomorphism(h)
        for h1 in range(nH):
            for h2 in range(nH):
                if not np.array_equal(act[H.op[h1, h2]], act[h1][act[h2]]):
                    raise ActionNotHomomorphism(h1, h2)
    n1 = np.repeat(np.arange(nN), nH)
    h1 = np.tile(np.arange(nH), nN)
    first = N.op[n1[:, None], act[h1[:, None], n1[None, :]]]
    second = H.op[h1[:, None], h1[None, :]]
    return CayleyGroup(first * nH + second, name)


def unit_power_action(p: int, q: int, g: int) -> list[np.ndarray]:
    """Action of ``Z/q`` on ``Z/p`` by ``m: x -> g^m x``."""
    idx = np.arange(p)
    return [(pow(g, m, p) * idx) % p for m in range(q)]


def dihedral_group(n: int) -> CayleyGroup:
    """Dihedral group of order ``2n`` as ``Z/n ⋊ Z/2`` by inversion."""
    neg = (-np.arange(n)) % n
    return semidirect_product(cyclic_group(n), cyclic_group(2),
                              [np.arange(n), neg], name=f"D{2 * n}")


def dicyclic_group(m: int) -> CayleyGroup:
    """Dicyclic group of order ``4m``: ``a^k x^e`` with ``x^2 = a^m``, ``x a x^-1 = a^-1``.

    Elements ``(k, e)`` are flattened as ``2k + e``.
    """
    n2 = 2 * m
    op = np.empty((2 * n2, 2 * n2), dtype=np.int64)
    for k1 in range(n2):
        for e1 in range(2):
            for k2 in range(n2):
                for e2 in range(2):
                    if e1 == 0:
                        k, e = k1 + k2, e2
                    elif e2 == 0:
                        k, e = k1 - k2, 1
                    else:
                        k, e = k1 - k2 + m, 0
                    op[2 * k1 + e1, 2 * k2 + e2] = 2 * (k % n2) + e
    name = "Q8" if m == 2 else ("Q16" if m == 4 else f"Dic{4 * m}")
    return CayleyGroup(op, name)


def group_from_permutations(gens: Sequence[Sequence[int]], name: str | None = None) -> CayleyGroup:
    """Cayley table of the permutation group generated by ``gens``."""
    degree = len(gens[0])
    ident = tuple(range(degree))
    elems = [ident]
    index = {ident: 0}
    queue = deque([ident])
    gens = [tuple(g) for g in gens]
    while queue:
        x = queue.popleft()
        for g in gens:
            y = tuple(g[i] for i in x)  # apply x then g
            if y not in index:
                index[y] = len(elems)
                elems.append(y)
                queue.append(y)
    n = len(elems)
    op = np.empty((n, n), dtype=np.int64)
    for i, x in enumerate(elems):
        for j, y in enumerate(elems):
            op[i, j] = index[tuple(x[k] for k in y)]  # x∘y: apply y then x
    return CayleyGroup(op, name)


def symmetric_group(k: int) -> CayleyGroup:
    if k <= 2:
        return cyclic_group(max(k, 1)) if k == 2 else trivial_group()
    cycle = list(range(1, k)) + [0]
    swap = [1, 0] + list(range(2, k))
    return group_from_permutations([cycle, swap], name=f"S{k}")


def opposite_group(G: CayleyGroup) -> CayleyGroup:
    return CayleyGroup(G.op.T.copy(), f"{G.name}^op" if G.name else None)


def relabel(G: CayleyGroup, perm: Sequence[int], name: str | None = None) -> CayleyGroup:
    """Group transported along ``perm`` (old index -> new index); ``perm[0]`` must be 0."""
    perm = np.asarray(perm, dtype=np.int64)
    inv = np.argsort(perm)
    return CayleyGroup(perm[G.op[np.ix_(inv, inv)]], name or G.name)


# -- subgroups ---------------------------------------------------------------

def subgroup_closure(G: CayleyGroup, gens) -> frozenset[int]:
    """Subgroup generated by ``gens``."""
    gens = [int(g) for g in gens if g != 0]
    seen = {0}
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = int(G.op[x, g])
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return frozenset(seen)


def is_subgroup(G: CayleyGroup, S) -> bool:
    S = set(int(s) for s in S)
    if 0 not in S:
        return False
    return all(int(G.op[a, G.inverse[b]]) in S for a in S for b in S)


def is_normal(G: CayleyGroup, S) -> bool:
    S = frozenset(int(s) for s in S)
    conj = G.conjugation
    return is_subgroup(G, S) and all(int(conj[g, s]) in S for g in range(G.order) for s in S)


def subgroups(G: CayleyGroup) -> list[frozenset[int]]:
    """All subgroups, by closing under adjoining one element at a time."""
    found = {frozenset([0])}
    frontier = [frozenset([0])]
    while frontier:
        nxt = []
        for S in frontier:
            for x in range(G.order):
                if x in S:
                    continue
                T = subgroup_closure(G, set(S) | {x})
                if T not in found:
                    found.add(T)
                    nxt.append(T)
        frontier = nxt
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def sub_cayley_group(G: CayleyGroup, elements, name: str | None = None) -> tuple[CayleyGroup, list[int]]:
    """The subgroup on ``elements`` as a standalone group plus its embedding.

    Returns ``(H, emb)`` with ``emb[i]`` the element of ``G`` labelled ``i`` in ``H``.
    """
    emb = sorted(int(e) for e in elements)
    if not emb or emb[0] != 0 or not is_subgroup(G, emb):
        raise ValueError("elements do not form a subgroup")
    pos = {e: i for i, e in enumerate(emb)}
    op = np.array([[pos[int(G.op[a, b])] for b in emb] for a in emb], dtype=np.int64)
    return CayleyGroup(op, name), emb


def _upper_central_series(G: CayleyGroup) -> list[frozenset[int]]:
    n = G.order
    series = [frozenset([0])]
    while True:
        Z = series[-1]
        # next term: {x : [x, g] in Z for all g}
        nxt = frozenset(x for x in range(n)
                        if all(G.commutator(x, g) in Z for g in range(n)))
        if nxt == Z:
            return series
        series.append(nxt)


# -- structure queries -------------------------------------------------------

def conjugacy_classes(G: CayleyGroup) -> OrbitPartition:
    """Conjugacy classes sorted by (size, least element)."""
    part = orbits(G.conjugation)
    ordered = sorted(part.orbits, key=lambda c: (len(c), c[0]))
    return OrbitPartition(part.n, tuple(ordered))


@dataclass(frozen=True)
class GroupStructure:
    center: frozenset[int]
    derived_subgroup: frozenset[int]
    is_abelian: bool
    is_nilpotent: bool


def structure_queries(G: CayleyGroup) -> GroupStructure:
    return GroupStructure(G.center, G.derived_subgroup, G.is_abelian, G.is_nilpotent)


# -- isomorphisms ------------------------------------------------------------

def generators(G: CayleyGroup) -> list[int]:
    """A small generating set, chosen greedily by decreasing element order."""
    order = sorted(range(1, G.order), key=lambda x: (-int(G.element_order[x]), x))
    gens: list[int] = []
    sub = frozenset([0])
    for x in order:
        if len(sub) == G.order:
            break
        if x not in sub:
            gens.append(x)
            sub = subgroup_closure(G, gens)
    return gens


class _Budget:
    def __init__(self, operation, max_nodes):
        self.operation = operation
        self.max_nodes = max_nodes
        self.nodes = 0

    def tick(self):
        self.nodes += 1
        if self.nodes > self.max_nodes:
            raise BudgetExceeded(self.operation, self.max_nodes)


def _extend(G: CayleyGroup, H: CayleyGroup, gens, images) -> np.ndarray | None:
    """Extend generator images to the generated subgroup, or None on conflict."""
    phi = np.full(G.order, -1, dtype=np.int64)
    used = np.zeros(H.order, dtype=bool)
    phi[0] = 0
    used[0] = True
    queue = deque([0])
    Gop, Hop = G.op, H.op
    while queue:
        x = queue.popleft()
        px = phi[x]
        for g, h in zip(gens, images):
            y = Gop[x, g]
            img = Hop[px, h]
            if phi[y] == -1:
                if used[img]:
                    return None
                phi[y] = img
                used[img] = True
                queue.append(y)
            elif phi[y] != img:
                return None
    return phi


def iter_isomorphisms(G: CayleyGroup, H: CayleyGroup, max_nodes: int = DEFAULT_MAX_NODES,
                      operation: str = "isomorphism search") -> Iterator[np.ndarray]:
    """All isomorphisms ``G -> H`` as image arrays, by generator-image backtracking."""
    if G.order != H.order:
        return
    budget = _Budget(operation, max_nodes)
    gens = generators(G)
    cand = []
    for g in gens:
        mask = (H.element_order == G.element_order[g]) & (H.class_size == G.class_size[g])
        cand.append(np.flatnonzero(mask).tolist())

    def rec(level, images):
        if level == len(gens):
            phi = _extend(G, H, gens, images)
            if phi is not None and (phi >= 0).all():
                yield phi
            return
        for h in cand[level]:
            budget.tick()
            trial = images + [h]
            phi = _extend(G, H, gens[: level + 1], trial)
            if phi is None:
                continue
            yield from rec(level + 1, trial)

    if G.order == 1:
        yield np.zeros(1, dtype=np.int64)
        return
    for phi in rec(0, []):
        if is_homomorphism(G, H, phi):
            yield phi


def is_homomorphism(G: CayleyGroup, H: CayleyGroup, phi) -> bool:
    phi = np.asarray(phi)
    return bool(np.array_equal(phi[G.op], H.op[np.ix_(phi, phi)]))


def find_isomorphism(G: CayleyGroup, H: CayleyGroup,
                     max_nodes: int = DEFAULT_MAX_NODES) -> tuple[int, ...] | None:
    """An isomorphism ``G -> H`` as an image tuple, or None if none exists."""
    if G.profile != H.profile:
        return None
    for phi in iter_isomorphisms(G, H, max_nodes):
        return tuple(int(v) for v in phi)
    return None


def automorphisms(G: CayleyGroup, max_nodes: int = DEFAULT_MAX_NODES) -> list[tuple[int, ...]]:
    """All automorphisms, sorted lexicographically by image table."""
    auts = [tuple(int(v) for v in phi)
            for phi in iter_isomorphisms(G, G, max_nodes, "automorphism search")]
    return sorted(auts)
