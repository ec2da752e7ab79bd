"""Isomorph-free enumeration of all skew braces of a given small order.

Skew braces with additive group ``G`` correspond to regular subgroups of the
holomorph ``G ⋊ Aut(G)``: the unique element of such a subgroup sending 0 to
``a`` is ``(a, λ_a)`` and ``a ∘ b = a + λ_a(b)``.  Two regular subgroups give
isomorphic braces iff they are conjugate under ``Aut(G)``.
"""

from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property, lru_cache

import numpy as np

from .brace import SkewBrace, invariants, validate_brace
from .errors import BudgetExceeded, NoFamilyMatch, NotOneVertex, UnsupportedOrder
from .graphs import CdGraph, lambda_graph, lambda_profile, theta_graph, theta_profile
from .grouplib import groups_of_order
from .groups import DEFAULT_MAX_NODES, CayleyGroup, semidirect_product
from .isomorphism import aut_array, brace_profile

DEFAULT_BOUND = 12
EXTENDED_BOUND = 16


@dataclass(frozen=True, eq=False)
class Holomorph:
    """``G ⋊ Aut(G)`` stored through its automorphism rows and composition lookup."""

    G: CayleyGroup
    auts: np.ndarray                # auts[k] = image table of the k-th automorphism

    @property
    def order(self) -> int:
        return self.G.order * len(self.auts)

    @cached_property
    def _index(self) -> dict[bytes, int]:
        return {row.tobytes(): k for k, row in enumerate(self.auts)}

    def aut_index(self, perm) -> int:
        return self._index[np.asarray(perm, dtype=np.int64).tobytes()]

    def _pack(self, rows: np.ndarray) -> np.ndarray:
        rows = np.asarray(rows, dtype=np.uint64)
        shifts = (4 * np.arange(rows.shape[1])).astype(np.uint64)
        return (rows << shifts).sum(axis=1, dtype=np.uint64)

    @cached_property
    def _packed(self) -> tuple[np.ndarray, np.ndarray]:
        keys = self._pack(self.auts)
        order = np.argsort(keys)
        return keys[order], order

    def lookup(self, rows) -> np.ndarray:
        """Automorphism indices of the permutation rows ``rows``."""
        rows = np.asarray(rows, dtype=np.int64)
        if self.G.order > 16:
            return np.array([self._index[r.tobytes()] for r in rows], dtype=np.int64)
        keys, order = self._packed
        return order[np.searchsorted(keys, self._pack(rows))]

    @cached_property
    def identity_aut(self) -> int:
        return self.aut_index(np.arange(self.G.order))

    @cached_property
    def compose_table(self) -> np.ndarray | None:
        """``compose[i, j]`` = index of ``auts[i] ∘ auts[j]``; None when too large to tabulate."""
        k = len(self.auts)
        if k > 2000:
            return None
        table = np.empty((k, k), dtype=np.int64)
        for i in range(k):
            rows = self.auts[i][self.auts]
            table[i] = [self._index[r.tobytes()] for r in rows]
        return table

    def compose(self, i: int, j: int, memo: dict) -> int:
        tab = self.compose_table
        if tab is not None:
            return int(tab[i, j])
        key = (i, j)
        r = memo.get(key)
        if r is None:
            r = self._index[self.auts[i][self.auts[j]].tobytes()]
            memo[key] = r
        return r

    def mul(self, x: tuple[int, int], y: tuple[int, int], memo: dict) -> tuple[int, int]:
        """``(a, α)(b, β) = (a + α(b), αβ)``."""
        a, al = x
        b, be = y
        return int(self.G.op[a, self.auts[al][b]]), self.compose(al, be, memo)

    def as_group(self) -> CayleyGroup:
        """The holomorph as a Cayley table; index ``a * |Aut| + k``."""
        return semidirect_product(self.G, _aut_group(self), list(self.auts), name=f"Hol({self.G.name})", check=False)


def _aut_group(H: Holomorph) -> CayleyGroup:
    tab = H.compose_table
    if tab is None:
        raise BudgetExceeded("automorphism group table", 2000)
    return CayleyGroup(tab, name=f"Aut({H.G.name})")


def holomorph(G: CayleyGroup) -> Holomorph:
    return Holomorph(G, aut_array(G))


# -- regular subgroup search -------------------------------------------------

class _Search:
    def __init__(self, hol: Holomorph, max_nodes: int):
        self.hol = hol
        self.n = hol.G.order
        self.max_nodes = max_nodes
        self.nodes = 0
        self.memo: dict = {}

    def tick(self):
        self.nodes += 1
        if self.nodes > self.max_nodes:
            raise BudgetExceeded("regular subgroup search", self.max_nodes)

    def close(self, assigned: dict[int, int], gens: list[tuple[int, int]]) -> dict[int, int] | None:
        """Subgroup generated by ``gens``; None on a clash with ``assigned`` or non-regularity."""
        hol = self.hol
        seen = {0: hol.identity_aut}
        queue = deque([(0, hol.identity_aut)])
        while queue:
            x = queue.popleft()
            for g in gens:
                a, al = hol.mul(x, g, self.memo)
                prev = seen.get(a)
                if prev is None:
                    known = assigned.get(a)
                    if known is not None and known != al:
                        return None
                    seen[a] = al
                    queue.append((a, al))
                elif prev != al:
                    return None
        return seen

    def stabilizer(self, a: int, assigned: dict[int, int]) -> np.ndarray:
        """Indices of ``σ ∈ Aut(G)`` fixing ``a`` and normalizing the assigned subgroup.

        Conjugating by such ``σ`` maps regular subgroups containing the
        assigned part to others of the same kind, so ``λ_a`` only needs to
        range over orbit representatives.
        """
        auts = self.hol.auts
        cand = np.flatnonzero(auts[:, a] == a)
        dom = np.fromiter(assigned, dtype=np.int64)
        if len(dom) == 1:
            return cand
        lam_at = np.full(self.n, -1, dtype=np.int64)
        lam_at[dom] = [assigned[int(b)] for b in dom]
        sig = auts[cand]
        moved = lam_at[sig[:, dom]]                       # λ at σ(b)
        ok = (moved >= 0).all(axis=1)
        cand, sig, moved = cand[ok], sig[ok], moved[ok]
        if len(cand) == 0:
            return cand
        beta = auts[lam_at[dom]]                           # |S| x n
        lhs = sig[np.arange(len(cand))[:, None, None], beta[None, :, :]]      # σ∘β_b
        rhs = np.take_along_axis(auts[moved], np.broadcast_to(sig[:, None, :], lhs.shape), axis=2)
        good = (lhs == rhs).all(axis=(1, 2))
        return cand[good]

    def orbit_reps(self, choices: list[int], H: np.ndarray) -> list[int]:
        """Representatives of ``choices`` under conjugation by the automorphisms ``H``."""
        if len(H) <= 1 or not choices:
            return list(choices)
        auts = self.hol.auts
        Hs = auts[H]
        Hinv = np.argsort(Hs, axis=1)
        seen: set[int] = set()
        reps = []
        for k in choices:
            if k in seen:
                continue
            reps.append(k)
            rows = np.take_along_axis(Hs, auts[k][Hinv], axis=1)          # σ α σ^{-1}
            seen.update(self.hol.lookup(rows).tolist())
        return reps

    def prefilter(self, a: int, assigned: dict[int, int], choices) -> list[int]:
        """Drop ``α`` for which ``(a, α)(b, λ_b)`` lands on an already assigned point.

        Such a product would lie in the assigned subgroup and force ``(a, α)``
        into it, although ``a`` is not assigned.
        """
        idx = np.fromiter(choices, dtype=np.int64)
        if len(idx) == 0:
            return []
        dom = np.fromiter(assigned, dtype=np.int64)
        inside = np.zeros(self.n, dtype=bool)
        inside[dom] = True
        images = self.hol.G.op[a, self.hol.auts[idx][:, dom]]       # a + α(b)
        keep = ~inside[images].any(axis=1)
        return idx[keep].tolist()

    def run(self) -> list[dict[int, int]]:
        found: list[dict[int, int]] = []
        n = self.n
        if n == 1:
            return [{0: self.hol.identity_aut}]
        naut = len(self.hol.auts)

        def rec(assigned: dict[int, int], gens: list[tuple[int, int]]):
            if len(assigned) == n:
                found.append(assigned)
                return
            a = min(x for x in range(n) if x not in assigned)
            choices = self.prefilter(a, assigned, range(naut))
            choices = self.orbit_reps(choices, self.stabilizer(a, assigned))
            for al in choices:
                self.tick()
                trial = gens + [(a, al)]
                closed = self.close(assigned, trial)
                if closed is None or n % len(closed):
                    continue
                rec(closed, trial)

        rec({0: self.hol.identity_aut}, [])
        return found


def _circ_from_lambda(G: CayleyGroup, hol: Holomorph, lam: dict[int, int]) -> np.ndarray:
    rows = np.stack([hol.auts[lam[a]] for a in range(G.order)])
    return G.op[np.arange(G.order)[:, None], rows]


def _lex_min_row(rows: np.ndarray) -> np.ndarray:
    alive = np.arange(len(rows))
    for j in range(rows.shape[1]):
        col = rows[alive, j]
        alive = alive[col == col.min()]
        if len(alive) == 1:
            break
    return rows[alive[0]]


def canonical_circ(circ: np.ndarray, auts: np.ndarray, chunk: int = 2048) -> bytes:
    """Least ``σ``-transform of a circle table over ``σ ∈ Aut(G)``, as bytes."""
    n = circ.shape[0]
    best = None
    for start in range(0, len(auts), chunk):
        S = auts[start:start + chunk]
        Sinv = np.argsort(S, axis=1)
        moved = circ[Sinv[:, :, None], Sinv[:, None, :]]                    # circ(σ⁻¹x, σ⁻¹y)
        images = np.take_along_axis(S, moved.reshape(len(S), -1), axis=1)   # σ(...)
        cand = _lex_min_row(images)
        if best is None or tuple(cand) < tuple(best):
            best = cand
    return np.asarray(best, dtype=np.int64).reshape(n, n).tobytes()


def braces_with_additive_group(G: CayleyGroup, max_nodes: int = DEFAULT_MAX_NODES,
                               stats: dict | None = None) -> list[SkewBrace]:
    """One brace per isomorphism class with additive group ``G``, sorted by circle table."""
    hol = holomorph(G)
    search = _Search(hol, max_nodes)
    subgroups = search.run()
    classes: dict[bytes, np.ndarray] = {}
    for lam in subgroups:
        circ = _circ_from_lambda(G, hol, lam)
        key = canonical_circ(circ, hol.auts)
        if key not in classes:
            classes[key] = np.frombuffer(key, dtype=np.int64).reshape(G.order, G.order)
    if stats is not None:
        stats["nodes"] = stats.get("nodes", 0) + search.nodes
        stats["subgroups_found"] = stats.get("subgroups_found", 0) + len(subgroups)
    return [validate_brace(G.op, classes[k]) for k in sorted(classes)]


# -- census report -----------------------------------------------------------

@dataclass(frozen=True, eq=False)
class BraceSummary:
    index: int
    additive: str
    multiplicative: str
    invariants: dict
    lambda_graph: CdGraph
    theta_graph: CdGraph
    lambda_profile: dict
    theta_profile: dict
    family: str | None = None

    def as_dict(self) -> dict:
        from .graphs import graph_to_json
        return {
            "index": self.index,
            "additive": self.additive,
            "multiplicative": self.multiplicative,
            "invariants": self.invariants,
            "lambda_graph": {**graph_to_json(self.lambda_graph), **self.lambda_graph.summary()},
            "theta_graph": {**graph_to_json(self.theta_graph), **self.theta_graph.summary()},
            "lambda_profile": self.lambda_profile,
            "theta_profile": self.theta_profile,
            "family": self.family,
        }


@dataclass(frozen=True, eq=False)
class CensusReport:
    n: int
    braces: tuple[SkewBrace, ...]
    additive_names: tuple[str, ...]
    seconds: float
    stats: dict = field(default_factory=dict)

    def __len__(self):
        return len(self.braces)

    @cached_property
    def summaries(self) -> tuple[BraceSummary, ...]:
        return tuple(summarize(k, B, a) for k, (B, a) in
                     enumerate(zip(self.braces, self.additive_names)))

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "count": len(self.braces),
            "seconds": round(self.seconds, 3),
            "braces": [s.as_dict() for s in self.summaries],
        }


def _profile_dict(p) -> dict:
    return {"trivial": p.trivial_count, "counts": {str(k): v for k, v in p.counts.items()}}


def summarize(index: int, B: SkewBrace, additive: str | None = None) -> BraceSummary:
    from .catalog import recognize_one_vertex
    from .grouplib import identify
    inv = invariants(B).summary()
    lg, tg = lambda_graph(B), theta_graph(B)
    family = None
    if lg.num_vertices == 1:
        try:
            family = str(recognize_one_vertex(B))
        except NotOneVertex:
            family = None
        except NoFamilyMatch:
            family = "unmatched"
    return BraceSummary(
        index=index,
        additive=additive or identify(B.add)[1],
        multiplicative=identify(B.circ)[1],
        invariants=inv,
        lambda_graph=lg,
        theta_graph=tg,
        lambda_profile=_profile_dict(lambda_profile(B)),
        theta_profile=_profile_dict(theta_profile(B)),
        family=family,
    )


def _sort_key(B: SkewBrace, add_index: int) -> tuple:
    prof = brace_profile(B)
    return (add_index, repr(prof), B.circ.op.tobytes())


@lru_cache(maxsize=None)
def _census(n: int, max_nodes: int) -> CensusReport:
    t0 = time.perf_counter()
    stats: dict = {}
    rows = []
    for k, G in enumerate(groups_of_order(n)):
        for B in braces_with_additive_group(G, max_nodes, stats):
            B = SkewBrace(B.add, B.circ, f"B{n}_{G.name}")
            rows.append((_sort_key(B, k), B, G.name))
    rows.sort(key=lambda r: r[0])
    braces = []
    names = []
    for idx, (_, B, gname) in enumerate(rows):
        braces.append(SkewBrace(B.add, B.circ, f"SB({n},{idx})"))
        names.append(gname)
    return CensusReport(n, tuple(braces), tuple(names), time.perf_counter() - t0, stats)


def enumerate_braces(n: int, allow_extended: bool = False,
                     max_nodes: int = DEFAULT_MAX_NODES) -> CensusReport:
    """All skew braces of order ``n`` up to isomorphism.

    ``n`` may be at most 12 unless ``allow_extended`` is set, which raises the
    bound to 16.  Results are cached per ``(n, max_nodes)``.
    """
    bound = EXTENDED_BOUND if allow_extended else DEFAULT_BOUND
    if not 1 <= n <= bound:
        hint = "" if allow_extended or n > EXTENDED_BOUND else " (pass allow_extended for 13..16)"
        raise UnsupportedOrder(f"census order {n} outside 1..{bound}{hint}")
    return _census(n, max_nodes)
