"""The Yang-Baxter solution ``r_A(a, b) = (λ_a(b), ρ_b(a))`` of a skew brace.

``ρ_b(a) = (λ_a(b))′ ∘ a ∘ b`` where ``x′`` is the inverse in ``(A, ∘)``.
The θ-orbit partition is the largest quotient of ``r_A`` that is a twist
``(x, y) ↦ (y, x)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .brace import SkewBrace
from .errors import NotGenerating, NotSubsolution, SkewBraceError
from .graphs import CdGraph, graph_from_sizes, theta_graph, theta_orbits
from .orbits import OrbitPartition, UnionFind


@dataclass(frozen=True, eq=False)
class SolutionMap:
    """``r(a, b) = (lam[a, b], rho[b, a])`` on ``{0..n-1}``."""

    n: int
    lam: np.ndarray
    rho: np.ndarray

    def __call__(self, a: int, b: int) -> tuple[int, int]:
        return int(self.lam[a, b]), int(self.rho[b, a])

    @property
    def left(self) -> np.ndarray:
        """First coordinate of ``r`` as an ``n x n`` table indexed ``[a, b]``."""
        return self.lam

    @property
    def right(self) -> np.ndarray:
        """Second coordinate of ``r`` indexed ``[a, b]``."""
        return self.rho.T

    def is_bijective(self) -> bool:
        codes = self.left * self.n + self.right
        return len(np.unique(codes)) == self.n * self.n

    def is_nondegenerate(self) -> bool:
        ident = np.arange(self.n)
        return bool((np.sort(self.lam, axis=1) == ident).all() and (np.sort(self.rho, axis=1) == ident).all())

    def as_dict(self) -> dict:
        return {"n": self.n, "lambda": self.lam.tolist(), "rho": self.rho.tolist()}


def twist(n: int) -> SolutionMap:
    """``(a, b) ↦ (b, a)``."""
    rows = np.tile(np.arange(n), (n, 1))
    return SolutionMap(n, rows, rows.copy())


def solution_of(A: SkewBrace) -> SolutionMap:
    """The solution ``r_A``; bijectivity and non-degeneracy are checked."""
    n = A.n
    lam = np.asarray(A.lam)
    circ = A.circ.op
    a = np.arange(n)[:, None]
    b = np.arange(n)[None, :]
    # right[a, b] = λ_a(b)′ ∘ a ∘ b
    right = circ[circ[A.cinv[lam], a], b]
    S = SolutionMap(n, lam.copy(), np.ascontiguousarray(right.T))
    if not (S.is_bijective() and S.is_nondegenerate()):
        raise SkewBraceError(f"r_A of {A!r} is not a bijective non-degenerate solution")
    return S


@dataclass(frozen=True)
class YbeResult:
    ok: bool
    witness: tuple[int, int, int] | None = None

    def __bool__(self):
        return self.ok


def verify_ybe(S: SolutionMap) -> YbeResult:
    """Check ``r12 r23 r12 = r23 r12 r23`` on every triple; report the first failure."""
    n = S.n
    L, R = S.left, S.right
    x, y, z = np.meshgrid(np.arange(n), np.arange(n), np.arange(n), indexing="ij")

    def r12(u, v, w):
        return L[u, v], R[u, v], w

    def r23(u, v, w):
        return u, L[v, w], R[v, w]

    lhs = r12(*r23(*r12(x, y, z)))
    rhs = r23(*r12(*r23(x, y, z)))
    bad = np.zeros(x.shape, dtype=bool)
    for p, q in zip(lhs, rhs):
        bad |= p != q
    if not bad.any():
        return YbeResult(True)
    i, j, k = np.argwhere(bad)[0]
    return YbeResult(False, (int(i), int(j), int(k)))


@dataclass(frozen=True, eq=False)
class TwistQuotient:
    partition: OrbitPartition
    projection: np.ndarray           # point -> position of its θ-orbit
    is_morphism: bool

    @property
    def size(self) -> int:
        return len(self.partition.orbits)


def twist_quotient(A: SkewBrace) -> TwistQuotient:
    """Project ``r_A`` onto the θ-orbits and check it lands on the twist.

    The projection ``φ`` is a solution morphism iff ``λ_a(b) ∈ Θ(b)`` and
    ``ρ_b(a) ∈ Θ(a)`` for all ``a, b``.
    """
    S = solution_of(A)
    part = theta_orbits(A)
    phi = part.orbit_index()
    n = A.n
    a = np.arange(n)[:, None]
    b = np.arange(n)[None, :]
    ok = bool((phi[S.left] == phi[b]).all() and (phi[S.right] == phi[a]).all())
    return TwistQuotient(part, phi, ok)


def theta_conjugation_identity_check(A: SkewBrace) -> YbeResult:
    """Check ``θ_(x,y)(a) = λ_{y∘(−λ_{y′}(x))}(ρ_{−λ_{a′∘y′}(x)}(a))`` on all triples.

    Returns the first failing ``(x, y, a)`` as the witness.
    """
    n = A.n
    lam = np.asarray(A.lam)
    circ, cinv, neg, add = A.circ.op, A.cinv, A.neg, A.add.op
    S = solution_of(A)
    x, y, a = np.meshgrid(np.arange(n), np.arange(n), np.arange(n), indexing="ij")
    lhs = add[add[x, lam[y, a]], neg[x]]
    u = circ[y, neg[lam[cinv[y], x]]]
    v = neg[lam[circ[cinv[a], cinv[y]], x]]
    rhs = lam[u, S.rho[v, a]]
    bad = lhs != rhs
    if not bad.any():
        return YbeResult(True)
    i, j, k = np.argwhere(bad)[0]
    return YbeResult(False, (int(i), int(j), int(k)))


# -- morphisms to twists -----------------------------------------------------

def twist_morphism_partition(S: SolutionMap) -> OrbitPartition:
    """Finest partition through which every morphism to a twist factors.

    ``ψ`` is a morphism to a twist iff ``ψ(λ_a(b)) = ψ(b)`` and
    ``ψ(ρ_b(a)) = ψ(a)``, so ``ψ`` is constant on the orbits of the group
    generated by all ``λ_a`` and ``ρ_b``.
    """
    uf = UnionFind(S.n)
    for table in (S.lam, S.rho):
        for row in table:
            for x, y in enumerate(row.tolist()):
                uf.union(x, y)
    classes: dict[int, list[int]] = {}
    for x in range(S.n):
        classes.setdefault(uf.find(x), []).append(x)
    return OrbitPartition(S.n, tuple(sorted(tuple(c) for c in classes.values())))


def is_twist_morphism(S: SolutionMap, psi) -> bool:
    psi = np.asarray(psi)
    b = np.arange(S.n)
    return bool((psi[S.lam] == psi[b][None, :]).all() and (psi[S.rho] == psi[b][None, :]).all())


def twist_morphisms(S: SolutionMap, target_size: int):
    """Every map ``ψ: A -> {0..k-1}`` that is a morphism ``r -> twist``, by brute force."""
    for psi in itertools.product(range(target_size), repeat=S.n):
        if is_twist_morphism(S, psi):
            yield psi


def universality_violations(A: SkewBrace, max_target: int = 4) -> list[tuple[int, ...]]:
    """Morphisms to small twists that are not constant on θ-orbits (should be none)."""
    S = solution_of(A)
    part = theta_orbits(A)
    bad = []
    for k in range(1, max_target + 1):
        for psi in twist_morphisms(S, k):
            if any(len({psi[x] for x in orbit}) > 1 for orbit in part.orbits):
                bad.append(psi)
    return bad


# -- subsolutions ------------------------------------------------------------

def brace_closure(A: SkewBrace, X) -> frozenset[int]:
    """Sub-skew-brace generated by ``X``: closure under ``+``, ``∘`` and both inverses."""
    seen = set(int(x) for x in X) | {0}
    frontier = list(seen)
    add, circ = A.add.op, A.circ.op
    while frontier:
        new = set()
        for x in frontier:
            new.add(int(A.neg[x]))
            new.add(int(A.cinv[x]))
            for y in list(seen):
                new.update((int(add[x, y]), int(add[y, x]), int(circ[x, y]), int(circ[y, x])))
        frontier = list(new - seen)
        seen |= new
    return frozenset(seen)


def solution_closure(A: SkewBrace, X) -> frozenset[int]:
    """Least ``r_A``-invariant subset containing ``X``."""
    S = solution_of(A)
    seen = set(int(x) for x in X)
    while True:
        idx = np.fromiter(seen, dtype=np.int64)
        new = set(S.left[np.ix_(idx, idx)].ravel().tolist()) | set(S.right[np.ix_(idx, idx)].ravel().tolist())
        if new <= seen:
            return frozenset(seen)
        seen |= new


def generating_subsolution_graph(A: SkewBrace, X) -> CdGraph:
    """Common-divisor graph of the nontrivial θ-orbits meeting a generating subsolution ``X``.

    Raises NotGenerating or NotSubsolution when ``X`` fails the hypotheses.
    The result is checked against the induced subgraph of Θ(A), and each
    orbit meeting ``X`` must lie inside ``X``.
    """
    X = frozenset(int(x) for x in X)
    if brace_closure(A, X) != frozenset(range(A.n)):
        raise NotGenerating(f"{sorted(X)} does not generate {A!r}")
    if solution_closure(A, X) != X:
        raise NotSubsolution(f"{sorted(X)} is not invariant under r_A")
    th = theta_graph(A)
    part = th.partition
    keep = [i for i, v in enumerate(th.vertices) if X & set(part.orbits[v.orbit_id])]
    for i in keep:
        orbit = part.orbits[th.vertices[i].orbit_id]
        if not set(orbit) <= X:
            raise SkewBraceError(f"θ-orbit {orbit} meets X but is not contained in it")
    g = graph_from_sizes([th.vertices[i].size for i in keep], [th.vertices[i].orbit_id for i in keep], part)
    pos = {i: k for k, i in enumerate(keep)}
    induced = {(pos[i], pos[j]) for i, j in th.edges if i in pos and j in pos}
    if induced != set(g.edges):
        raise SkewBraceError("subsolution graph differs from the induced subgraph of Θ(A)")
    return g
