"""Isoclinism of skew braces.

``A`` and ``B`` are isoclinic when there are brace isomorphisms
``ξ: A/Ann(A) -> B/Ann(B)`` and ``δ: A′ -> B′`` such that
``δ([a, b]_+) = [ξa, ξb]_+`` and ``δ(a * b) = ξa * ξb``.  Since ``A′`` is
additively generated by those values, ``δ`` is forced by ``ξ``; the search
runs over ``ξ`` and extends ``δ`` additively.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

from .brace import SkewBrace, a_prime, ann, cosets, quotient_brace
from .errors import BudgetExceeded, SkewBraceError
from .graphs import graphs_isomorphic, lambda_graph, lambda_profile, theta_graph, theta_profile
from .groups import DEFAULT_MAX_NODES
from .isomorphism import iter_brace_isomorphisms


@dataclass(frozen=True, eq=False)
class CommutatorMaps:
    """``φ_+`` and ``φ_*`` on pairs of ``Ann(A)``-cosets, valued in ``A′``."""

    brace: SkewBrace
    ann: frozenset[int]
    label: np.ndarray               # element -> coset index
    reps: np.ndarray                # coset index -> least element
    quotient: SkewBrace
    derived: frozenset[int]         # A′
    plus: np.ndarray                # plus[i, j] = [r_i, r_j]_+
    star: np.ndarray                # star[i, j] = r_i * r_j


def _additive_commutators(A: SkewBrace) -> np.ndarray:
    add, neg = A.add.op, A.neg
    n = A.n
    a = np.arange(n)[:, None]
    b = np.arange(n)[None, :]
    return add[add[add[a, b], neg[a]], neg[b]]


def _star_table(A: SkewBrace) -> np.ndarray:
    return A.add.op[np.asarray(A.lam), A.neg[None, :]]


def commutator_maps(A: SkewBrace) -> CommutatorMaps:
    """Tabulate ``φ_+`` and ``φ_*``; raises if either depends on the coset representative."""
    I = ann(A)
    cs = cosets(A, I)
    label = np.empty(A.n, dtype=np.int64)
    for k, c in enumerate(cs):
        label[list(c)] = k
    reps = np.array([c[0] for c in cs], dtype=np.int64)
    comm = _additive_commutators(A)
    star = _star_table(A)
    for name, table in (("[a,b]_+", comm), ("a*b", star)):
        on_reps = table[np.ix_(reps, reps)]
        if not np.array_equal(table, on_reps[np.ix_(label, label)]):
            raise SkewBraceError(f"{name} is not constant on Ann(A)-cosets of {A!r}")
    derived = a_prime(A)
    return CommutatorMaps(
        brace=A, ann=I, label=label, reps=reps,
        quotient=quotient_brace(A, I),
        derived=derived,
        plus=comm[np.ix_(reps, reps)],
        star=star[np.ix_(reps, reps)],
    )


@dataclass(frozen=True)
class IsoclinismWitness:
    xi: tuple[int, ...]             # coset index of A/Ann(A) -> coset index of B/Ann(B)
    delta: dict[int, int]           # A′ -> B′

    def as_dict(self) -> dict:
        return {"xi": list(self.xi), "delta": {str(k): v for k, v in sorted(self.delta.items())}}


def _extend_delta(A: SkewBrace, B: SkewBrace, seeds: dict[int, int]) -> dict[int, int] | None:
    """Additive extension of ``seeds`` to the subgroup they generate, or None on a clash."""
    delta = dict(seeds)
    delta[0] = 0
    gens = list(seeds.items())
    frontier = list(delta.items())
    addA, addB = A.add.op, B.add.op
    while frontier:
        nxt = []
        for x, y in frontier:
            for g, h in gens:
                u, v = int(addA[x, g]), int(addB[y, h])
                known = delta.get(u)
                if known is None:
                    delta[u] = v
                    nxt.append((u, v))
                elif known != v:
                    return None
        frontier = nxt
    return delta


def check_witness(mA: CommutatorMaps, mB: CommutatorMaps, xi, delta: dict[int, int]) -> str | None:
    """Reason the pair ``(ξ, δ)`` is not an isoclinism, or None if it is."""
    A, B = mA.brace, mB.brace
    xi = np.asarray(xi, dtype=np.int64)
    QA, QB = mA.quotient, mB.quotient
    if len(xi) != QA.n or QA.n != QB.n or len(set(xi.tolist())) != QA.n:
        return "ξ is not a bijection of the quotients"
    if not (np.array_equal(xi[QA.add.op], QB.add.op[np.ix_(xi, xi)])
            and np.array_equal(xi[QA.circ.op], QB.circ.op[np.ix_(xi, xi)])):
        return "ξ is not a brace isomorphism"
    if set(delta) != set(mA.derived) or set(delta.values()) != set(mB.derived):
        return "δ is not a bijection A′ -> B′"
    dom = sorted(mA.derived)
    for x in dom:
        for y in dom:
            if delta[int(A.add.op[x, y])] != int(B.add.op[delta[x], delta[y]]):
                return "δ is not additive"
            z = int(A.circ.op[x, y])
            if z in delta and delta[z] != int(B.circ.op[delta[x], delta[y]]):
                return "δ does not preserve ∘"
    for i in range(QA.n):
        for j in range(QA.n):
            if delta[int(mA.plus[i, j])] != int(mB.plus[xi[i], xi[j]]):
                return f"φ_+ square fails at cosets ({i}, {j})"
            if delta[int(mA.star[i, j])] != int(mB.star[xi[i], xi[j]]):
                return f"φ_* square fails at cosets ({i}, {j})"
    return None


def is_isoclinic(A: SkewBrace, B: SkewBrace, max_nodes: int = DEFAULT_MAX_NODES) -> IsoclinismWitness | None:
    """A verified isoclinism witness, or None when none exists."""
    mA, mB = commutator_maps(A), commutator_maps(B)
    if mA.quotient.n != mB.quotient.n or len(mA.derived) != len(mB.derived):
        return None
    QA, QB = mA.quotient, mB.quotient
    nodes = 0
    for xi in iter_brace_isomorphisms(QA, QB, max_nodes=max_nodes):
        nodes += 1
        if nodes > max_nodes:
            raise BudgetExceeded("isoclinism search", max_nodes)
        seeds: dict[int, int] = {}
        clash = False
        for i in range(QA.n):
            for j in range(QA.n):
                for src, dst in ((mA.plus[i, j], mB.plus[xi[i], xi[j]]), (mA.star[i, j], mB.star[xi[i], xi[j]])):
                    src, dst = int(src), int(dst)
                    if seeds.setdefault(src, dst) != dst:
                        clash = True
                        break
                if clash:
                    break
            if clash:
                break
        if clash:
            continue
        delta = _extend_delta(A, B, seeds)
        if delta is None:
            continue
        if check_witness(mA, mB, xi, delta) is None:
            return IsoclinismWitness(tuple(int(v) for v in xi), delta)
    return None


# -- consequences ------------------------------------------------------------

@dataclass(frozen=True)
class IsoclinismReport:
    scale: tuple[int, int]                  # (|A|, |B|) reduced
    lambda_scaling: bool
    theta_scaling: bool
    additive_groups_isoclinic: bool
    multiplicative_groups_isoclinic: bool
    same_size: bool
    lambda_graphs_isomorphic: bool | None   # only decided for equal sizes
    theta_graphs_isomorphic: bool | None
    lambda_completeness_agrees: bool
    theta_completeness_agrees: bool
    lambda_components_agree: bool
    theta_components_agree: bool

    @property
    def ok(self) -> bool:
        flags = [self.lambda_scaling, self.theta_scaling, self.additive_groups_isoclinic,
                 self.multiplicative_groups_isoclinic, self.lambda_completeness_agrees,
                 self.theta_completeness_agrees, self.lambda_components_agree, self.theta_components_agree]
        if self.same_size:
            flags += [bool(self.lambda_graphs_isomorphic), bool(self.theta_graphs_isomorphic)]
        return all(flags)

    def as_dict(self) -> dict:
        d = dict(self.__dict__)
        d["scale"] = list(self.scale)
        d["ok"] = self.ok
        return d


def _scaling_holds(pa, pb, na: int, nb: int) -> bool:
    sizes = set(pa.counts) | set(pb.counts) | {1}
    return all(nb * pa[m] == pb[m] * na for m in sizes)


def _group_isoclinism_induced(mA: CommutatorMaps, mB: CommutatorMaps, xi, which: str) -> bool:
    """Check that ``ξ`` descends to an isoclinism of ``(A,+)``/``(B,+)`` or ``(A,∘)``/``(B,∘)``.

    The maps are ``a Z(A) ↦ b Z(B)`` for any ``b`` in ``ξ(a + Ann(A))`` and
    ``[a, c] ↦ [b, d]`` on the derived subgroups; both must be well defined
    and bijective.
    """
    A, B = mA.brace, mB.brace
    GA = A.add if which == "add" else A.circ
    GB = B.add if which == "add" else B.circ
    zA, zB = GA.center, GB.center
    ccA = _center_classes(GA, zA)
    ccB = _center_classes(GB, zB)
    image: dict[int, int] = {}
    for a in range(A.n):
        b = int(mB.reps[xi[int(mA.label[a])]])
        k, v = ccA[a], ccB[b]
        if image.setdefault(k, v) != v:
            return False
    if len(set(image.values())) != len(image) or len(image) != len(set(ccB.tolist())):
        return False
    comm: dict[int, int] = {}
    for a in range(A.n):
        b = int(mB.reps[xi[int(mA.label[a])]])
        for c in range(A.n):
            d = int(mB.reps[xi[int(mA.label[c])]])
            u, v = GA.commutator(a, c), GB.commutator(b, d)
            if comm.setdefault(u, v) != v:
                return False
    return len(set(comm.values())) == len(comm)


def _center_classes(G, Z) -> np.ndarray:
    Z = sorted(Z)
    label = np.full(G.order, -1, dtype=np.int64)
    k = 0
    for g in range(G.order):
        if label[g] < 0:
            label[[int(G.op[g, z]) for z in Z]] = k
            k += 1
    return label


def verify_isoclinism_consequences(A: SkewBrace, B: SkewBrace, witness: IsoclinismWitness) -> IsoclinismReport:
    mA, mB = commutator_maps(A), commutator_maps(B)
    reason = check_witness(mA, mB, witness.xi, witness.delta)
    if reason is not None:
        raise SkewBraceError(f"invalid isoclinism witness: {reason}")
    g = gcd(A.n, B.n)
    lA, lB = lambda_graph(A), lambda_graph(B)
    tA, tB = theta_graph(A), theta_graph(B)
    same = A.n == B.n
    return IsoclinismReport(
        scale=(A.n // g, B.n // g),
        lambda_scaling=_scaling_holds(lambda_profile(A), lambda_profile(B), A.n, B.n),
        theta_scaling=_scaling_holds(theta_profile(A), theta_profile(B), A.n, B.n),
        additive_groups_isoclinic=_group_isoclinism_induced(mA, mB, witness.xi, "add"),
        multiplicative_groups_isoclinic=_group_isoclinism_induced(mA, mB, witness.xi, "circ"),
        same_size=same,
        lambda_graphs_isomorphic=graphs_isomorphic(lA, lB) if same else None,
        theta_graphs_isomorphic=graphs_isomorphic(tA, tB) if same else None,
        lambda_completeness_agrees=lA.is_complete == lB.is_complete,
        theta_completeness_agrees=tA.is_complete == tB.is_complete,
        lambda_components_agree=len(lA.components) == len(lB.components),
        theta_components_agree=len(tA.components) == len(tB.components),
    )


def isoclinism_classes(braces) -> list[list[int]]:
    """Partition positions of ``braces`` into isoclinism classes (first-found order)."""
    classes: list[list[int]] = []
    for k, A in enumerate(braces):
        for cls in classes:
            if is_isoclinic(A, braces[cls[0]]) is not None:
                cls.append(k)
                break
        else:
            classes.append([k])
    return classes
