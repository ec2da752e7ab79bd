"""Skew braces on index sets: validation, the λ/θ actions and structural subsets."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import (
    AddNotGroup,
    CircNotGroup,
    CompatibilityFailed,
    GroupError,
    IdentityMismatch,
    NotIdeal,
)
from .groups import (
    CayleyGroup,
    find_identity,
    is_normal,
    is_subgroup,
    opposite_group,
    semidirect_product,
    subgroups,
    validate_group,
    _check_table,
    _swap_labels,
)


@dataclass(frozen=True, eq=False)
class SkewBrace:
    """Two group structures ``add`` and ``circ`` on ``0..n-1`` sharing identity 0."""

    add: CayleyGroup
    circ: CayleyGroup
    name: str | None = None

    @property
    def n(self) -> int:
        return self.add.order

    def __len__(self):
        return self.n

    def __repr__(self):
        label = f" {self.name}" if self.name else ""
        return f"<SkewBrace{label} of order {self.n}>"

    @property
    def neg(self) -> np.ndarray:
        return self.add.inverse

    @property
    def cinv(self) -> np.ndarray:
        return self.circ.inverse

    def same_tables(self, other: "SkewBrace") -> bool:
        return self.add.same_table(other.add) and self.circ.same_table(other.circ)

    def sub(self, a: int, b: int) -> int:
        """``a - b`` in the additive group."""
        return int(self.add.op[a, self.neg[b]])

    @cached_property
    def lam(self) -> np.ndarray:
        """``lam[a, x] = -a + a∘x``."""
        lam = self.add.op[self.neg[:, None], self.circ.op]
        lam.setflags(write=False)
        return lam

    @cached_property
    def theta(self) -> np.ndarray:
        """``theta[a * n + b, c] = a + λ_b(c) - a``."""
        n = self.n
        conj = self.add.conjugation          # conj[a, x] = a + x - a
        th = conj[np.repeat(np.arange(n), n)[:, None], np.tile(self.lam, (n, 1))]
        th.setflags(write=False)
        return th

    @cached_property
    def is_trivial(self) -> bool:
        return self.add.same_table(self.circ)

    @cached_property
    def fix(self) -> frozenset[int]:
        ident = np.arange(self.n)
        return frozenset(int(x) for x in np.flatnonzero((self.lam == ident).all(axis=0)))

    @cached_property
    def ker_lambda(self) -> frozenset[int]:
        ident = np.arange(self.n)
        return frozenset(int(a) for a in np.flatnonzero((self.lam == ident).all(axis=1)))


def _compatibility_witness(add: np.ndarray, neg: np.ndarray, circ: np.ndarray):
    """First triple violating ``a∘(b+c) = a∘b - a + a∘c``, or None."""
    lhs = circ[:, add]                                   # [a, b, c]
    ab = circ[:, :, None]
    ac = circ[:, None, :]
    rhs = add[add[ab, neg[:, None, None]], ac]
    bad = np.argwhere(lhs != rhs)
    if len(bad):
        return tuple(int(v) for v in bad[0])
    return None


def validate_brace(add_table, circ_table, name: str | None = None) -> SkewBrace:
    """Validate both group structures and the compatibility law on all triples.

    If the additive identity is not index 0 both tables are relabeled by
    swapping it with 0.
    """
    add_op = _check_table(add_table)
    circ_op = _check_table(circ_table)
    if add_op.shape != circ_op.shape:
        raise ValueError("tables must have the same order")
    e = find_identity(add_op)
    if e is not None and e != 0:
        add_op = _swap_labels(add_op, e)
        circ_op = _swap_labels(circ_op, e)
    try:
        add = validate_group(add_op, normalize=False)
    except GroupError as exc:
        raise AddNotGroup(exc) from exc
    try:
        circ = validate_group(circ_op, normalize=False)
    except GroupError as exc:
        ce = find_identity(circ_op)
        if ce is not None and ce != 0:
            try:
                validate_group(circ_op)
            except GroupError:
                raise CircNotGroup(exc) from exc
            raise IdentityMismatch(0, ce) from exc
        raise CircNotGroup(exc) from exc
    witness = _compatibility_witness(add.op, add.inverse, circ.op)
    if witness is not None:
        raise CompatibilityFailed(*witness)
    return SkewBrace(add, circ, name)


def trivial_brace(G: CayleyGroup, name: str | None = None) -> SkewBrace:
    return SkewBrace(G, G, name or (f"Triv({G.name})" if G.name else None))


def optrivial_brace(G: CayleyGroup, name: str | None = None) -> SkewBrace:
    """``opTriv(G)``: addition ``a + b = ba``, multiplication that of ``G``."""
    return SkewBrace(opposite_group(G), G, name or (f"opTriv({G.name})" if G.name else None))


# -- actions -----------------------------------------------------------------

def lambda_action(A: SkewBrace) -> np.ndarray:
    """The λ table with its action axioms verified; rows are indexed by actors."""
    lam = A.lam
    add, circ = A.add.op, A.circ.op
    for a in range(A.n):
        perm = lam[a]
        if not np.array_equal(perm[add], add[np.ix_(perm, perm)]):
            raise AssertionError(f"λ_{a} is not an additive automorphism")
    # λ_{a∘b} = λ_a λ_b
    if not np.array_equal(lam[circ], _compose_rows(lam)):
        raise AssertionError("λ is not a homomorphism from (A,∘)")
    return lam


def _compose_rows(lam: np.ndarray) -> np.ndarray:
    """``out[a, b, x] = lam[a, lam[b, x]]``."""
    return lam[np.arange(lam.shape[0])[:, None, None], lam[None, :, :]]


def theta_actor_group(A: SkewBrace) -> CayleyGroup:
    """``(A,+) ⋊_λ (A,∘)`` with pair ``(a, b)`` flattened as ``a * n + b``."""
    return semidirect_product(A.add, A.circ, A.lam, name="theta-actors")


def theta_action(A: SkewBrace) -> np.ndarray:
    """The θ table (``n^2`` actors) with the action law verified against the actor group."""
    th = A.theta
    actors = theta_actor_group(A)
    composed = th[np.arange(th.shape[0])[:, None, None], th[None, :, :]]
    if not np.array_equal(th[actors.op], composed):
        raise AssertionError("θ is not an action of (A,+) ⋊ (A,∘)")
    return th


# -- subsets -----------------------------------------------------------------

def additive_closure(A: SkewBrace, elements) -> frozenset[int]:
    """Additive subgroup generated by ``elements``."""
    gens = {int(e) for e in elements} - {0}
    seen = {0}
    queue = deque([0])
    add = A.add.op
    while queue:
        x = queue.popleft()
        for g in gens:
            y = int(add[x, g])
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return frozenset(seen)


def star_product(A: SkewBrace, X, Y) -> frozenset[int]:
    """``X * Y``: additive subgroup generated by ``λ_x(y) - y``."""
    lam, add, neg = A.lam, A.add.op, A.neg
    gens = {int(add[lam[x, y], neg[y]]) for x in X for y in Y}
    return additive_closure(A, gens)


def left_series(A: SkewBrace) -> list[frozenset[int]]:
    """``A^1 = A, A^{k+1} = A * A^k`` until it stabilizes."""
    whole = frozenset(range(A.n))
    series = [whole]
    while True:
        nxt = star_product(A, whole, series[-1])
        if nxt == series[-1]:
            return series
        series.append(nxt)


def left_nilpotency_class(A: SkewBrace) -> int | None:
    """Least ``k`` with ``A^{k+1} = 0``; None if the chain stops above zero."""
    series = left_series(A)
    if series[-1] != frozenset([0]):
        return None
    return max(len(series) - 1, 1)


def is_two_sided(A: SkewBrace) -> bool:
    """``(b+c)∘a = b∘a - a + c∘a`` for all triples."""
    add, neg, circ = A.add.op, A.neg, A.circ.op
    lhs = circ[add[:, :, None], np.arange(A.n)[None, None, :]]      # [b, c, a]
    ba = circ[:, None, :]
    ca = circ[None, :, :]
    rhs = add[add[ba, neg[None, None, :]], ca]
    return bool(np.array_equal(lhs, rhs))


def is_bi_skew(A: SkewBrace) -> bool:
    """Whether ``(A, ∘, +)`` is also a skew brace."""
    return _compatibility_witness(A.circ.op, A.cinv, A.add.op) is None


@dataclass(frozen=True)
class BraceInvariants:
    fix: frozenset[int]
    fix_theta: frozenset[int]
    ker_lambda: frozenset[int]
    soc: frozenset[int]
    ann: frozenset[int]
    a_squared: frozenset[int]
    a_prime: frozenset[int]
    left_nilpotency_class: int | None
    abelian_type: bool
    nilpotent_type: bool
    trivial: bool
    two_sided: bool
    bi_skew: bool

    def summary(self) -> dict:
        return {
            "fix": len(self.fix), "fix_theta": len(self.fix_theta),
            "ker_lambda": len(self.ker_lambda), "soc": len(self.soc), "ann": len(self.ann),
            "a_squared": len(self.a_squared), "a_prime": len(self.a_prime),
            "left_nilpotency_class": self.left_nilpotency_class,
            "abelian_type": self.abelian_type, "nilpotent_type": self.nilpotent_type,
            "trivial": self.trivial, "two_sided": self.two_sided, "bi_skew": self.bi_skew,
        }


def fix_theta(A: SkewBrace) -> frozenset[int]:
    ident = np.arange(A.n)
    return frozenset(int(x) for x in np.flatnonzero((A.theta == ident).all(axis=0)))


def soc(A: SkewBrace) -> frozenset[int]:
    return A.ker_lambda & A.add.center


def ann(A: SkewBrace) -> frozenset[int]:
    return soc(A) & A.circ.center


def a_prime(A: SkewBrace) -> frozenset[int]:
    n = A.n
    comms = {A.add.commutator(a, b) for a in range(n) for b in range(n)}
    return additive_closure(A, comms | star_product(A, range(n), range(n)))


def invariants(A: SkewBrace) -> BraceInvariants:
    whole = range(A.n)
    return BraceInvariants(
        fix=A.fix,
        fix_theta=fix_theta(A),
        ker_lambda=A.ker_lambda,
        soc=soc(A),
        ann=ann(A),
        a_squared=star_product(A, whole, whole),
        a_prime=a_prime(A),
        left_nilpotency_class=left_nilpotency_class(A),
        abelian_type=A.add.is_abelian,
        nilpotent_type=A.add.is_nilpotent,
        trivial=A.is_trivial,
        two_sided=is_two_sided(A),
        bi_skew=is_bi_skew(A),
    )


# -- ideals and quotients ----------------------------------------------------

def ideal_violation(A: SkewBrace, I) -> str | None:
    """Name of the first ideal condition ``I`` violates, or None."""
    I = frozenset(int(i) for i in I)
    if not is_normal(A.add, I):
        return "not a normal subgroup of (A,+)"
    if not is_normal(A.circ, I):
        return "not a normal subgroup of (A,∘)"
    lam = A.lam
    if any(int(lam[a, i]) not in I for a in range(A.n) for i in I):
        return "not λ-invariant"
    return None


def is_ideal(A: SkewBrace, I) -> bool:
    return ideal_violation(A, I) is None


def ideals(A: SkewBrace) -> list[frozenset[int]]:
    return [S for S in subgroups(A.add) if is_ideal(A, S)]


def cosets(A: SkewBrace, I) -> list[tuple[int, ...]]:
    """Additive cosets ``a + I`` ordered by least element."""
    I = sorted(int(i) for i in I)
    seen: set[int] = set()
    out = []
    for a in range(A.n):
        if a in seen:
            continue
        coset = tuple(sorted(int(A.add.op[a, i]) for i in I))
        seen.update(coset)
        out.append(coset)
    return out


def quotient_brace(A: SkewBrace, I, name: str | None = None) -> SkewBrace:
    """``A / I`` on cosets indexed by least element order (coset of 0 is 0)."""
    reason = ideal_violation(A, I)
    if reason is not None:
        raise NotIdeal(reason)
    cs = cosets(A, I)
    label = np.empty(A.n, dtype=np.int64)
    for k, c in enumerate(cs):
        label[list(c)] = k
    reps = np.array([c[0] for c in cs])
    add = label[A.add.op[np.ix_(reps, reps)]]
    circ = label[A.circ.op[np.ix_(reps, reps)]]
    return SkewBrace(CayleyGroup(add), CayleyGroup(circ), name)


def sub_brace(A: SkewBrace, elements) -> tuple[SkewBrace, list[int]]:
    """Restriction to a subset closed under both operations, relabeled."""
    emb = sorted(int(e) for e in elements)
    if not is_subgroup(A.add, emb) or not is_subgroup(A.circ, emb):
        raise ValueError("subset is not a sub-skew brace")
    pos = {e: i for i, e in enumerate(emb)}
    add = np.array([[pos[int(A.add.op[a, b])] for b in emb] for a in emb])
    circ = np.array([[pos[int(A.circ.op[a, b])] for b in emb] for a in emb])
    return SkewBrace(CayleyGroup(add), CayleyGroup(circ)), emb
