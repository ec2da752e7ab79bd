"""Isomorphisms between skew braces.

An isomorphism is found as ``α ∘ φ0`` where ``φ0`` is one additive
isomorphism and ``α`` runs over ``Aut(B,+)``; each candidate is then checked
against the circle tables.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

import numpy as np

from .brace import SkewBrace, ann, soc
from .groups import DEFAULT_MAX_NODES, CayleyGroup, automorphisms, find_isomorphism
from .orbits import orbits, orbit_profile


def brace_profile(A: SkewBrace) -> tuple:
    """Isomorphism-invariant screen: group profiles, subset sizes and orbit profiles."""
    lp = orbit_profile(orbits(A.lam))
    tp = orbit_profile(orbits(A.theta))
    return (
        A.n,
        A.add.profile,
        A.circ.profile,
        len(A.fix),
        len(soc(A)),
        len(ann(A)),
        tuple(sorted(lp.counts.items())), lp.trivial_count,
        tuple(sorted(tp.counts.items())), tp.trivial_count,
    )


@lru_cache(maxsize=256)
def _aut_array(n: int, op_bytes: bytes) -> np.ndarray:
    op = np.frombuffer(op_bytes, dtype=np.int64).reshape(n, n)
    arr = np.array(automorphisms(CayleyGroup(op.copy())), dtype=np.int64).reshape(-1, n)
    arr.setflags(write=False)
    return arr


def aut_array(G) -> np.ndarray:
    """All automorphisms of ``G`` stacked as rows (cached by table)."""
    op = np.ascontiguousarray(G.op, dtype=np.int64)
    return _aut_array(G.order, op.tobytes())


def is_brace_isomorphism(A: SkewBrace, B: SkewBrace, phi) -> bool:
    f = np.asarray(phi, dtype=np.int64)
    if len(f) != A.n or A.n != B.n or len(set(f.tolist())) != A.n:
        return False
    return bool(
        np.array_equal(f[A.add.op], B.add.op[np.ix_(f, f)])
        and np.array_equal(f[A.circ.op], B.circ.op[np.ix_(f, f)])
    )


def iter_brace_isomorphisms(A: SkewBrace, B: SkewBrace, screen: bool = True,
                            max_nodes: int = DEFAULT_MAX_NODES) -> Iterator[tuple[int, ...]]:
    """Every isomorphism ``A -> B``, in lexicographic order of image tables."""
    if A.n != B.n:
        return
    if screen and brace_profile(A) != brace_profile(B):
        return
    phi0 = find_isomorphism(A.add, B.add, max_nodes=max_nodes)
    if phi0 is None:
        return
    phi0 = np.asarray(phi0, dtype=np.int64)
    auts = aut_array(B.add)
    cands = auts[:, phi0]                          # row k: α_k ∘ φ0
    # ψ(a∘b) = ψ(a) ∘ ψ(b) for all a, b
    lhs = cands[:, A.circ.op]
    rhs = B.circ.op[cands[:, :, None], cands[:, None, :]]
    good = (lhs == rhs).all(axis=(1, 2))
    found = sorted(tuple(int(v) for v in row) for row in cands[good])
    for f in found:
        yield f


def brace_isomorphism(A: SkewBrace, B: SkewBrace, max_nodes: int = DEFAULT_MAX_NODES):
    """An isomorphism ``A -> B`` as an image tuple, or None. Verified on return."""
    for f in iter_brace_isomorphisms(A, B, max_nodes=max_nodes):
        if not is_brace_isomorphism(A, B, f):
            raise AssertionError("brace isomorphism failed verification")
        return f
    return None


def brace_automorphisms(A: SkewBrace) -> list[tuple[int, ...]]:
    return list(iter_brace_isomorphisms(A, A, screen=False))
