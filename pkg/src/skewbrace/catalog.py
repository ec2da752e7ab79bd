"""Explicit skew braces: small-order classifications, named examples and the
one-vertex families together with a recognizer for them.

Elements of product sets are flattened row-major, so the identity tuple is
always index 0.
"""

from __future__ import annotations

import itertools
import shlex
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .brace import SkewBrace, optrivial_brace, trivial_brace, validate_brace
from .errors import BadParameters, NoFamilyMatch, NotOneVertex, UnknownName
from .groups import (
    CayleyGroup,
    automorphisms,
    cyclic_group,
    direct_product,
    find_isomorphism,
    sub_cayley_group,
)
from .grouplib import group_by_name, identify


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, int(n ** 0.5) + 1))


def multiplicative_order(g: int, p: int) -> int:
    k, x = 1, g % p
    while x != 1:
        x = x * g % p
        k += 1
    return k


def least_unit_of_order(p: int, q: int) -> int:
    """Least ``g`` in ``(Z/p)^×`` of multiplicative order ``q``."""
    for g in range(2, p):
        if multiplicative_order(g, p) == q:
            return g
    raise BadParameters(f"no unit of order {q} modulo {p}")


def _tables(elements, add: Callable, circ: Callable):
    index = {e: k for k, e in enumerate(elements)}
    A = [[index[add(x, y)] for y in elements] for x in elements]
    C = [[index[circ(x, y)] for y in elements] for x in elements]
    return A, C


def _from_formulas(elements, add, circ, name) -> SkewBrace:
    A, C = _tables(list(elements), add, circ)
    return validate_brace(A, C, name)


# -- orders p^2 and pq -------------------------------------------------------

def p2_brace(k: int, p: int) -> SkewBrace:
    """The ``k``-th brace (1..4) of order ``p^2``."""
    if not is_prime(p):
        raise BadParameters(f"p = {p} is not prime")
    if k == 1:
        return trivial_brace(cyclic_group(p * p), name=f"P2_1(p={p})")
    pairs = list(itertools.product(range(p), repeat=2))
    vec = lambda x, y: ((x[0] + y[0]) % p, (x[1] + y[1]) % p)
    if k == 2:
        return _from_formulas(pairs, vec, vec, f"P2_2(p={p})")
    if k == 3:
        els = range(p * p)
        return _from_formulas(els, lambda x, y: (x + y) % (p * p),
                              lambda x, y: (x + y + p * x * y) % (p * p), f"P2_3(p={p})")
    if k == 4:
        circ = lambda x, y: ((x[0] + y[0] + x[1] * y[1]) % p, (x[1] + y[1]) % p)
        return _from_formulas(pairs, vec, circ, f"P2_4(p={p})")
    raise BadParameters(f"order-p^2 brace index must be 1..4, got {k}")


PQ_KINDS = ("T1", "T2", "C", "D", "E", "F")


def _check_pq(p: int, q: int, g: int | None) -> int:
    if not (is_prime(p) and is_prime(q)):
        raise BadParameters(f"p = {p} and q = {q} must be prime")
    if p % q != 1:
        raise BadParameters(f"need p ≡ 1 mod q, got p = {p}, q = {q}")
    if g is None:
        return least_unit_of_order(p, q)
    if g % p == 0 or multiplicative_order(g, p) != q:
        raise BadParameters(f"g = {g} does not have order {q} modulo {p}")
    return g % p


def pq_brace(kind: str, p: int, q: int, g: int | None = None,
             param: int | None = None) -> SkewBrace:
    """Braces of order ``pq`` on pairs ``(n, m)`` in ``Z/p × Z/q``, index ``n*q + m``.

    ``param`` is γ for kind ``E`` and μ for kind ``F`` (``1 < param <= q``);
    it defaults to 2.
    """
    g = _check_pq(p, q, g)
    if kind in ("E", "F"):
        if param is None:
            param = 2
        if not 1 < param <= q:
            raise BadParameters(f"{kind} needs a parameter in (1, {q}], got {param}")
    elif param is not None:
        raise BadParameters(f"kind {kind} takes no extra parameter")
    if kind not in PQ_KINDS:
        raise BadParameters(f"unknown pq kind {kind!r}")
    pw = [pow(g, e, p) for e in range(q)]
    pairs = list(itertools.product(range(p), range(q)))

    def direct(x, y):
        return ((x[0] + y[0]) % p, (x[1] + y[1]) % q)

    def semi(x, y):
        return ((x[0] + pw[x[1]] * y[0]) % p, (x[1] + y[1]) % q)

    if kind == "T1":
        add, circ = direct, direct
    elif kind == "T2":
        add, circ = semi, semi
    elif kind == "C":
        add, circ = direct, semi
    elif kind == "D":
        add = semi
        circ = lambda x, y: ((pw[y[1]] * x[0] + pw[x[1]] * y[0]) % p, (x[1] + y[1]) % q)
    elif kind == "E":
        gg = [pow(g, param * e, p) for e in range(q)]
        add = semi
        circ = lambda x, y: ((x[0] + gg[x[1]] * y[0]) % p, (x[1] + y[1]) % q)
    else:
        gm = [pow(g, param * e, p) for e in range(q)]
        add = semi
        circ = lambda x, y: ((pw[y[1]] * x[0] + gm[x[1]] * y[0]) % p, (x[1] + y[1]) % q)
    label = kind + (str(param) if param is not None else "")
    return _from_formulas(pairs, add, circ, f"{label}(p={p},q={q})")


def pq_family(p: int, q: int, g: int | None = None) -> list[SkewBrace]:
    """All ``2q + 2`` braces of order ``pq`` in table order T1, T2, C, D, E_γ.., F_μ.."""
    out = [pq_brace(k, p, q, g) for k in ("T1", "T2", "C", "D")]
    out += [pq_brace("E", p, q, g, gamma) for gamma in range(2, q + 1)]
    out += [pq_brace("F", p, q, g, mu) for mu in range(2, q + 1)]
    return out


# -- one-vertex structures ---------------------------------------------------

@dataclass(frozen=True, eq=False)
class OneVertexStructure:
    """Data ``(F, φ, y, z)`` defining a brace on ``F × Z/2`` (index ``2f + k``) with

        (f1,k1) + (f2,k2) = (f1 + (-1)^k1 f2 + k1 k2 y, k1 + k2)
        (f1,k1) ∘ (f2,k2) = (f1 + (-1)^k1 f2 + ψ(f1,k1,k2) + k1 k2 y, k1 + k2)

    where ``ψ(f, k1, k2) = [k2] (φ(f) - [k1] z)``.
    """

    F: CayleyGroup
    phi: tuple[int, ...]
    y: int
    z: int
    name: str | None = None

    def problems(self) -> list[str]:
        F, phi = self.F, np.asarray(self.phi)
        out = []
        if F.order < 2 or not F.is_abelian:
            out.append("F must be a nontrivial abelian group")
            return out
        if len(phi) != F.order or not np.array_equal(phi[F.op], F.op[np.ix_(phi, phi)]):
            out.append("φ is not an endomorphism of F")
            return out
        two = F.op[np.arange(F.order), np.arange(F.order)]          # 2f
        neg = F.inverse
        if two[self.y] != 0:
            out.append("2y != 0")
        if not np.array_equal(phi[phi], neg[two[phi]]):
            out.append("φ∘φ != -2φ")
        if phi[self.z] != F.op[phi[self.y], neg[two[self.z]]]:
            out.append("φ(z) != φ(y) - 2z")
        image = set(phi.tolist())
        shifted = {int(F.op[v, neg[self.z]]) for v in image}
        if image | shifted != set(range(F.order)):
            out.append("ψ is not surjective")
        return out

    def validate(self) -> "OneVertexStructure":
        probs = self.problems()
        if probs:
            raise BadParameters("; ".join(probs))
        return self

    def build(self, name: str | None = None) -> SkewBrace:
        self.validate()
        F, phi = self.F, np.asarray(self.phi)
        m = F.order
        op, neg = F.op, F.inverse
        add = np.empty((2 * m, 2 * m), dtype=np.int64)
        circ = np.empty_like(add)
        for f1, k1, f2, k2 in itertools.product(range(m), range(2), range(m), range(2)):
            base = op[f1, f2 if k1 == 0 else neg[f2]]
            if k1 and k2:
                base = op[base, self.y]
            psi = 0
            if k2:
                psi = phi[f1] if k1 == 0 else op[phi[f1], neg[self.z]]
            add[2 * f1 + k1, 2 * f2 + k2] = 2 * base + (k1 ^ k2)
            circ[2 * f1 + k1, 2 * f2 + k2] = 2 * op[base, psi] + (k1 ^ k2)
        return validate_brace(add, circ, name or self.name)


def _check_odd_abelian(G: CayleyGroup, allow_trivial: bool = True) -> None:
    if not G.is_abelian or G.order % 2 == 0:
        raise BadParameters("G must be an abelian group of odd order")
    if not allow_trivial and G.order == 1:
        raise BadParameters("F must be nontrivial")


def _neg2(F: CayleyGroup) -> tuple[int, ...]:
    n = np.arange(F.order)
    return tuple(int(v) for v in F.inverse[F.op[n, n]])


def d2d_structure(F: CayleyGroup) -> OneVertexStructure:
    _check_odd_abelian(F, allow_trivial=False)
    return OneVertexStructure(F, _neg2(F), 0, 0, f"D{2 * F.order}({F.name})")


def _cyclic2_times(i: int, G: CayleyGroup) -> CayleyGroup:
    if i < 1:
        raise BadParameters(f"i must be >= 1, got {i}")
    return direct_product(cyclic_group(2 ** i), G)


def j_structure(i: int, G: CayleyGroup) -> OneVertexStructure:
    _check_odd_abelian(G)
    F = _cyclic2_times(i, G)
    return OneVertexStructure(F, _neg2(F), 0, 1 * G.order, f"J{2 ** (i + 1) * G.order}({G.name})")


def h_structure(i: int, G: CayleyGroup) -> OneVertexStructure:
    _check_odd_abelian(G)
    F = _cyclic2_times(i, G)
    y = 2 ** (i - 1) * G.order
    return OneVertexStructure(F, _neg2(F), y, 1 * G.order, f"H{2 ** (i + 1) * G.order}({G.name})")


# α on Z/2 × Z/2 with image = kernel = <h>, and a matching (y, z) on the 2-part
_K8_PRESENTATIONS = {
    (1, 0): (lambda a, b: (b, 0), (0, 1), (0, 1)),
    (0, 1): (lambda a, b: (0, a), (1, 0), (1, 1)),
    (1, 1): (lambda a, b: ((a + b) % 2, (a + b) % 2), (1, 0), (0, 1)),
}


def k8d_structure(G: CayleyGroup, h: tuple[int, int] = (1, 0)) -> OneVertexStructure:
    """``F = Z/2 × Z/2 × G`` with ``φ = (α, -2 id_G)``; ``h`` picks the subgroup ``α(F) = ker α``."""
    _check_odd_abelian(G)
    if h not in _K8_PRESENTATIONS:
        raise BadParameters(f"h must be one of {sorted(_K8_PRESENTATIONS)}")
    alpha, (y1, y2), (z1, z2) = _K8_PRESENTATIONS[h]
    d = G.order
    F = direct_product(direct_product(cyclic_group(2), cyclic_group(2)), G)
    ng = _neg2(G)
    phi = []
    for a, b, g in itertools.product(range(2), range(2), range(d)):
        u, v = alpha(a, b)
        phi.append((2 * u + v) * d + ng[g])
    y = (2 * y1 + y2) * d
    z = (2 * z1 + z2) * d
    return OneVertexStructure(F, tuple(phi), y, z, f"K{8 * d}({G.name})")


# explicit operation formulas on (a, g, k) and (a, b, g, k), row-major

def _sgn(k: int) -> int:
    return -1 if k else 1


def d2d_brace(F: CayleyGroup) -> SkewBrace:
    _check_odd_abelian(F, allow_trivial=False)
    op, neg = F.op, F.inverse
    s = lambda k, f: f if k == 0 else int(neg[f])
    els = list(itertools.product(range(F.order), range(2)))
    add = lambda x, y: (int(op[x[0], s(x[1], y[0])]), (x[1] + y[1]) % 2)
    circ = lambda x, y: (int(op[s(y[1], x[0]), s(x[1], y[0])]), (x[1] + y[1]) % 2)
    return _from_formulas(els, add, circ, f"D{2 * F.order}({F.name})")


def _jh_brace(i: int, G: CayleyGroup, shift: bool) -> SkewBrace:
    _check_odd_abelian(G)
    if i < 1:
        raise BadParameters(f"i must be >= 1, got {i}")
    M = 2 ** i
    op, neg = G.op, G.inverse
    s = lambda k, g: g if k == 0 else int(neg[g])
    t = 2 ** (i - 1) if shift else 0
    els = list(itertools.product(range(M), range(G.order), range(2)))

    def add(x, y):
        a1, g1, k1 = x
        a2, g2, k2 = y
        return ((a1 + _sgn(k1) * a2 + t * k1 * k2) % M, int(op[g1, s(k1, g2)]), (k1 + k2) % 2)

    def circ(x, y):
        a1, g1, k1 = x
        a2, g2, k2 = y
        a = _sgn(k2) * a1 + _sgn(k1) * a2 - k1 * k2 + t * k1 * k2
        return (a % M, int(op[s(k2, g1), s(k1, g2)]), (k1 + k2) % 2)

    tag = "H" if shift else "J"
    return _from_formulas(els, add, circ, f"{tag}{2 * M * G.order}({G.name})")


def j_brace(i: int, G: CayleyGroup) -> SkewBrace:
    return _jh_brace(i, G, shift=False)


def h_brace(i: int, G: CayleyGroup) -> SkewBrace:
    """H family. The first coordinate of ``∘`` carries ``(-1)^{k2} a1``, as the structure data forces."""
    return _jh_brace(i, G, shift=True)


def k8d_brace(G: CayleyGroup) -> SkewBrace:
    _check_odd_abelian(G)
    op, neg = G.op, G.inverse
    s = lambda k, g: g if k == 0 else int(neg[g])
    els = list(itertools.product(range(2), range(2), range(G.order), range(2)))

    def add(x, y):
        a1, b1, g1, k1 = x
        a2, b2, g2, k2 = y
        return ((a1 + a2) % 2, (b1 + b2 + k1 * k2) % 2, int(op[g1, s(k1, g2)]), (k1 + k2) % 2)

    def circ(x, y):
        a1, b1, g1, k1 = x
        a2, b2, g2, k2 = y
        return ((a1 + a2 + k2 * b1) % 2, (b1 + b2) % 2, int(op[s(k2, g1), s(k1, g2)]),
                (k1 + k2) % 2)

    return _from_formulas(els, add, circ, f"K{8 * G.order}({G.name})")


# -- named examples ----------------------------------------------------------

def z12_additive_table(convention: str = "right") -> list[list[int]]:
    """Dihedral addition on ``s^0..s^11``.

    ``right``: ``s^m + s^k = s^(k + (-1)^k m)``, giving ``λ_{s^m}(s^k) = s^(k + 2m)``
    for odd ``k`` and the identity on even powers. ``left`` is the opposite group
    ``s^(m + (-1)^m k)``; paired with the cyclic circle it yields a different brace
    (``|Fix| = 2``).
    """
    n = 12
    if convention == "right":
        return [[(k + (-1) ** k * m) % n for k in range(n)] for m in range(n)]
    if convention == "left":
        return [[(m + (-1) ** m * k) % n for k in range(n)] for m in range(n)]
    raise ValueError(convention)


def _z12_cyclic() -> SkewBrace:
    n = 12
    add = z12_additive_table("right")
    circ = [[(m + k) % n for k in range(n)] for m in range(n)]
    return validate_brace(add, circ, "z12_cyclic")


def _z8_5pow() -> SkewBrace:
    return _from_formulas(range(8), lambda x, y: (x + y) % 8,
                          lambda x, y: (x + pow(5, x, 8) * y) % 8, "z8_5pow")


def _z2z4_b2() -> SkewBrace:
    els = list(itertools.product(range(2), range(4)))
    add = lambda x, y: ((x[0] + y[0]) % 2, (x[1] + y[1]) % 4)
    tri = lambda y1: sum(range(1, y1)) % 2

    def circ(x, y):
        return ((x[0] + y[0] + y[1] * tri(x[1])) % 2, (x[1] + y[1] + 2 * x[1] * y[1]) % 4)

    return _from_formulas(els, add, circ, "z2z4_B2")


def _renamed(B: SkewBrace, name: str) -> SkewBrace:
    return SkewBrace(B.add, B.circ, name)


NAMED_EXAMPLES: dict[str, Callable[[], SkewBrace]] = {
    "z12_cyclic": _z12_cyclic,
    "z3z2_mixed": lambda: _renamed(pq_brace("C", 3, 2), "z3z2_mixed"),
    "z8_5pow": _z8_5pow,
    "z9_radical": lambda: _renamed(p2_brace(3, 3), "z9_radical"),
    "z4_radical": lambda: _renamed(p2_brace(3, 2), "z4_radical"),
    "klein": lambda: _renamed(p2_brace(4, 2), "klein"),
    "z2z4_B2": _z2z4_b2,
    "triv_S3": lambda: trivial_brace(group_by_name("S3"), "triv_S3"),
    "optriv_S3": lambda: optrivial_brace(group_by_name("S3"), "optriv_S3"),
}


def named_example(name: str) -> SkewBrace:
    try:
        return NAMED_EXAMPLES[name]()
    except KeyError:
        raise UnknownName(f"unknown example {name!r}; known: {', '.join(NAMED_EXAMPLES)}") from None


# -- family specs ------------------------------------------------------------

TAGS = ("Triv", "OpTriv", "P2_1", "P2_2", "P2_3", "P2_4", "PQ_T1", "PQ_T2", "PQ_C", "PQ_D",
        "PQ_E", "PQ_F", "D2d", "J", "H", "K8d", "NamedExample")


def _group_param(params: dict, key: str, d_key: str = "d") -> CayleyGroup:
    G = params.get(key)
    if isinstance(G, CayleyGroup):
        return G
    if isinstance(G, str):
        try:
            return group_by_name(G)
        except KeyError:
            raise BadParameters(f"unknown group {G!r}") from None
    d = params.get(d_key)
    if d is None:
        raise BadParameters(f"need {key}= or {d_key}=")
    return cyclic_group(int(d))


@dataclass(frozen=True, eq=False)
class FamilySpec:
    tag: str
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.tag not in TAGS:
            raise BadParameters(f"unknown family tag {self.tag!r}")

    def __str__(self):
        shown = []
        for k, v in sorted(self.params.items()):
            if isinstance(v, CayleyGroup):
                v = v.name or f"<group of order {v.order}>"
            shown.append(f"{k}={v}")
        return f"{self.tag}({', '.join(shown)})"

    def group(self, key: str = "G") -> CayleyGroup:
        return _group_param(self.params, key)

    def structure(self) -> OneVertexStructure:
        """One-vertex structure data for D2d/J/H/K8d specs."""
        P = self.params
        if self.tag == "D2d":
            return d2d_structure(_group_param(P, "F"))
        if self.tag == "J":
            return j_structure(int(P["i"]), self.group())
        if self.tag == "H":
            return h_structure(int(P["i"]), self.group())
        if self.tag == "K8d":
            return k8d_structure(self.group(), tuple(P.get("h", (1, 0))))
        raise BadParameters(f"{self.tag} carries no one-vertex structure")

    def build(self) -> SkewBrace:
        P, tag = self.params, self.tag
        try:
            if tag == "Triv":
                return trivial_brace(self.group())
            if tag == "OpTriv":
                return optrivial_brace(self.group())
            if tag.startswith("P2_"):
                return p2_brace(int(tag[-1]), int(P["p"]))
            if tag.startswith("PQ_"):
                kind = tag[3:]
                param = P.get("gamma") if kind == "E" else P.get("mu") if kind == "F" else None
                return pq_brace(kind, int(P["p"]), int(P["q"]), P.get("g"),
                                None if param is None else int(param))
            if tag == "D2d":
                return d2d_brace(_group_param(P, "F"))
            if tag == "J":
                return j_brace(int(P["i"]), self.group())
            if tag == "H":
                return h_brace(int(P["i"]), self.group())
            if tag == "K8d":
                if tuple(P.get("h", (1, 0))) != (1, 0):
                    return self.structure().build()
                return k8d_brace(self.group())
            return named_example(P["name"])
        except KeyError as exc:
            raise BadParameters(f"{tag}: missing parameter {exc.args[0]!r}") from None


def build(spec: "FamilySpec | str") -> SkewBrace:
    if isinstance(spec, str):
        spec = parse_spec(spec)
    return spec.build()


_INT_KEYS = {"p", "q", "g", "gamma", "mu", "i", "d"}


def parse_spec(text: str) -> FamilySpec:
    """Parse strings such as ``pq:C p=5 q=2``, ``onevertex:J i=3 d=1``,
    ``example:z12_cyclic``, ``p2:3 p=2``, ``triv:S3``, ``optriv:D8``.
    """
    words = shlex.split(text)
    if not words or ":" not in words[0]:
        raise BadParameters(f"bad spec {text!r}: expected kind:name")
    kind, _, name = words[0].partition(":")
    params: dict = {}
    for w in words[1:]:
        key, eq, val = w.partition("=")
        if not eq:
            raise BadParameters(f"bad parameter {w!r}: expected key=value")
        if key in _INT_KEYS:
            try:
                params[key] = int(val)
            except ValueError:
                raise BadParameters(f"{key} must be an integer, got {val!r}") from None
        elif key == "h":
            params[key] = tuple(int(c) for c in val.strip("()").split(","))
        else:
            params[key] = val
    kind = kind.lower()
    if kind == "example":
        if name not in NAMED_EXAMPLES:
            raise UnknownName(f"unknown example {name!r}")
        return FamilySpec("NamedExample", {"name": name})
    if kind in ("triv", "optriv"):
        params["G"] = name
        return FamilySpec("Triv" if kind == "triv" else "OpTriv", params)
    if kind == "p2":
        if name not in ("1", "2", "3", "4"):
            raise BadParameters(f"p2 index must be 1..4, got {name!r}")
        return FamilySpec(f"P2_{name}", params)
    if kind == "pq":
        if name[:1] in ("E", "F") and len(name) > 1:
            params["gamma" if name[0] == "E" else "mu"] = int(name[1:])
            name = name[0]
        if name not in PQ_KINDS:
            raise BadParameters(f"unknown pq kind {name!r}")
        return FamilySpec(f"PQ_{name}", params)
    if kind == "onevertex":
        if name not in ("D2d", "J", "H", "K8d"):
            raise BadParameters(f"unknown one-vertex family {name!r}")
        return FamilySpec(name, params)
    raise BadParameters(f"unknown spec kind {kind!r}")


# -- recognizer --------------------------------------------------------------

def _fix_group(A: SkewBrace) -> CayleyGroup:
    F, _ = sub_cayley_group(A.add, sorted(A.fix))
    return F


def _odd_part(F: CayleyGroup) -> CayleyGroup:
    odd = [x for x in range(F.order) if F.element_order[x] % 2 == 1]
    G, _ = sub_cayley_group(F, odd)
    return _library_named(G)


def _library_named(G: CayleyGroup) -> CayleyGroup:
    try:
        k, name = identify(G)
    except Exception:
        return G
    from .grouplib import groups_of_order
    return groups_of_order(G.order)[k]


def one_vertex_candidates(A: SkewBrace) -> list[FamilySpec]:
    """Family specs of the right order for a brace with one-vertex λ-graph."""
    from .graphs import lambda_graph
    if lambda_graph(A).num_vertices != 1:
        raise NotOneVertex(f"λ-graph of {A!r} does not have exactly one vertex")
    n = A.n
    m = (n & -n).bit_length() - 1
    if m == 0:
        return []
    F = _fix_group(A)
    G = _odd_part(F)
    if m == 1:
        return [FamilySpec("D2d", {"F": G})] if G.order > 1 else []
    if m == 3:
        involutions = int(np.sum(F.element_order == 2))
        if involutions == 3:
            return [FamilySpec("K8d", {"G": G})]
    i = m - 1
    return [FamilySpec("J", {"i": i, "G": G}), FamilySpec("H", {"i": i, "G": G})]


def recognize_one_vertex(A: SkewBrace) -> FamilySpec:
    """Family tag of a one-vertex brace, confirmed by an explicit brace isomorphism."""
    from .isomorphism import brace_isomorphism
    for spec in one_vertex_candidates(A):
        if brace_isomorphism(A, spec.build()) is not None:
            return spec
    raise NoFamilyMatch(f"{A!r} matches no one-vertex family")


def one_vertex_iso_criterion(s1: OneVertexStructure, s2: OneVertexStructure) -> bool:
    """Search ``σ ∈ Aut(F)`` with ``φ2 = σφ1σ^{-1}``, ``σ(y1) = y2`` and ``z2 - σ(z1) ∈ φ2(F)``.

    If the two structures use different but isomorphic tables for ``F`` the
    second one is transported onto the first.
    """
    F = s1.F
    phi1 = np.asarray(s1.phi)
    phi2, y2, z2 = np.asarray(s2.phi), s2.y, s2.z
    if not F.same_table(s2.F):
        iso = find_isomorphism(s2.F, F)
        if iso is None:
            return False
        t = np.asarray(iso)
        inv = np.argsort(t)
        phi2 = t[phi2[inv]]
        y2, z2 = int(t[y2]), int(t[z2])
    image2 = set(phi2.tolist())
    neg = F.inverse
    for sigma in automorphisms(F):
        s = np.asarray(sigma)
        if s[s1.y] != y2:
            continue
        if not np.array_equal(phi2[s], s[phi1]):
            continue
        if int(F.op[z2, neg[s[s1.z]]]) in image2:
            return True
    return False
