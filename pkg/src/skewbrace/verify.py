"""Named verification suites: each runs one classification claim over catalog builds or census data.

A suite is a list of named checks; a check fails iff it collected at least
one witness.  Output is a pure function of the inputs (no timings, no seeds).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .brace import a_prime, additive_closure, fix_theta, left_nilpotency_class, star_product
from .catalog import (build, h_brace, h_structure, j_brace, j_structure,
                      named_example, one_vertex_iso_criterion, p2_brace, pq_family,
                      recognize_one_vertex)
from .census import enumerate_braces
from .errors import NoFamilyMatch, SkewBraceError
from .graphs import (gamma_graph, gamma_hom_image_check, graph_from_sizes, graphs_isomorphic,
                     lambda_graph, lambda_orbits, lambda_profile, theta_graph, theta_orbits,
                     theta_profile)
from .groups import cyclic_group
from .isoclinism import is_isoclinic, verify_isoclinism_consequences
from .isomorphism import brace_isomorphism
from .ybe import (solution_of, theta_conjugation_identity_check, twist_morphism_partition,
                  twist_quotient, universality_violations, verify_ybe)


@dataclass
class CheckResult:
    name: str
    witnesses: list = field(default_factory=list)
    checked: int = 0

    @property
    def passed(self) -> bool:
        return not self.witnesses

    def fail(self, **witness) -> None:
        self.witnesses.append(witness)

    def expect(self, condition: bool, **witness) -> None:
        self.checked += 1
        if not condition:
            self.fail(**witness)

    def as_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "checked": self.checked,
                "witnesses": self.witnesses}


@dataclass
class SuiteResult:
    name: str
    description: str
    targets: list[str]
    checks: list[CheckResult]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def as_dict(self) -> dict:
        return {"suite": self.name, "description": self.description, "targets": self.targets,
                "passed": self.passed, "checks": [c.as_dict() for c in self.checks]}

    def text(self) -> str:
        lines = [f"suite {self.name}: {'PASS' if self.passed else 'FAIL'}"]
        for c in self.checks:
            lines.append(f"  [{'ok' if c.passed else 'FAIL'}] {c.name} ({c.checked} checked)")
            for w in c.witnesses[:5]:
                lines.append(f"      witness: {w}")
            if len(c.witnesses) > 5:
                lines.append(f"      ... {len(c.witnesses) - 5} more")
        return "\n".join(lines)


@dataclass(frozen=True)
class Suite:
    name: str
    description: str
    targets: tuple[str, ...]
    run: Callable[[], list[CheckResult]]


def _census(orders):
    for n in orders:
        yield from enumerate_braces(n).braces


def _shape_pair(A) -> tuple[str, str]:
    return lambda_graph(A).shape(), theta_graph(A).shape()


# -- generic bounds ----------------------------------------------------------

def _generic_graph_bounds(orders=range(1, 13)) -> list[CheckResult]:
    comps = CheckResult("at most two components")
    diam = CheckResult("component diameter at most four")
    for A in _census(orders):
        for kind, g in (("lambda", lambda_graph(A)), ("theta", theta_graph(A))):
            comps.expect(len(g.components) <= 2, brace=A.name, graph=kind, components=g.component_sizes)
            diam.expect(max(g.diameters, default=0) <= 4, brace=A.name, graph=kind, diameters=g.diameters)
    return [comps, diam]


def _nilpotent_diameter2(orders=range(1, 13)) -> list[CheckResult]:
    main = CheckResult("left nilpotent of nilpotent type: connected, diameter at most two")
    for A in _census(orders):
        if not A.add.is_nilpotent or left_nilpotency_class(A) is None:
            continue
        for kind, g in (("lambda", lambda_graph(A)), ("theta", theta_graph(A))):
            main.expect(len(g.components) <= 1 and max(g.diameters, default=0) <= 2,
                        brace=A.name, graph=kind, summary=g.summary())
    # both hypotheses are needed
    converse = CheckResult("not left nilpotent, yet K2 graphs (z3z2_mixed)")
    B = named_example("z3z2_mixed")
    converse.expect(left_nilpotency_class(B) is None and _shape_pair(B) == ("K2", "K2"),
                    brace=B.name, shapes=_shape_pair(B))
    nonnil = CheckResult("Triv(S3): left nilpotent, non-nilpotent type, disconnected theta graph")
    T = named_example("triv_S3")
    nonnil.expect(left_nilpotency_class(T) is not None and len(theta_graph(T).components) == 2,
                  brace=T.name, shapes=_shape_pair(T))
    return [main, converse, nonnil]


# -- order six ---------------------------------------------------------------

# row -> (catalog spec, additive group, |Fix|, Λ shape, Θ shape)
ORDER6_TABLE = {
    "T1": ("pq:T1 p=3 q=2", "C6", 6, "empty", "empty"),
    "T2": ("pq:T2 p=3 q=2", "S3", 6, "empty", "K1 + K1"),
    "D": ("pq:D p=3 q=2", "S3", 3, "K1", "K1 + K1"),
    "C": ("pq:C p=3 q=2", "C6", 2, "K2", "K2"),
    "E2": ("pq:E2 p=3 q=2", "S3", 2, "K2", "K1 + K1"),
    "F2": ("pq:F2 p=3 q=2", "S3", 1, "K1 + K1", "K1 + K1"),
}


def match_census(braces, catalog: dict) -> dict[str, list[str]]:
    """For each catalog entry, the census braces isomorphic to it."""
    out = {}
    for key, B in catalog.items():
        out[key] = [A.name for A in braces if brace_isomorphism(A, B) is not None]
    return out


def _order6_table() -> list[CheckResult]:
    from .grouplib import identify
    census = enumerate_braces(6).braces
    builds = {row: build(spec) for row, (spec, *_rest) in ORDER6_TABLE.items()}
    matched = match_census(census, builds)
    bijection = CheckResult("census of order 6 matches the six rows one-to-one")
    for row, names in matched.items():
        bijection.expect(len(names) == 1, row=row, census=names)
    used = sorted(n for names in matched.values() for n in names)
    bijection.expect(used == sorted(A.name for A in census), census=used)
    rows = CheckResult("additive group, |Fix|, Λ and Θ per row")
    for row, (spec, add, f, lam, th) in ORDER6_TABLE.items():
        B = builds[row]
        got = (identify(B.add)[1], len(B.fix), *_shape_pair(B))
        rows.expect(got == (add, f, lam, th), row=row, expected=[add, f, lam, th], got=list(got))
    return [bijection, rows]


# -- pq and p^2 --------------------------------------------------------------

PQ_PAIRS = ((3, 2), (5, 2), (7, 2), (7, 3))


def expected_pq_graph(kind: str, which: str, p: int, q: int):
    """Graph predicted for ``Λ`` or ``Θ`` of a pq brace, as orbit sizes."""
    two = [p] * (q - 1) + [q] * ((p - 1) // q)
    table = {
        ("T1", "lambda"): [], ("T1", "theta"): [],
        ("T2", "lambda"): [], ("T2", "theta"): two,
        ("C", "lambda"): [q] * (p - 1), ("C", "theta"): [q] * (p - 1),
        ("D", "lambda"): [p] * (q - 1), ("D", "theta"): two,
        ("E", "lambda"): [q] * (p - 1), ("E", "theta"): two,
        ("F", "lambda"): two, ("F", "theta"): two,
    }
    return graph_from_sizes(table[(kind, which)])


def _pq_graphs(pairs=PQ_PAIRS) -> list[CheckResult]:
    graphs = CheckResult("Λ and Θ of every family member")
    count = CheckResult("2q + 2 pairwise non-isomorphic members")
    fix_theta_rule = CheckResult("Fix_θ = Fix for abelian type, {0} otherwise")
    for p, q in pairs:
        members = pq_family(p, q)
        count.expect(len(members) == 2 * q + 2, p=p, q=q, members=len(members))
        for i in range(len(members)):
            for j in range(i + 1, len(members)):
                count.expect(brace_isomorphism(members[i], members[j]) is None,
                             p=p, q=q, pair=[members[i].name, members[j].name])
        for B in members:
            head = B.name.split("(")[0]
            kind = head[0] if head[0] in "EF" else head
            for which, g in (("lambda", lambda_graph(B)), ("theta", theta_graph(B))):
                want = expected_pq_graph(kind, which, p, q)
                ok = graphs_isomorphic(g, want) and sorted(g.component_sizes) == sorted(want.component_sizes)
                graphs.expect(ok, brace=B.name, graph=which, got=g.summary(), expected=want.summary())
            ft = fix_theta(B)
            fix_theta_rule.expect(ft == (B.fix if B.add.is_abelian else frozenset({0})), brace=B.name)
    return [graphs, count, fix_theta_rule]


def _p2_graphs(primes=(2, 3, 5, 7)) -> list[CheckResult]:
    equal = CheckResult("Λ = Θ for order p^2")
    complete = CheckResult("nontrivial: complete graph on p - 1 vertices of size p")
    for p in primes:
        for k in (1, 2, 3, 4):
            B = p2_brace(k, p)
            equal.expect(lambda_orbits(B) == theta_orbits(B), brace=B.name)
            g = lambda_graph(B)
            if B.is_trivial:
                complete.expect(g.num_vertices == 0, brace=B.name, got=g.summary())
            else:
                complete.expect(g.is_complete and g.num_vertices == p - 1 and set(g.sizes) == {p},
                                brace=B.name, got=g.summary())
    census = CheckResult("census of order 4 and 9 is exactly the four catalog braces")
    for p in (2, 3):
        braces = enumerate_braces(p * p).braces
        matched = match_census(braces, {k: p2_brace(k, p) for k in (1, 2, 3, 4)})
        census.expect(len(braces) == 4 and all(len(v) == 1 for v in matched.values()),
                      n=p * p, matched=matched)
    return [equal, complete, census]


# -- two-vertex and one-vertex classifications -------------------------------

def _two_vertex_classification(orders=range(1, 13)) -> list[CheckResult]:
    lam_hits = [A for A in _census(orders) if lambda_graph(A).shape() == "K1 + K1"]
    th_hits = [A for A in _census(orders) if theta_graph(A).shape() == "K1 + K1"]
    lam = CheckResult("Λ two disconnected vertices: only opTriv(S3)")
    ref = named_example("optriv_S3")
    lam.expect(len(lam_hits) == 1 and brace_isomorphism(lam_hits[0], ref) is not None,
               found=[A.name for A in lam_hits])
    th = CheckResult("Θ two disconnected vertices: only Triv(S3), D, E2, F2 of order 6")
    wanted = {row: build(ORDER6_TABLE[row][0]) for row in ("T2", "D", "E2", "F2")}
    matched = match_census(th_hits, wanted)
    th.expect(len(th_hits) == 4 and all(len(v) == 1 for v in matched.values()),
              found=[A.name for A in th_hits], matched=matched)
    same = CheckResult("T2 is Triv(S3) and F2 is opTriv(S3)")
    same.expect(brace_isomorphism(wanted["T2"], named_example("triv_S3")) is not None, row="T2")
    same.expect(brace_isomorphism(wanted["F2"], ref) is not None, row="F2")
    return [lam, th, same]


def _partition_count(k: int) -> int:
    ways = [1] + [0] * k
    for part in range(1, k + 1):
        for total in range(part, k + 1):
            ways[total] += ways[total - part]
    return ways[k]


def _abelian_group_count(d: int) -> int:
    """Number of abelian groups of order ``d`` (product of partition numbers of exponents)."""
    total, m, p = 1, d, 2
    while m > 1:
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        if e:
            total *= _partition_count(e)
        p += 1
    return total


def expected_one_vertex_count(n: int) -> int:
    """Isomorphism classes with a one-vertex Λ-graph of order ``n = 2^m d``."""
    m, d = 0, n
    while d % 2 == 0:
        d //= 2
        m += 1
    if m == 0 or (m == 1 and d == 1):
        return 0
    per = {1: 1, 2: 2, 3: 3}.get(m, 2)
    return per * _abelian_group_count(d)


def _one_vertex_lambda(orders=range(1, 13), jh=((1, 1), (2, 1), (3, 1), (1, 3), (2, 3), (3, 3))) -> list[CheckResult]:
    counts = CheckResult("one-vertex census counts per order")
    recog = CheckResult("every one-vertex census brace recognized and confirmed by isomorphism")
    for n in orders:
        hits = [A for A in enumerate_braces(n).braces if lambda_graph(A).num_vertices == 1]
        counts.expect(len(hits) == expected_one_vertex_count(n), n=n, got=len(hits),
                      expected=expected_one_vertex_count(n))
        seen = []
        for A in hits:
            try:
                spec = recognize_one_vertex(A)
            except NoFamilyMatch:
                recog.fail(brace=A.name, reason="no family matches")
                continue
            recog.expect(str(spec) not in seen, brace=A.name, family=str(spec), reason="family repeated")
            seen.append(str(spec))
    distinct = CheckResult("J and H are not isomorphic")
    for i, d in jh:
        G = cyclic_group(d)
        J, H = j_brace(i, G), h_brace(i, G)
        distinct.expect(brace_isomorphism(J, H) is None, i=i, d=d, via="isomorphism search")
        distinct.expect(not one_vertex_iso_criterion(j_structure(i, G), h_structure(i, G)),
                        i=i, d=d, via="structure criterion")
        for B in (J, H):
            distinct.expect(lambda_graph(B).num_vertices == 1, brace=B.name, reason="not one-vertex")
    return [counts, recog, distinct]


THETA_ONE_VERTEX = ("z4_radical", "klein", "z2z4_B2")


def _one_vertex_theta(orders=range(1, 9)) -> list[CheckResult]:
    hits = [A for A in _census(orders) if theta_graph(A).num_vertices == 1]
    res = CheckResult("one-vertex Θ: exactly the Z/4, Z/2 x Z/2 and Z/2 x Z/4 braces")
    matched = match_census(hits, {k: named_example(k) for k in THETA_ONE_VERTEX})
    res.expect(len(hits) == 3 and all(len(v) == 1 for v in matched.values()),
               found=[A.name for A in hits], matched=matched)
    abelian = CheckResult("one-vertex Θ forces abelian type")
    for A in hits:
        abelian.expect(A.add.is_abelian, brace=A.name)
    return [res, abelian]


# -- solutions ---------------------------------------------------------------

def _ybe(orders=range(1, 11), universality_orders=range(1, 7)) -> list[CheckResult]:
    braid = CheckResult("r_A satisfies the braid relation")
    ident = CheckResult("θ conjugation identity on all triples")
    quot = CheckResult("θ-orbit projection is a morphism to the twist")
    univ = CheckResult("finest twist quotient equals the θ-orbit partition")
    small = CheckResult("every morphism to a twist of size <= 4 is constant on θ-orbits")
    for A in _census(orders):
        S = solution_of(A)
        r = verify_ybe(S)
        braid.expect(r.ok, brace=A.name, triple=r.witness)
        t = theta_conjugation_identity_check(A)
        ident.expect(t.ok, brace=A.name, triple=t.witness)
        quot.expect(twist_quotient(A).is_morphism, brace=A.name)
        univ.expect(twist_morphism_partition(S) == theta_orbits(A), brace=A.name)
    for A in _census(universality_orders):
        bad = universality_violations(A, 4)
        small.expect(not bad, brace=A.name, maps=bad[:3])
    return [braid, ident, quot, univ, small]


# -- isoclinism --------------------------------------------------------------

def _isoclinism(same_size_orders=range(1, 9)) -> list[CheckResult]:
    ex = CheckResult("worked examples")
    A, B = named_example("z4_radical"), named_example("z8_5pow")
    w = is_isoclinic(A, B)
    ex.expect(w is not None, pair=[A.name, B.name], expected="isoclinic")
    if w is not None:
        rep = verify_isoclinism_consequences(A, B, w)
        ex.expect(rep.ok and rep.scale == (1, 2), pair=[A.name, B.name], report=rep.as_dict())
        ex.expect((lambda_graph(A).shape(), lambda_graph(B).shape()) == ("K1", "K2"), pair=[A.name, B.name])
    C, D = named_example("z9_radical"), named_example("z3z2_mixed")
    ex.expect(is_isoclinic(C, D) is None, pair=[C.name, D.name], expected="not isoclinic")
    ex.expect(lambda_graph(C).shape() == lambda_graph(D).shape() == "K2", pair=[C.name, D.name])
    six = CheckResult("order 6: isoclinic iff isomorphic")
    braces = enumerate_braces(6).braces
    for i, X in enumerate(braces):
        for Y in braces[i:]:
            six.expect((is_isoclinic(X, Y) is not None) == (brace_isomorphism(X, Y) is not None),
                       pair=[X.name, Y.name])
    cons = CheckResult("isoclinic same-size census pairs: consequences hold, graphs isomorphic")
    for n in same_size_orders:
        braces = enumerate_braces(n).braces
        for i, X in enumerate(braces):
            for Y in braces[i + 1:]:
                w = is_isoclinic(X, Y)
                if w is None:
                    continue
                rep = verify_isoclinism_consequences(X, Y, w)
                cons.expect(rep.ok, pair=[X.name, Y.name], report=rep.as_dict())
    return [ex, six, cons]


# -- counting and generation -------------------------------------------------

def _v_p(n: int, p: int) -> int:
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def _prime_power(n: int) -> int | None:
    for p in range(2, n + 1):
        if n % p == 0:
            m = n
            while m % p == 0:
                m //= p
            return p if m == 1 else None
    return None


def _counting_lemmas(orders=range(1, 13)) -> list[CheckResult]:
    divides = CheckResult("|fixed points| divides m * c(m)")
    pminus1 = CheckResult("p - 1 divides c(p^k) for p-braces")
    congr = CheckResult("smallest nontrivial orbit count modulo p(p - 1)")
    for A in _census(orders):
        p = _prime_power(A.n)
        for kind, prof in (("lambda", lambda_profile(A)), ("theta", theta_profile(A))):
            f = prof.trivial_count
            for m, c in prof.counts.items():
                divides.expect((m * c) % f == 0, brace=A.name, action=kind, m=m, count=c, fixed=f)
            if p is None or not prof.counts:
                continue
            for m, c in prof.counts.items():
                pminus1.expect(c % (p - 1) == 0, brace=A.name, action=kind, m=m, count=c)
            s = min(prof.counts)
            c = prof.counts[s]
            want = (p - 1) if f == s else 0
            congr.expect(f >= s and c % (p * (p - 1)) == want, brace=A.name, action=kind,
                         smallest=s, count=c, fixed=f)
    return [divides, pminus1, congr]


def _orbit_differences(A, partition) -> frozenset[int]:
    diffs = set()
    for orbit in partition.nontrivial:
        for x in orbit:
            for y in orbit:
                diffs.add(A.sub(x, y))
    return additive_closure(A, diffs)


def _orbit_generation(orders=range(1, 11)) -> list[CheckResult]:
    sq = CheckResult("A^2 is spanned by λ-orbit differences")
    pr = CheckResult("A' is spanned by θ-orbit differences")
    for A in _census(orders):
        whole = range(A.n)
        a2 = star_product(A, whole, whole)
        sq.expect(a2 == _orbit_differences(A, lambda_orbits(A)), brace=A.name)
        pr.expect(a_prime(A) == _orbit_differences(A, theta_orbits(A)), brace=A.name)
    return [sq, pr]


# -- the order-12 worked example ---------------------------------------------

def _z12_example() -> list[CheckResult]:
    A = named_example("z12_cyclic")
    res = CheckResult("z12_cyclic: Fix, classes, θ-orbits, Γ and Θ")
    res.expect(A.fix == frozenset(range(0, 12, 2)), fix=sorted(A.fix))
    lp = lambda_profile(A)
    res.expect(lp.counts == {6: 1}, lambda_profile=lp.counts)
    res.expect(sorted(A.add.classes.sizes) == [1, 1, 2, 2, 3, 3], classes=A.add.classes.sizes)
    res.expect(sorted(theta_orbits(A).sizes) == [1, 1, 2, 2, 6], theta=theta_orbits(A).sizes)
    gam = gamma_graph(A.add)
    part = gam.partition
    edges = sorted(sorted((part.orbits[gam.vertices[i].orbit_id][0], part.orbits[gam.vertices[j].orbit_id][0]))
                   for i, j in gam.edges)
    # class representatives: s -> 1, s^3 -> 3, s^2 -> 2, s^4 -> 4
    res.expect(edges == [[1, 3], [2, 4]], gamma_edges=edges)
    th = theta_graph(A)
    res.expect(th.shape() == "K3", theta=th.shape())
    img = gamma_hom_image_check(A)
    res.expect(img.ok and not img.induced, image=sorted(img.image_edges), induced=img.induced)
    # Γ-edge Con(s)-Con(s^3) collapses onto Θ(s); only Θ(s^2)-Θ(s^4) is hit
    tpart = th.partition
    tv = {tpart.orbits[v.orbit_id][0]: i for i, v in enumerate(th.vertices)}
    want = frozenset({tuple(sorted((tv[2], tv[4])))})
    res.expect(img.image_edges == want, image=sorted(img.image_edges), expected=sorted(want))
    quot = CheckResult("twist quotient has five points")
    quot.expect(twist_quotient(A).size == 5, size=twist_quotient(A).size)
    return [res, quot]


SUITES: dict[str, Suite] = {
    s.name: s for s in (
        Suite("generic-graph-bounds", "Λ and Θ have at most two components of diameter at most four",
              ("census 1..12",), _generic_graph_bounds),
        Suite("nilpotent-diameter2", "left nilpotent braces of nilpotent type have connected graphs of diameter <= 2",
              ("census 1..12", "example:z3z2_mixed", "example:triv_S3"), _nilpotent_diameter2),
        Suite("order6-table", "fixed points and graphs of the six braces of order 6",
              ("census 6", "pq p=3 q=2"), _order6_table),
        Suite("pq-graphs", "graphs of the pq families",
              tuple(f"pq p={p} q={q}" for p, q in PQ_PAIRS), _pq_graphs),
        Suite("p2-graphs", "graphs of braces of order p^2",
              ("p2 p=2,3,5,7", "census 4", "census 9"), _p2_graphs),
        Suite("two-vertex-classification", "braces whose Λ or Θ is two disconnected vertices",
              ("census 1..12",), _two_vertex_classification),
        Suite("one-vertex-lambda", "classification of one-vertex Λ-graphs",
              ("census 1..12", "J/H i=1..3 d=1,3"), _one_vertex_lambda),
        Suite("one-vertex-theta", "classification of one-vertex Θ-graphs",
              ("census 1..8",), _one_vertex_theta),
        Suite("ybe", "Yang-Baxter solution, θ identity and twist quotient",
              ("census 1..10",), _ybe),
        Suite("isoclinism", "isoclinism examples and graph consequences",
              ("examples", "census 6", "census 1..8"), _isoclinism),
        Suite("counting-lemmas", "divisibility of orbit counts",
              ("census 1..12",), _counting_lemmas),
        Suite("orbit-generation", "A^2 and A' from orbit differences",
              ("census 1..10",), _orbit_generation),
        Suite("z12-example", "the dihedral-additive brace with cyclic multiplicative group of order 12",
              ("example:z12_cyclic",), _z12_example),
    )
}


def run_suite(name: str) -> SuiteResult:
    try:
        suite = SUITES[name]
    except KeyError:
        raise SkewBraceError(f"unknown suite {name!r}; known: {', '.join(SUITES)}") from None
    return SuiteResult(suite.name, suite.description, list(suite.targets), suite.run())
