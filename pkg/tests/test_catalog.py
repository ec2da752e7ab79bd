import itertools

import pytest

from skewbrace.brace import validate_brace
from skewbrace.catalog import (NAMED_EXAMPLES, FamilySpec, build, d2d_structure, h_brace,
                               h_structure, j_brace, j_structure, k8d_brace, k8d_structure,
                               named_example, one_vertex_iso_criterion, p2_brace, parse_spec,
                               pq_brace, pq_family, recognize_one_vertex, z12_additive_table)
from skewbrace.census import enumerate_braces
from skewbrace.errors import BadParameters, CircNotGroup, NotOneVertex, UnknownName
from skewbrace.graphs import lambda_graph
from skewbrace.grouplib import identify
from skewbrace.groups import cyclic_group, trivial_group, validate_group
from skewbrace.isomorphism import brace_isomorphism


def test_named_examples_build_and_validate():
    for name in NAMED_EXAMPLES:
        A = named_example(name)
        validate_brace(A.add.op, A.circ.op)
    with pytest.raises(UnknownName):
        named_example("nope")


def test_named_example_groups():
    assert identify(named_example("z12_cyclic").circ)[1] == "C12"
    assert identify(named_example("z8_5pow").circ)[1] == "C8"
    assert identify(named_example("z12_cyclic").add)[1] == "D12"
    assert identify(named_example("klein").add)[1] == "C2xC2"
    assert identify(named_example("z2z4_B2").add)[1] == "C4xC2"


@pytest.mark.parametrize("p,q", [(3, 2), (5, 2), (7, 2), (7, 3), (13, 3)])
def test_pq_family_is_complete_and_distinct(p, q):
    fam = pq_family(p, q)
    assert len(fam) == 2 * q + 2
    for A, B in itertools.combinations(fam, 2):
        assert brace_isomorphism(A, B) is None, (A.name, B.name)
    if p * q <= 14:
        census = enumerate_braces(p * q, allow_extended=True).braces
        assert len(census) == len(fam)
        for A in fam:
            assert any(brace_isomorphism(A, B) is not None for B in census)


def test_pq_generator_choice_does_not_matter():
    for kind in ("C", "D", "T2"):
        assert brace_isomorphism(pq_brace(kind, 7, 3, 2), pq_brace(kind, 7, 3, 4)) is not None


def test_pq_bad_parameters():
    for args in [("C", 5, 3), ("C", 4, 2), ("E", 7, 3, None, 4), ("T1", 5, 2, None, 2), ("Z", 5, 2)]:
        with pytest.raises(BadParameters):
            pq_brace(*args)
    with pytest.raises(BadParameters):
        pq_brace("C", 7, 3, 6)          # 6 has order 2 mod 7


@pytest.mark.parametrize("p", [2, 3])
def test_p2_family_matches_census(p):
    fam = [p2_brace(k, p) for k in range(1, 5)]
    census = enumerate_braces(p * p).braces
    assert len(census) == 4
    for A in fam:
        assert sum(brace_isomorphism(A, B) is not None for B in census) == 1
    with pytest.raises(BadParameters):
        p2_brace(5, p)


@pytest.mark.parametrize("make_struct,make_brace,args", [
    (j_structure, j_brace, (1, cyclic_group(1))),
    (j_structure, j_brace, (2, cyclic_group(1))),
    (j_structure, j_brace, (1, cyclic_group(3))),
    (h_structure, h_brace, (1, cyclic_group(1))),
    (h_structure, h_brace, (2, cyclic_group(1))),
    (h_structure, h_brace, (1, cyclic_group(3))),
    (h_structure, h_brace, (3, cyclic_group(1))),
])
def test_structure_data_agrees_with_explicit_formulas(make_struct, make_brace, args):
    A = make_struct(*args).build()
    B = make_brace(*args)
    assert brace_isomorphism(A, B) is not None
    assert lambda_graph(B).num_vertices == 1


def test_d2d_and_k8d_structures():
    for d in (3, 5):
        F = cyclic_group(d)
        assert brace_isomorphism(d2d_structure(F).build(), build(f"onevertex:D2d d={d}")) is not None
    for d in (1, 3):
        G = cyclic_group(d)
        base = k8d_brace(G)
        for h in ((1, 0), (0, 1), (1, 1)):
            assert brace_isomorphism(k8d_structure(G, h).build(), base) is not None
        s = [k8d_structure(G, h) for h in ((1, 0), (0, 1), (1, 1))]
        assert all(one_vertex_iso_criterion(s[0], t) for t in s[1:])


def test_literal_h_formula_breaks_associativity_for_i_at_least_2():
    """Without the sign on the first summand the circle table stops being a group once 2^i > 2."""
    def literal(i):
        M, t = 2 ** i, 2 ** (i - 1)
        els = list(itertools.product(range(M), range(2)))
        idx = {e: k for k, e in enumerate(els)}
        sg = lambda k: -1 if k else 1
        add = [[idx[((a1 + sg(k1) * a2 + t * k1 * k2) % M, (k1 + k2) % 2)] for a2, k2 in els]
               for a1, k1 in els]
        circ = [[idx[((a1 + sg(k1) * a2 - k1 * k2 + t * k1 * k2) % M, (k1 + k2) % 2)] for a2, k2 in els]
                for a1, k1 in els]
        return add, circ

    validate_brace(*literal(1))
    for i in (2, 3):
        with pytest.raises(CircNotGroup):
            validate_brace(*literal(i))


def test_j_and_h_are_not_isomorphic():
    for i in (1, 2):
        assert brace_isomorphism(j_brace(i, cyclic_group(1)), h_brace(i, cyclic_group(1))) is None
        assert not one_vertex_iso_criterion(j_structure(i, cyclic_group(1)), h_structure(i, cyclic_group(1)))


def test_b2_is_k8_with_trivial_odd_part():
    assert brace_isomorphism(named_example("z2z4_B2"), k8d_brace(trivial_group())) is not None


def test_recognizer_on_census():
    found = {}
    for n in (4, 6, 8, 10, 12):
        for A in enumerate_braces(n).braces:
            if lambda_graph(A).num_vertices == 1:
                found.setdefault(n, []).append(recognize_one_vertex(A).tag)
    assert {n: sorted(v) for n, v in found.items()} == {
        4: ["H", "J"], 6: ["D2d"], 8: ["H", "J", "K8d"], 10: ["D2d"], 12: ["H", "J"]}
    with pytest.raises(NotOneVertex):
        recognize_one_vertex(named_example("triv_S3"))


def test_bad_structure_is_rejected():
    s = j_structure(1, cyclic_group(1))
    from skewbrace.catalog import OneVertexStructure
    with pytest.raises(BadParameters):
        OneVertexStructure(s.F, tuple(range(s.F.order)), s.y, s.z).build()


def test_z12_conventions():
    right = validate_group(z12_additive_table("right"))
    left = validate_group(z12_additive_table("left"))
    assert identify(right)[1] == identify(left)[1]
    A = named_example("z12_cyclic")
    assert A.add.same_table(right)
    assert len(A.fix) == 6
    # the opposite addition makes the same circle a brace with only two fixed points
    B = validate_brace(left.op, A.circ.op)
    assert len(B.fix) == 2


@pytest.mark.parametrize("text,tag", [
    ("pq:C p=5 q=2", "PQ_C"), ("pq:E3 p=7 q=3", "PQ_E"), ("p2:3 p=2", "P2_3"),
    ("triv:S3", "Triv"), ("optriv:S3", "OpTriv"), ("onevertex:J i=2 d=1", "J"),
    ("onevertex:K8d d=3 h=(1,1)", "K8d"), ("example:klein", "NamedExample"),
])
def test_parse_spec(text, tag):
    spec = parse_spec(text)
    assert spec.tag == tag
    assert build(spec).n == build(text).n


@pytest.mark.parametrize("text", [
    "", "pq", "pq:Z p=5 q=2", "p2:7 p=3", "pq:C p=x q=2", "pq:C p", "onevertex:Q i=1",
    "foo:bar", "triv:NoSuchGroup", "onevertex:J d=1",
])
def test_parse_spec_errors(text):
    with pytest.raises((BadParameters, UnknownName)):
        build(text)


def test_family_spec_rejects_unknown_tag():
    with pytest.raises(BadParameters):
        FamilySpec("Nope")


def test_even_odd_part_is_rejected():
    with pytest.raises(BadParameters):
        j_structure(1, cyclic_group(2))
    with pytest.raises(BadParameters):
        d2d_structure(cyclic_group(1))
