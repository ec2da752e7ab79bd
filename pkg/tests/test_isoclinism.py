import itertools

import pytest

from skewbrace.brace import trivial_brace
from skewbrace.catalog import named_example
from skewbrace.census import enumerate_braces
from skewbrace.errors import SkewBraceError
from skewbrace.graphs import graphs_isomorphic, lambda_graph, theta_graph
from skewbrace.grouplib import group_by_name
from skewbrace.isoclinism import (IsoclinismWitness, check_witness, commutator_maps,
                                  is_isoclinic, isoclinism_classes,
                                  verify_isoclinism_consequences)
from skewbrace.isomorphism import brace_isomorphism


def test_radical_pair_is_isoclinic_with_scale_two():
    A, B = named_example("z4_radical"), named_example("z8_5pow")
    w = is_isoclinic(A, B)
    assert w is not None
    rep = verify_isoclinism_consequences(A, B, w)
    assert rep.scale == (1, 2) and rep.ok


def test_witness_is_rejected_when_tampered():
    A, B = named_example("z4_radical"), named_example("z8_5pow")
    w = is_isoclinic(A, B)
    mA, mB = commutator_maps(A), commutator_maps(B)
    assert check_witness(mA, mB, w.xi, w.delta) is None
    broken = dict(w.delta)
    nonzero = [k for k in broken if k != 0]
    if nonzero:
        broken[nonzero[0]] = 0
        assert check_witness(mA, mB, w.xi, broken) is not None
    with pytest.raises(SkewBraceError):
        verify_isoclinism_consequences(A, B, IsoclinismWitness(w.xi, broken))


def test_non_isoclinic_pair_with_isomorphic_lambda_graphs():
    A, B = named_example("z9_radical"), named_example("z3z2_mixed")
    assert is_isoclinic(A, B) is None
    assert lambda_graph(A).shape() == lambda_graph(B).shape() == "K2"


def test_trivial_braces_on_abelian_groups_are_all_isoclinic():
    A = trivial_brace(group_by_name("C4"))
    B = trivial_brace(group_by_name("C2xC2"))
    assert is_isoclinic(A, B) is not None


def test_isoclinism_is_reflexive_and_symmetric():
    braces = enumerate_braces(6).braces
    for A in braces:
        assert is_isoclinic(A, A) is not None
    for A, B in itertools.combinations(braces, 2):
        assert (is_isoclinic(A, B) is None) == (is_isoclinic(B, A) is None)


def test_order_six_isoclinism_is_isomorphism():
    braces = enumerate_braces(6).braces
    for A, B in itertools.combinations(braces, 2):
        assert is_isoclinic(A, B) is None
        assert brace_isomorphism(A, B) is None


def test_order_eight_classes_and_consequences():
    braces = enumerate_braces(8).braces
    classes = isoclinism_classes(braces)
    assert sorted(x for c in classes for x in c) == list(range(47))
    assert len(classes) == 20
    for cls in classes:
        for i, j in itertools.combinations(cls, 2):
            A, B = braces[i], braces[j]
            rep = verify_isoclinism_consequences(A, B, is_isoclinic(A, B))
            assert rep.ok
            assert graphs_isomorphic(lambda_graph(A), lambda_graph(B))
            assert graphs_isomorphic(theta_graph(A), theta_graph(B))
