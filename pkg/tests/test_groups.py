import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from skewbrace.errors import NoIdentity, NotAssociative, NotLatinSquare
from skewbrace.grouplib import group_by_name, groups_of_order, identify
from skewbrace.groups import (automorphisms, conjugacy_classes, cyclic_group, dihedral_group,
                              direct_product, find_isomorphism, is_homomorphism, is_normal,
                              opposite_group, relabel, subgroups, symmetric_group, validate_group)

# number of groups of order n, OEIS A000001
GROUP_COUNTS = [1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14]


@pytest.mark.parametrize("n", range(1, 17))
def test_library_counts_and_distinctness(n):
    groups = groups_of_order(n)
    assert len(groups) == GROUP_COUNTS[n - 1]
    for G, H in itertools.combinations(groups, 2):
        assert find_isomorphism(G, H) is None, (G.name, H.name)
    for G in groups:
        validate_group(G.op)
        assert identify(G)[1] == G.name


@pytest.mark.parametrize("name, size", [("C2", 1), ("C3", 2), ("S3", 6), ("C2xC2", 6), ("Q8", 24),
                                        ("D8", 8), ("C2xC2xC2", 168), ("A4", 24), ("C12", 4)])
def test_automorphism_counts(name, size):
    assert len(automorphisms(group_by_name(name))) == size


def test_automorphisms_of_tiny_groups_match_brute_force():
    for G in (group_by_name("S3"), group_by_name("C2xC2"), cyclic_group(5)):
        n = G.order
        brute = [p for p in itertools.permutations(range(n)) if is_homomorphism(G, G, p)]
        assert sorted(brute) == automorphisms(G)


def test_validate_group_errors():
    with pytest.raises(NotLatinSquare):
        validate_group([[0, 1], [1, 1]])
    with pytest.raises(NoIdentity):
        validate_group([[1, 0], [0, 1]], normalize=False)
    # a Latin square with identity that is not associative
    loop = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]]
    with pytest.raises(NotAssociative):
        validate_group(loop)


def test_validate_group_moves_identity_to_zero():
    G = validate_group([[1, 0], [0, 1]])
    assert G.op.tolist() == [[0, 1], [1, 0]]


def test_conjugacy_classes_of_s3_and_d12():
    assert sorted(conjugacy_classes(group_by_name("S3")).sizes) == [1, 2, 3]
    assert sorted(group_by_name("D12").classes.sizes) == [1, 1, 2, 2, 3, 3]


def test_symmetric_and_dihedral():
    assert find_isomorphism(symmetric_group(3), dihedral_group(3)) is not None
    assert find_isomorphism(opposite_group(group_by_name("S3")), group_by_name("S3")) is not None


def test_subgroup_lattice_of_s3():
    S3 = group_by_name("S3")
    subs = subgroups(S3)
    assert sorted(len(s) for s in subs) == [1, 2, 2, 2, 3, 6]
    assert sum(is_normal(S3, s) for s in subs) == 3


@given(st.sampled_from(["S3", "D8", "Q8", "C4xC2", "A4", "Dic12"]), st.data())
def test_relabeled_group_is_isomorphic(name, data):
    G = group_by_name(name)
    perm = [0] + data.draw(st.permutations(range(1, G.order)))
    H = relabel(G, perm)
    phi = find_isomorphism(G, H)
    assert phi is not None and is_homomorphism(G, H, phi)
    assert G.profile == H.profile


@given(st.integers(1, 6), st.integers(1, 6))
def test_cyclic_products(a, b):
    P = direct_product(cyclic_group(a), cyclic_group(b))
    validate_group(P.op)
    assert P.is_abelian
    assert max(P.element_order) == a * b // np.gcd(a, b)
