import itertools
from math import gcd

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from skewbrace.catalog import named_example
from skewbrace.census import enumerate_braces
from skewbrace.graphs import (canonical_form, common_divisor_graph, emit_graph, gamma_graph,
                              gamma_hom_image_check, graph_from_json, graph_from_sizes,
                              graph_to_json, graphs_isomorphic, lambda_graph, lambda_orbits,
                              theta_graph, theta_orbits)
from skewbrace.grouplib import groups_of_order
from skewbrace.orbits import OrbitPartition


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.num_vertices))
    h.add_edges_from(g.edges)
    return h


sizes_st = st.lists(st.integers(min_value=2, max_value=60), min_size=0, max_size=7)


@given(sizes_st)
def test_components_and_diameters_match_networkx(sizes):
    g = graph_from_sizes(sizes)
    h = to_nx(g)
    assert sorted(map(len, g.components)) == sorted(map(len, nx.connected_components(h)))
    expected = sorted(nx.diameter(h.subgraph(c)) for c in nx.connected_components(h))
    assert sorted(g.diameters) == expected
    assert g.is_complete == (h.number_of_edges() == len(sizes) * (len(sizes) - 1) // 2)


@given(sizes_st, sizes_st)
def test_canonical_form_decides_isomorphism(s1, s2):
    g1, g2 = graph_from_sizes(s1), graph_from_sizes(s2)
    assert graphs_isomorphic(g1, g2) == nx.is_isomorphic(to_nx(g1), to_nx(g2))


@given(sizes_st, st.data())
def test_canonical_form_ignores_vertex_order(sizes, data):
    perm = data.draw(st.permutations(range(len(sizes))))
    assert canonical_form(graph_from_sizes(sizes)) == canonical_form(graph_from_sizes([sizes[p] for p in perm]))


@given(sizes_st)
def test_edges_are_common_divisors(sizes):
    g = graph_from_sizes(sizes)
    for i, j in itertools.combinations(range(len(sizes)), 2):
        assert g.has_edge(i, j) == (gcd(sizes[i], sizes[j]) > 1)


def test_trivial_orbits_are_not_vertices():
    part = OrbitPartition(5, ((0,), (1, 2), (3,), (4,)))
    g = common_divisor_graph(part)
    assert g.sizes == [2] and g.vertices[0].orbit_id == 1


def test_shapes():
    assert graph_from_sizes([]).shape() == "empty"
    assert graph_from_sizes([2]).shape() == "K1"
    assert graph_from_sizes([2, 3]).shape() == "K1 + K1"
    assert graph_from_sizes([2, 4]).shape() == "K2"
    assert graph_from_sizes([3, 2, 4]).shape() == "K1 + K2"
    assert graph_from_sizes([6, 2, 3]).shape() == "G3e2"
    assert graph_from_sizes([6, 2, 4]).shape() == "K3"


def test_orbits_partition_the_brace():
    for A in enumerate_braces(8).braces:
        for part in (lambda_orbits(A), theta_orbits(A)):
            assert sorted(x for o in part.orbits for x in o) == list(range(8))
            assert part.orbits[0] == (0,)
        # each λ-orbit lies in a θ-orbit
        tidx = theta_orbits(A).orbit_index()
        for o in lambda_orbits(A).orbits:
            assert len({int(tidx[x]) for x in o}) == 1


def test_gamma_graph_of_s3():
    S3 = next(G for G in groups_of_order(6) if not G.is_abelian)
    g = gamma_graph(S3)
    assert sorted(g.sizes) == [2, 3] and not g.edges


def test_json_round_trip_and_emitters():
    g = theta_graph(named_example("z12_cyclic"))
    back = graph_from_json(graph_to_json(g))
    assert back.sizes == g.sizes and back.edges == g.edges
    dot = emit_graph(g, "dot", "theta")
    assert dot.count("[label=") == 3 and dot.count(" -- ") == 3
    assert emit_graph(g, "ascii") == "triangle"
    assert emit_graph(graph_from_sizes([2, 3]), "ascii") == "• •"
    with pytest.raises(ValueError):
        emit_graph(g, "svg")


def test_z12_gamma_image_is_one_edge():
    A = named_example("z12_cyclic")
    img = gamma_hom_image_check(A)
    th = theta_graph(A)
    assert img.ok and th.shape() == "K3"
    # Γ meets all three Θ-vertices but hits only one of the three edges
    assert img.image_vertices == frozenset(range(3))
    assert len(img.image_edges) == 1 and not img.induced


def test_gamma_image_on_census():
    for n in (6, 8, 12):
        for A in enumerate_braces(n).braces:
            img = gamma_hom_image_check(A)
            assert img.ok, (A.name, img.problems)


def test_lambda_graph_of_trivial_brace_is_empty():
    A = named_example("triv_S3")
    assert lambda_graph(A).shape() == "empty"
