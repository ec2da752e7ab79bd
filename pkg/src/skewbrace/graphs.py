"""Common-divisor graphs of orbit partitions and small-graph isomorphism."""

from __future__ import annotations

import itertools
import json
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from math import gcd

import numpy as np

from .brace import SkewBrace
from .errors import BudgetExceeded
from .groups import CayleyGroup, DEFAULT_MAX_NODES
from .orbits import OrbitPartition, OrbitProfile, orbit_profile, orbits


@dataclass(frozen=True)
class Vertex:
    orbit_id: int          # position of the orbit in the partition
    size: int


@dataclass(frozen=True)
class CdGraph:
    """Vertices are the nontrivial orbits; ``edges`` holds pairs ``(i, j)`` of vertex positions, ``i < j``."""

    vertices: tuple[Vertex, ...]
    edges: frozenset[tuple[int, int]]
    partition: OrbitPartition | None = None

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def sizes(self) -> list[int]:
        return [v.size for v in self.vertices]

    def neighbours(self, i: int) -> list[int]:
        return sorted({b for a, b in self.edges if a == i} | {a for a, b in self.edges if b == i})

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edges

    @cached_property
    def _adjacency(self) -> list[list[int]]:
        return [self.neighbours(i) for i in range(self.num_vertices)]

    @cached_property
    def components(self) -> list[frozenset[int]]:
        seen: set[int] = set()
        comps = []
        for start in range(self.num_vertices):
            if start in seen:
                continue
            comp = {start}
            queue = deque([start])
            while queue:
                u = queue.popleft()
                for w in self._adjacency[u]:
                    if w not in comp:
                        comp.add(w)
                        queue.append(w)
            seen |= comp
            comps.append(frozenset(comp))
        return comps

    def _eccentricity(self, start: int) -> int:
        dist = {start: 0}
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in self._adjacency[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return max(dist.values())

    @cached_property
    def diameters(self) -> list[int]:
        return [max(self._eccentricity(v) for v in comp) for comp in self.components]

    @property
    def component_sizes(self) -> list[int]:
        return [len(c) for c in self.components]

    @property
    def is_connected(self) -> bool:
        return len(self.components) <= 1

    @property
    def is_complete(self) -> bool:
        k = self.num_vertices
        return len(self.edges) == k * (k - 1) // 2

    def shape(self) -> str:
        """Short structural description such as ``K1 + K2`` or ``empty``."""
        if not self.vertices:
            return "empty"
        parts = []
        for comp in self.components:
            k = len(comp)
            inner = sum(1 for a, b in self.edges if a in comp)
            parts.append(f"K{k}" if inner == k * (k - 1) // 2 else f"G{k}e{inner}")
        return " + ".join(sorted(parts))

    def summary(self) -> dict:
        return {
            "vertices": self.num_vertices,
            "sizes": self.sizes,
            "edges": sorted(list(e) for e in self.edges),
            "components": self.component_sizes,
            "diameters": self.diameters,
            "shape": self.shape(),
        }


def graph_from_sizes(sizes, orbit_ids=None, partition=None) -> CdGraph:
    """Common-divisor graph on vertices with the given orbit sizes."""
    sizes = list(sizes)
    ids = list(orbit_ids) if orbit_ids is not None else list(range(len(sizes)))
    verts = tuple(Vertex(i, s) for i, s in zip(ids, sizes))
    edges = frozenset(
        (i, j)
        for i, j in itertools.combinations(range(len(sizes)), 2)
        if gcd(sizes[i], sizes[j]) != 1
    )
    return CdGraph(verts, edges, partition)


def common_divisor_graph(partition: OrbitPartition) -> CdGraph:
    ids = [k for k, o in enumerate(partition.orbits) if len(o) > 1]
    return graph_from_sizes([len(partition.orbits[k]) for k in ids], ids, partition)


def lambda_orbits(A: SkewBrace) -> OrbitPartition:
    return orbits(A.lam)


def theta_orbits(A: SkewBrace) -> OrbitPartition:
    return orbits(A.theta)


def lambda_graph(A: SkewBrace) -> CdGraph:
    return common_divisor_graph(lambda_orbits(A))


def theta_graph(A: SkewBrace) -> CdGraph:
    return common_divisor_graph(theta_orbits(A))


def gamma_graph(G: CayleyGroup) -> CdGraph:
    return common_divisor_graph(G.classes)


def lambda_profile(A: SkewBrace) -> OrbitProfile:
    return orbit_profile(lambda_orbits(A))


def theta_profile(A: SkewBrace) -> OrbitProfile:
    return orbit_profile(theta_orbits(A))


# -- isomorphism -------------------------------------------------------------

def _refine(adj: np.ndarray) -> list[int]:
    """Stable colour refinement starting from degrees; returns a colour per vertex."""
    k = len(adj)
    colours = [int(d) for d in adj.sum(axis=1)]
    while True:
        sigs = [(colours[v], tuple(sorted(colours[w] for w in np.flatnonzero(adj[v]))))
                for v in range(k)]
        ranks = {s: r for r, s in enumerate(sorted(set(sigs)))}
        new = [ranks[s] for s in sigs]
        if len(set(new)) == len(set(colours)):
            return new
        colours = new


def canonical_form(g: CdGraph, max_nodes: int = DEFAULT_MAX_NODES) -> tuple:
    """Structure-only canonical form: the least adjacency string over cell-respecting orderings.

    Vertex sizes are ignored; two graphs are isomorphic iff their forms agree.
    """
    k = g.num_vertices
    adj = np.zeros((k, k), dtype=np.int8)
    for i, j in g.edges:
        adj[i, j] = adj[j, i] = 1
    if k == 0:
        return (0, (), ())
    colours = _refine(adj)
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(colours):
        cells.setdefault(c, []).append(v)
    ordered = [cells[c] for c in sorted(cells)]
    # invariant prefix: cell colour signature
    signature = tuple((c, len(cells[c])) for c in sorted(cells))
    best = None
    nodes = 0
    for choice in itertools.product(*(itertools.permutations(cell) for cell in ordered)):
        nodes += 1
        if nodes > max_nodes:
            raise BudgetExceeded("graph canonical form", max_nodes)
        order = [v for part in choice for v in part]
        word = tuple(adj[np.ix_(order, order)].ravel().tolist())
        if best is None or word < best:
            best = word
    return (k, signature, best)


def graphs_isomorphic(g1: CdGraph, g2: CdGraph, max_nodes: int = DEFAULT_MAX_NODES) -> bool:
    if g1.num_vertices != g2.num_vertices or len(g1.edges) != len(g2.edges):
        return False
    return canonical_form(g1, max_nodes) == canonical_form(g2, max_nodes)


# -- Γ(A,+) → Θ(A) -----------------------------------------------------------

@dataclass(frozen=True)
class GammaImage:
    ok: bool
    vertex_map: dict[int, int]          # Γ vertex position -> Θ vertex position
    image_vertices: frozenset[int]
    image_edges: frozenset[tuple[int, int]]
    induced: bool
    problems: tuple[str, ...] = ()


def gamma_hom_image_check(A: SkewBrace) -> GammaImage:
    """Check that ``Con(a) -> Θ(a)`` maps Γ(A,+) homomorphically into Θ(A).

    The map must be well defined, each ``|Θ(a)|`` must be a multiple of
    ``|Con(a)|``, and Γ-adjacent classes must land on equal or adjacent
    Θ-vertices. ``image_edges`` are the Θ-edges hit by Γ-edges.
    """
    gam = gamma_graph(A.add)
    th = theta_graph(A)
    tpart = th.partition
    tidx = tpart.orbit_index()
    cpart = gam.partition
    tpos = {v.orbit_id: i for i, v in enumerate(th.vertices)}
    problems: list[str] = []
    vmap: dict[int, int] = {}
    for gi, v in enumerate(gam.vertices):
        cls = cpart.orbits[v.orbit_id]
        targets = {int(tidx[x]) for x in cls}
        if len(targets) != 1:
            problems.append(f"class {cls} meets several θ-orbits")
            continue
        t = targets.pop()
        tsize = len(tpart.orbits[t])
        if tsize % v.size:
            problems.append(f"|Θ| = {tsize} not a multiple of |Con| = {v.size}")
        if t not in tpos:
            problems.append(f"class {cls} maps to a trivial θ-orbit")
            continue
        vmap[gi] = tpos[t]
    image_edges = set()
    for i, j in gam.edges:
        if i not in vmap or j not in vmap:
            continue
        a, b = vmap[i], vmap[j]
        if a == b:
            continue
        if not th.has_edge(a, b):
            problems.append(f"Γ-edge {i}-{j} maps to a non-edge")
        else:
            image_edges.add((min(a, b), max(a, b)))
    image_vertices = frozenset(vmap.values())
    induced_edges = {e for e in th.edges if e[0] in image_vertices and e[1] in image_vertices}
    return GammaImage(
        ok=not problems,
        vertex_map=vmap,
        image_vertices=image_vertices,
        image_edges=frozenset(image_edges),
        induced=induced_edges == image_edges,
        problems=tuple(problems),
    )


# -- emitters ----------------------------------------------------------------

def graph_to_json(g: CdGraph) -> dict:
    return {
        "vertices": [{"id": v.orbit_id, "size": v.size} for v in g.vertices],
        "edges": [[g.vertices[i].orbit_id, g.vertices[j].orbit_id] for i, j in sorted(g.edges)],
    }


def graph_from_json(data: dict) -> CdGraph:
    ids = [int(v["id"]) for v in data["vertices"]]
    pos = {vid: k for k, vid in enumerate(ids)}
    verts = tuple(Vertex(int(v["id"]), int(v["size"])) for v in data["vertices"])
    edges = frozenset((min(pos[a], pos[b]), max(pos[a], pos[b])) for a, b in data["edges"])
    return CdGraph(verts, edges)


def emit_graph(g: CdGraph, fmt: str = "ascii", name: str = "G") -> str:
    if fmt == "json":
        return json.dumps(graph_to_json(g), sort_keys=True)
    if fmt == "dot":
        lines = [f"graph {json.dumps(name)} {{"]
        for v in g.vertices:
            lines.append(f'  O{v.orbit_id} [label="O{v.orbit_id}({v.size})"];')
        for i, j in sorted(g.edges):
            lines.append(f"  O{g.vertices[i].orbit_id} -- O{g.vertices[j].orbit_id};")
        lines.append("}")
        return "\n".join(lines) + "\n"
    if fmt == "ascii":
        return ascii_graph(g)
    raise ValueError(f"unknown graph format {fmt!r}")


def ascii_graph(g: CdGraph) -> str:
    k = g.num_vertices
    if k == 0:
        return "(no vertices)"
    if k == 1:
        return "•"
    if k == 2:
        return "•—•" if g.edges else "• •"
    if k == 3:
        e = len(g.edges)
        if e == 0:
            return "• • •"
        if e == 1:
            return "•—• •"
        if e == 2:
            return "•—•—•"
        return "triangle"
    lines = []
    for i, v in enumerate(g.vertices):
        nbrs = ", ".join(f"O{g.vertices[j].orbit_id}" for j in g.neighbours(i))
        lines.append(f"O{v.orbit_id}({v.size}): {nbrs}")
    return "\n".join(lines)
