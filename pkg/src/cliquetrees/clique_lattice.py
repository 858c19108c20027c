"""Cliques, the clique graph and the lattice of clique families.

A clique family ``F(C)`` is the set of maximal cliques containing a complete
set ``C``. Families are identified by their member set (clique indices).
For each family the clique-graph edges inside it split into

* ``R_F``: edges whose endpoint intersection generates a strictly smaller family,
* ``S_F``: edges whose endpoint intersection equals the maximal generator,

and ``B_F`` is ``S_F`` with the connected components of ``R_F`` contracted.
Every clique-graph edge lies in exactly one ``S_F``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DisconnectedGraphError
from .graph_core import Graph, Multigraph, contract, is_peo, require_chordal

Clique = tuple[int, ...]
CliqueEdge = tuple[int, int]


def enumerate_cliques(g: Graph, peo: Sequence[int]) -> list[Clique]:
    """Maximal cliques of a chordal graph from a perfect elimination ordering.

    Each vertex together with its later neighbours is complete; the maximal
    ones among these candidates are exactly the cliques.
    """
    if not is_peo(g, peo):
        raise ValueError("ordering is not a perfect elimination ordering of the graph")
    pos = {v: i for i, v in enumerate(peo)}
    candidates = {frozenset([v, *(w for w in g.adj[v] if pos[w] > pos[v])]) for v in peo}
    maximal = [c for c in candidates if not any(c < d for d in candidates)]
    return sorted(tuple(sorted(c)) for c in maximal)


@dataclass(frozen=True, eq=False)
class CliqueGraph:
    """Intersection graph of the maximal cliques.

    ``edges`` holds index pairs ``(i, j)`` with ``i < j`` in lexicographic
    order; ``labels`` maps each edge to the intersection of its cliques.
    """

    graph: Graph
    cliques: tuple[Clique, ...]
    edges: tuple[CliqueEdge, ...]
    labels: dict[CliqueEdge, frozenset[int]]
    cliques_of_vertex: tuple[frozenset[int], ...]

    @property
    def size(self) -> int:
        return len(self.cliques)

    def label(self, i: int, j: int) -> frozenset[int]:
        return self.labels[(min(i, j), max(i, j))]

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.labels

    def weight(self, i: int, j: int) -> int:
        return len(self.label(i, j))

    def clique_names(self, k: int) -> list[str]:
        return [self.graph.names[v] for v in self.cliques[k]]


def build_clique_graph(g: Graph) -> CliqueGraph:
    """Clique graph of a connected chordal graph.

    Raises :class:`~cliquetrees.errors.NotChordalError` or
    :class:`~cliquetrees.errors.DisconnectedGraphError` otherwise.
    """
    peo = require_chordal(g)
    cliques = enumerate_cliques(g, peo)
    sets = [frozenset(c) for c in cliques]
    labels = {}
    for i, j in itertools.combinations(range(len(cliques)), 2):
        common = sets[i] & sets[j]
        if common:
            labels[(i, j)] = common
    of_vertex = [set() for _ in range(g.n)]
    for k, c in enumerate(cliques):
        for v in c:
            of_vertex[v].add(k)
    return CliqueGraph(
        graph=g,
        cliques=tuple(cliques),
        edges=tuple(sorted(labels)),
        labels=labels,
        cliques_of_vertex=tuple(frozenset(s) for s in of_vertex),
    )


@dataclass(frozen=True, order=True)
class CliqueFamily:
    """Family of cliques, keyed by its sorted member indices.

    Ordering is by (size, members), the canonical family order.
    """

    size: int
    members: tuple[int, ...]
    max_generator: frozenset[int]

    def __contains__(self, clique: int) -> bool:
        return clique in self.members

    def __len__(self) -> int:
        return self.size


def _intersection(cg: CliqueGraph, members: Iterable[int]) -> frozenset[int]:
    it = iter(members)
    acc = set(cg.cliques[next(it)])
    for k in it:
        acc &= set(cg.cliques[k])
    return frozenset(acc)


def _family(cg: CliqueGraph, members: Iterable[int]) -> CliqueFamily:
    ms = tuple(sorted(members))
    return CliqueFamily(len(ms), ms, _intersection(cg, ms))


def family_of(cg: CliqueGraph, c: Iterable[int]) -> CliqueFamily:
    """Family ``F(C)`` of cliques containing the vertex set ``c``.

    ``c`` must be complete; otherwise no clique contains it and ValueError is
    raised (families are never empty).
    """
    c = frozenset(c)
    if not c:
        return _family(cg, range(cg.size))
    members = set.intersection(*(set(cg.cliques_of_vertex[v]) for v in c))
    if not members:
        raise ValueError(f"vertex set {sorted(c)} is not complete; it lies in no clique")
    return _family(cg, members)


class FamilyLattice:
    """All clique families of a clique graph, in canonical order.

    ``families`` is sorted by (size, members). Per-family graphs are computed
    on first request and cached.
    """

    def __init__(self, cg: CliqueGraph, families: Iterable[CliqueFamily]):
        self.clique_graph = cg
        self.families: tuple[CliqueFamily, ...] = tuple(sorted(set(families)))
        self._by_members = {f.members: i for i, f in enumerate(self.families)}
        self._graphs: dict[int, FamilyGraphs] = {}

    def __len__(self) -> int:
        return len(self.families)

    def __iter__(self):
        return iter(self.families)

    def index(self, f: CliqueFamily | Iterable[int]) -> int:
        members = f.members if isinstance(f, CliqueFamily) else tuple(sorted(f))
        return self._by_members[members]

    def family_of(self, c: Iterable[int]) -> CliqueFamily:
        return self.families[self.index(family_of(self.clique_graph, c))]

    def includes(self, smaller: CliqueFamily, larger: CliqueFamily) -> bool:
        return set(smaller.members) <= set(larger.members)

    def graphs(self, f: CliqueFamily | int) -> "FamilyGraphs":
        i = f if isinstance(f, int) else self.index(f)
        if i not in self._graphs:
            self._graphs[i] = _family_graphs(self, self.families[i])
        return self._graphs[i]


def enumerate_families(cg: CliqueGraph) -> FamilyLattice:
    """Closure of the vertex families and ``F(∅)`` under non-empty intersection."""
    seeds = {frozenset(cg.cliques_of_vertex[v]) for v in range(cg.graph.n)}
    seeds.add(frozenset(range(cg.size)))
    found = set(seeds)
    frontier = set(seeds)
    while frontier:
        fresh = set()
        for a in frontier:
            for b in found:
                common = a & b
                if common and common not in found:
                    fresh.add(common)
        found |= fresh
        frontier = fresh
    return FamilyLattice(cg, (_family(cg, m) for m in found))


@dataclass(frozen=True)
class FamilyGraphs:
    """Derived graphs of one family.

    ``classes`` lists the components of ``R_F`` (clique indices), ordered by
    smallest member; vertex ``k`` of ``b_multigraph`` is ``classes[k]`` and
    each of its edges is labelled with the originating clique-graph edge.
    """

    family: CliqueFamily
    r_edges: tuple[CliqueEdge, ...]
    s_edges: tuple[CliqueEdge, ...]
    classes: tuple[tuple[int, ...], ...]
    b_multigraph: Multigraph

    def class_of(self, clique: int) -> int:
        for k, cls in enumerate(self.classes):
            if clique in cls:
                return k
        raise KeyError(clique)


def _family_graphs(lattice: FamilyLattice, f: CliqueFamily) -> FamilyGraphs:
    cg = lattice.clique_graph
    inside = set(f.members)
    r_edges, s_edges = [], []
    for i, j in cg.edges:
        if i in inside and j in inside:
            if cg.labels[(i, j)] == f.max_generator:
                s_edges.append((i, j))
            else:
                r_edges.append((i, j))
    local = {k: pos for pos, k in enumerate(f.members)}
    parent = list(range(len(f.members)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in r_edges:
        ri, rj = find(local[i]), find(local[j])
        if ri != rj:
            parent[max(ri, rj)] = min(ri, rj)
    groups: dict[int, list[int]] = {}
    for k in f.members:
        groups.setdefault(find(local[k]), []).append(k)
    classes = tuple(sorted(tuple(g) for g in groups.values()))
    s_local = Multigraph(len(f.members), [(local[i], local[j], (i, j)) for i, j in s_edges])
    b = contract(s_local, [[local[k] for k in cls] for cls in classes])
    return FamilyGraphs(f, tuple(r_edges), tuple(s_edges), classes, b)


def family_graphs(lattice: FamilyLattice, f: CliqueFamily) -> FamilyGraphs:
    """``R_F``, ``S_F``, the ``~_F`` classes and ``B_F`` for a lattice family."""
    return lattice.graphs(f)


def edge_partition(cg: CliqueGraph, lattice: FamilyLattice) -> dict[CliqueEdge, CliqueFamily]:
    """Map each clique-graph edge ``K1K2`` to the family ``F(K1 ∩ K2)``."""
    return {e: lattice.family_of(cg.labels[e]) for e in cg.edges}


def build_lattice(g: Graph) -> FamilyLattice:
    """Clique graph plus family lattice of a connected chordal graph."""
    if g.n == 0:
        raise DisconnectedGraphError("empty graph")
    return enumerate_families(build_clique_graph(g))


def lattice_to_dict(lattice: FamilyLattice) -> dict:
    """JSON-ready description of the lattice.

    Fields per family: ``id``, ``cliques`` (member vertex-name lists),
    ``max_generator``, ``R``/``S`` (edge counts), ``B`` (vertices, edges, loops).
    """
    cg = lattice.clique_graph
    names = cg.graph.names
    out = []
    for i, f in enumerate(lattice.families):
        fg = lattice.graphs(i)
        b = fg.b_multigraph
        out.append(
            {
                "id": i,
                "cliques": [cg.clique_names(k) for k in f.members],
                "max_generator": sorted(names[v] for v in f.max_generator),
                "R": {"edges": len(fg.r_edges)},
                "S": {"edges": len(fg.s_edges)},
                "B": {"vertices": b.n, "edges": len(b.edges), "loops": len(b.loops())},
            }
        )
    return {
        "cliques": [cg.clique_names(k) for k in range(cg.size)],
        "families": out,
    }
