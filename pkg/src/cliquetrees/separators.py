"""Minimal vertex separators and the reduced clique graph.

A minimal separator is an inclusion-minimal ``u``-``v`` separator for some
pair of non-adjacent vertices ``u, v``.
"""
from __future__ import annotations

import itertools

from .clique_lattice import CliqueEdge, CliqueGraph, FamilyLattice, build_lattice
from .clique_trees import enumerate_clique_trees
from .graph_core import Graph

SeparatorSet = frozenset  # frozenset[frozenset[int]]

ORACLE_MAX_VERTICES = 16


def minimal_separators_lattice(lattice: FamilyLattice) -> SeparatorSet:
    """Maximal generators of the families whose ``B_F`` has two or more vertices."""
    seps = set()
    for i, f in enumerate(lattice.families):
        if f.max_generator and lattice.graphs(i).b_multigraph.n >= 2:
            seps.add(f.max_generator)
    return frozenset(seps)


def minimal_separators_oracle(g: Graph, max_vertices: int = ORACLE_MAX_VERTICES) -> SeparatorSet:
    """Brute force over all vertex subsets.

    For every subset ``S`` the components of ``G - S`` are computed; ``S`` is a
    ``u``-``v`` separator for each pair in different components. Per pair only
    the inclusion-minimal separators are kept.
    """
    if g.n > max_vertices:
        raise ValueError(f"oracle is exponential; {g.n} vertices exceeds the gate of {max_vertices}")
    separating: dict[tuple[int, int], list[frozenset[int]]] = {}
    everything = range(g.n)
    for size in range(1, g.n - 1):
        for subset in itertools.combinations(everything, size):
            s = frozenset(subset)
            comps = g.components(v for v in everything if v not in s)
            if len(comps) < 2:
                continue
            for ca, cb in itertools.combinations(comps, 2):
                for u in ca:
                    for v in cb:
                        separating.setdefault((min(u, v), max(u, v)), []).append(s)
    result = set()
    for found in separating.values():
        # subsets were visited by increasing size
        minimal: list[frozenset[int]] = []
        for s in found:
            if not any(t <= s for t in minimal):
                minimal.append(s)
        result.update(minimal)
    return frozenset(result)


def reduced_clique_graph(cg: CliqueGraph, seps: SeparatorSet) -> frozenset[CliqueEdge]:
    """Clique-graph edges ``K1K2`` whose label ``S = K1 ∩ K2`` is a minimal
    separator that separates ``K1 - S`` from ``K2 - S``.

    The separation test matters: a label can be a minimal separator for some
    other pair while ``K1 - S`` and ``K2 - S`` stay connected in ``G - S``;
    such an edge lies on no clique tree.
    """
    g = cg.graph
    kept = []
    for e in cg.edges:
        label = cg.labels[e]
        if label not in seps:
            continue
        comp = {}
        for k, members in enumerate(g.components(v for v in range(g.n) if v not in label)):
            comp.update(dict.fromkeys(members, k))
        left = {comp[v] for v in cg.cliques[e[0]] if v not in label}
        right = {comp[v] for v in cg.cliques[e[1]] if v not in label}
        if left.isdisjoint(right):
            kept.append(e)
    return frozenset(kept)


def clique_tree_union(g: Graph | FamilyLattice) -> tuple[frozenset[CliqueEdge], list[frozenset[frozenset[int]]]]:
    """Union of all clique trees, and each tree's set of edge labels."""
    lattice = g if isinstance(g, FamilyLattice) else build_lattice(g)
    cg = lattice.clique_graph
    union: set[CliqueEdge] = set()
    labels = []
    for tree in enumerate_clique_trees(lattice):
        union |= tree
        labels.append(frozenset(cg.labels[e] for e in tree))
    return frozenset(union), labels


def separators_to_json(g: Graph, seps: SeparatorSet) -> list[list[str]]:
    named = [sorted(g.names[v] for v in s) for s in seps]
    return sorted(named)
