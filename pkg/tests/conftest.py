"""Shared corpora and brute-force oracles.

networkx is used only here and in the tests, as an independent reference for
chordality and as the source of the small-graph atlas.
"""
from __future__ import annotations

import functools
import itertools
import random

import networkx as nx
import pytest
from networkx.generators.atlas import graph_atlas_g

from cliquetrees import Graph, build_lattice
from cliquetrees.generators import random_chordal_graph

ATLAS_MAX_VERTICES = 6
RANDOM_CORPUS_SIZE = 200
RANDOM_CORPUS_MAX_VERTICES = 8


def from_networkx(h: nx.Graph) -> Graph:
    nodes = sorted(h.nodes())
    index = {v: i for i, v in enumerate(nodes)}
    return Graph(len(nodes), [(index[a], index[b]) for a, b in h.edges()])


@functools.cache
def atlas_chordal_graphs() -> tuple[Graph, ...]:
    """Every connected chordal graph on 1..6 vertices, up to isomorphism."""
    return tuple(
        from_networkx(h)
        for h in graph_atlas_g()
        if 1 <= h.number_of_nodes() <= ATLAS_MAX_VERTICES and nx.is_connected(h) and nx.is_chordal(h)
    )


@functools.cache
def random_chordal_corpus(count: int = RANDOM_CORPUS_SIZE, max_vertices: int = RANDOM_CORPUS_MAX_VERTICES, seed: int = 20240) -> tuple[Graph, ...]:
    rng = random.Random(seed)
    graphs = []
    for _ in range(count):
        # the atlas already covers every small graph, so lean towards larger ones
        n = rng.randint(5, max_vertices)
        graphs.append(random_chordal_graph(n, rng, density=rng.uniform(0.0, 0.9)))
    return tuple(graphs)


@functools.cache
def full_corpus() -> tuple[Graph, ...]:
    return atlas_chordal_graphs() + random_chordal_corpus()


def brute_spanning_trees(n: int, edges) -> list[frozenset]:
    """All (n-1)-subsets of ``edges`` that connect ``n`` vertices.

    ``edges`` is a sequence of ``(u, v)`` pairs; the subsets are returned as
    frozensets of those pairs.
    """
    if n == 1:
        return [frozenset()]
    found = []
    for subset in itertools.combinations(edges, n - 1):
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        acyclic = True
        for u, v in subset:
            ru, rv = find(u), find(v)
            if ru == rv:
                acyclic = False
                break
            parent[ru] = rv
        if acyclic:
            found.append(frozenset(subset))
    return found


def clique_graph_spanning_trees(lattice) -> list[frozenset]:
    cg = lattice.clique_graph
    return brute_spanning_trees(cg.size, cg.edges)


@pytest.fixture(scope="session")
def corpus() -> tuple[Graph, ...]:
    return full_corpus()


@pytest.fixture(scope="session")
def corpus_lattices(corpus):
    return [build_lattice(g) for g in corpus]


# One summary line per acceptance criterion, printed after the run.

_acceptance: dict[str, tuple[str, str]] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    outcome, detail = _acceptance.get(name, ("passed", ""))
    if outcome == "passed":
        outcome = report.outcome
    detail = dict(report.user_properties).get("detail", detail)
    _acceptance[name] = (outcome, detail)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_acceptance, key=lambda s: int(s.split("_")[2])):
        outcome, detail = _acceptance[name]
        label = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{label}  {name}" + (f"  ({detail})" if detail else ""))
