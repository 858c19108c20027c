"""Small graph families and a random connected chordal graph generator."""
from __future__ import annotations

import random

from .graph_core import Graph


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(leaves: int) -> Graph:
    """Centre 0 joined to leaves ``1..leaves``."""
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def random_chordal_graph(n: int, rng: random.Random | int | None = None, density: float = 0.5) -> Graph:
    """Random connected chordal graph on ``n`` vertices.

    Vertex ``k`` is attached to a random non-empty complete subset of the
    vertices ``0..k-1``, so reversing the insertion order is a perfect
    elimination ordering. ``density`` is the chance of growing the subset by
    one more common neighbour.
    """
    if not isinstance(rng, random.Random):
        rng = random.Random(rng)
    edges = []
    adj: list[set[int]] = [set() for _ in range(n)]
    for k in range(1, n):
        start = rng.randrange(k)
        chosen = {start}
        candidates = set(adj[start])
        while candidates and rng.random() < density:
            w = rng.choice(sorted(candidates))
            chosen.add(w)
            candidates &= adj[w]
        for w in chosen:
            edges.append((w, k))
            adj[w].add(k)
            adj[k].add(w)
    return Graph(n, edges)
