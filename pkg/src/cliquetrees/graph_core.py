"""Finite graphs, labelled multigraphs, chordality recognition and contraction.

Vertices are dense integer ids ``0..n-1``. A :class:`Graph` optionally keeps
the original vertex names so that parsed input can be written back out.
"""
from __future__ import annotations

import itertools
import warnings
from collections import deque
from dataclasses import dataclass
from typing import Hashable, Iterable, Sequence

from .errors import DisconnectedGraphError, GraphFormatError, NotChordalError

Edge = tuple[int, int]


class Graph:
    """Simple undirected graph on ``0..n-1``; immutable after construction."""

    __slots__ = ("n", "adj", "names", "_index")

    def __init__(self, n: int, edges: Iterable[Edge] = (), names: Sequence[str] | None = None):
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self.adj: tuple[frozenset[int], ...] = tuple(frozenset(a) for a in adj)
        if names is None:
            names = [str(v) for v in range(n)]
        if len(names) != n:
            raise ValueError("names must have one entry per vertex")
        self.names: tuple[str, ...] = tuple(names)
        self._index = {name: v for v, name in enumerate(self.names)}

    @classmethod
    def from_named_edges(cls, pairs: Iterable[tuple[str, str]]) -> "Graph":
        """Build a graph from name pairs, assigning ids by first appearance."""
        index: dict[str, int] = {}
        edges = []
        for a, b in pairs:
            for name in (a, b):
                if name not in index:
                    index[name] = len(index)
            edges.append((index[a], index[b]))
        return cls(len(index), edges, names=list(index))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges())})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> list[Edge]:
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def num_edges(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v]

    def index(self, name: str) -> int:
        return self._index[name]

    def name(self, v: int) -> str:
        return self.names[v]

    def is_complete_set(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        return all(self.has_edge(u, v) for u, v in itertools.combinations(vs, 2))

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph, relabelled to ``0..k-1``.

        Returns the subgraph and the list mapping new ids to old ids.
        """
        keep = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(keep)}
        edges = [(pos[u], pos[v]) for u in keep for v in self.adj[u] if v in pos and u < v]
        return Graph(len(keep), edges, names=[self.names[v] for v in keep]), keep

    def components(self, within: Iterable[int] | None = None) -> list[list[int]]:
        """Connected components of the subgraph induced by ``within`` (default: all)."""
        allowed = set(range(self.n)) if within is None else set(within)
        seen: set[int] = set()
        comps = []
        for s in sorted(allowed):
            if s in seen:
                continue
            comp = [s]
            seen.add(s)
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in self.adj[u]:
                    if w in allowed and w not in seen:
                        seen.add(w)
                        comp.append(w)
                        queue.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.components()) == 1

    def distance_exceeds_one(self, a: Iterable[int], b: Iterable[int]) -> bool:
        """True if the vertex sets are disjoint and no edge joins them."""
        sa, sb = set(a), set(b)
        if sa & sb:
            return False
        return all(not (self.adj[u] & sb) for u in sa)


def require_connected(g: Graph) -> None:
    if not g.is_connected():
        raise DisconnectedGraphError(
            f"graph with {g.n} vertices has {len(g.components())} components; "
            "a connected graph is required"
        )


def parse_graph(text: str) -> Graph:
    """Parse the whitespace edge-list format.

    One edge per line as two vertex names, ``#`` starts a comment and blank
    lines are skipped. Loops raise :class:`GraphFormatError`; repeated edges
    emit a warning and are kept once.

    >>> parse_graph("a b\\nb c").edges()
    [(0, 1), (1, 2)]
    """
    pairs: list[tuple[str, str]] = []
    seen: set[frozenset[str]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise GraphFormatError(f"line {lineno}: expected two vertex names, got {len(tokens)} tokens")
        a, b = tokens
        if a == b:
            raise GraphFormatError(f"line {lineno}: loop edge at {a!r}")
        key = frozenset((a, b))
        if key in seen:
            warnings.warn(f"line {lineno}: duplicate edge {a} {b} ignored", stacklevel=2)
            continue
        seen.add(key)
        pairs.append((a, b))
    return Graph.from_named_edges(pairs)


def format_graph(g: Graph) -> str:
    return "".join(f"{g.names[u]} {g.names[v]}\n" for u, v in g.edges())


# -- chordality -------------------------------------------------------------


@dataclass(frozen=True)
class ChordalityVerdict:
    """Outcome of :func:`is_chordal`.

    Exactly one of ``peo`` (a perfect elimination ordering) and ``witness``
    (a chordless cycle of length at least four) is set.
    """

    chordal: bool
    peo: tuple[int, ...] | None = None
    witness: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.chordal


def maximum_cardinality_search(g: Graph) -> list[int]:
    """Visit order of maximum cardinality search, ties to the lowest id."""
    weight = [0] * g.n
    numbered = [False] * g.n
    order = []
    for _ in range(g.n):
        best = -1
        for v in range(g.n):
            if not numbered[v] and (best < 0 or weight[v] > weight[best]):
                best = v
        numbered[best] = True
        order.append(best)
        for w in g.adj[best]:
            if not numbered[w]:
                weight[w] += 1
    return order


def is_peo(g: Graph, order: Sequence[int]) -> bool:
    """Check that the later neighbours of every vertex form a complete set."""
    if sorted(order) != list(range(g.n)):
        return False
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        later = [w for w in g.adj[v] if pos[w] > pos[v]]
        if not g.is_complete_set(later):
            return False
    return True


def _shortest_path(g: Graph, src: int, dst: int, allowed: set[int]) -> list[int] | None:
    parent = {src: src}
    queue = deque([src])
    while queue:
        u = queue.popleft()
        if u == dst:
            path = [u]
            while path[-1] != src:
                path.append(parent[path[-1]])
            return path[::-1]
        for w in sorted(g.adj[u]):
            if w in allowed and w not in parent:
                parent[w] = u
                queue.append(w)
    return None


def find_chordless_cycle(g: Graph) -> tuple[int, ...] | None:
    """Return an induced cycle of length >= 4, or None if the graph is chordal.

    Every such cycle passes through some vertex ``v`` with two non-adjacent
    cycle neighbours ``x, y`` while the remaining cycle avoids the closed
    neighbourhood of ``v``; a shortest ``x``-``y`` path outside it closes an
    induced cycle.
    """
    for v in range(g.n):
        nbrs = sorted(g.adj[v])
        for x, y in itertools.combinations(nbrs, 2):
            if g.has_edge(x, y):
                continue
            allowed = set(range(g.n)) - g.adj[v] - {v}
            allowed |= {x, y}
            path = _shortest_path(g, x, y, allowed)
            if path is not None:
                return (v, *path)
    return None


def is_chordal(g: Graph) -> ChordalityVerdict:
    """Recognise a connected chordal graph.

    On success the verdict carries the perfect elimination ordering obtained
    by reversing maximum cardinality search; otherwise a chordless cycle.
    """
    require_connected(g)
    peo = maximum_cardinality_search(g)[::-1]
    if is_peo(g, peo):
        return ChordalityVerdict(True, peo=tuple(peo))
    cycle = find_chordless_cycle(g)
    assert cycle is not None, "MCS order failed but no chordless cycle found"
    return ChordalityVerdict(False, witness=cycle)


def require_chordal(g: Graph) -> tuple[int, ...]:
    """Return a perfect elimination ordering or raise :class:`NotChordalError`."""
    verdict = is_chordal(g)
    if not verdict:
        raise NotChordalError(verdict.witness)
    return verdict.peo


def is_induced_cycle(g: Graph, cycle: Sequence[int]) -> bool:
    k = len(cycle)
    if k < 3 or len(set(cycle)) != k:
        return False
    for i in range(k):
        for j in range(i + 1, k):
            consecutive = j == i + 1 or (i == 0 and j == k - 1)
            if g.has_edge(cycle[i], cycle[j]) != consecutive:
                return False
    return True


def find_two_chord(g: Graph, cycle: Sequence[int]) -> Edge:
    """Return a chord joining two vertices at distance two along ``cycle``.

    Every cycle of length at least four in a chordal graph has one.
    """
    k = len(cycle)
    if k < 4:
        raise ValueError(f"cycle has length {k}; a 2-chord needs length >= 4")
    if len(set(cycle)) != k:
        raise ValueError("cycle repeats a vertex")
    for i in range(k):
        if not g.has_edge(cycle[i], cycle[(i + 1) % k]):
            raise ValueError(f"{cycle[i]} and {cycle[(i + 1) % k]} are consecutive but not adjacent")
    require_chordal(g)
    for i in range(k):
        a, b = cycle[i], cycle[(i + 2) % k]
        if g.has_edge(a, b):
            return (a, b)
    raise AssertionError("chordal graph cycle without a 2-chord")


# -- multigraphs ------------------------------------------------------------


class Multigraph:
    """Multigraph on ``0..n-1`` with labelled edges; loops and parallels allowed.

    Edges are ``(u, v, label)`` triples. Labels must be unique; edges given as
    plain pairs receive their position in the edge list as label.
    """

    __slots__ = ("n", "edges")

    def __init__(self, n: int, edges: Iterable[tuple[int, int] | tuple[int, int, Hashable]] = ()):
        triples = []
        for i, e in enumerate(edges):
            if len(e) == 2:
                u, v = e
                label: Hashable = i
            else:
                u, v, label = e
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            triples.append((u, v, label))
        labels = [lab for _, _, lab in triples]
        if len(set(labels)) != len(labels):
            raise ValueError("multigraph edge labels must be unique")
        self.n = n
        self.edges: tuple[tuple[int, int, Hashable], ...] = tuple(triples)

    def __repr__(self) -> str:
        return f"Multigraph(n={self.n}, edges={list(self.edges)})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Multigraph) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    @classmethod
    def from_graph(cls, g: Graph) -> "Multigraph":
        return cls(g.n, [(u, v, (u, v)) for u, v in g.edges()])

    def loops(self) -> list[tuple[int, int, Hashable]]:
        return [e for e in self.edges if e[0] == e[1]]

    def proper_edges(self) -> list[tuple[int, int, Hashable]]:
        return [e for e in self.edges if e[0] != e[1]]

    def is_connected(self) -> bool:
        if self.n == 0:
            return False
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        parts = self.n
        for u, v, _ in self.edges:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
                parts -= 1
        return parts == 1

    def is_complete(self) -> bool:
        """Every pair of distinct vertices joined by at least one edge."""
        pairs = {frozenset((u, v)) for u, v, _ in self.edges if u != v}
        return len(pairs) == self.n * (self.n - 1) // 2


def contract(g: Multigraph, partition: Sequence[Iterable[int]]) -> Multigraph:
    """Contract each block of ``partition`` to a single vertex.

    Vertices not covered become singleton blocks. New vertex ids follow the
    smallest original id of each block, so a partition into singletons is the
    identity. Every edge keeps its label; edges inside a block become loops.
    """
    owner: dict[int, int] = {}
    blocks: list[list[int]] = []
    for block in partition:
        members = sorted(set(block))
        for v in members:
            if not 0 <= v < g.n:
                raise ValueError(f"vertex {v} outside 0..{g.n - 1}")
            if v in owner:
                raise ValueError(f"vertex {v} appears in more than one block")
            owner[v] = len(blocks)
        if members:
            blocks.append(members)
    for v in range(g.n):
        if v not in owner:
            owner[v] = len(blocks)
            blocks.append([v])
    rank = sorted(range(len(blocks)), key=lambda b: blocks[b][0])
    new_id = {b: i for i, b in enumerate(rank)}
    return Multigraph(
        len(blocks),
        [(new_id[owner[u]], new_id[owner[v]], label) for u, v, label in g.edges],
    )


def is_spanning_tree(n: int, edges: Iterable[Edge]) -> bool:
    """True if ``edges`` (pairs on ``0..n-1``) form a spanning tree."""
    edges = list(edges)
    if n == 0 or len(edges) != n - 1:
        return False
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True
