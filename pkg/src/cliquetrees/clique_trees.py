"""Clique trees: counting, the per-family bijection, streaming enumeration
and the four classical characterisations used as validators.

A clique tree is represented as a ``frozenset`` of clique-graph edges
``(i, j)`` with ``i < j``. A family choice maps every lattice family to a
spanning tree of its ``B_F``, given as the set of chosen clique-graph edges.
"""
from __future__ import annotations

from collections import deque
from typing import Hashable, Iterable, Iterator, Mapping, Sequence

from .clique_lattice import (
    CliqueEdge,
    CliqueFamily,
    CliqueGraph,
    FamilyLattice,
    build_lattice,
    enumerate_families,
)
from .errors import NotACliqueTreeError, Verdict
from .graph_core import Graph, Multigraph, is_spanning_tree

CliqueTree = frozenset  # frozenset[CliqueEdge]
FamilyChoice = dict  # dict[CliqueFamily, frozenset[CliqueEdge]]


def _canon(edges: Iterable[Sequence[int]]) -> frozenset[CliqueEdge]:
    return frozenset((min(i, j), max(i, j)) for i, j in edges)


# -- spanning trees of small multigraphs ------------------------------------


def spanning_trees_stream(b: Multigraph) -> Iterator[frozenset[Hashable]]:
    """Yield every spanning tree of ``b`` once, as a frozenset of edge labels.

    Backtracking over the non-loop edges in list order: each edge is first
    taken (when it joins two components) and then skipped. Loops never appear.
    """
    if b.n == 0 or not b.is_connected():
        raise ValueError("multigraph is empty or disconnected; it has no spanning tree")
    edges = b.proper_edges()
    need = b.n - 1
    parent = list(range(b.n))

    def find(x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    chosen: list[Hashable] = []

    def walk(k: int) -> Iterator[frozenset[Hashable]]:
        if len(chosen) == need:
            yield frozenset(chosen)
            return
        if len(edges) - k < need - len(chosen):
            return
        u, v, label = edges[k]
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            chosen.append(label)
            yield from walk(k + 1)
            chosen.pop()
            parent[ru] = ru
        yield from walk(k + 1)

    yield from walk(0)


def _bareiss_determinant(m: list[list[int]]) -> int:
    """Exact integer determinant by fraction-free elimination."""
    n = len(m)
    if n == 0:
        return 1
    a = [row[:] for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def count_spanning_trees(b: Multigraph) -> int:
    """Number of spanning trees via the Laplacian cofactor (exact integers).

    Loops are ignored; parallel edges count separately. A disconnected or
    empty multigraph has 0 spanning trees.
    """
    if b.n == 0:
        return 0
    lap = [[0] * b.n for _ in range(b.n)]
    for u, v, _ in b.edges:
        if u == v:
            continue
        lap[u][u] += 1
        lap[v][v] += 1
        lap[u][v] -= 1
        lap[v][u] -= 1
    minor = [row[1:] for row in lap[1:]]
    return _bareiss_determinant(minor)


# -- counting and the bijection ---------------------------------------------


def _lattice(x: Graph | CliqueGraph | FamilyLattice) -> FamilyLattice:
    if isinstance(x, FamilyLattice):
        return x
    if isinstance(x, CliqueGraph):
        return enumerate_families(x)
    return build_lattice(x)


def count_clique_trees(g: Graph | CliqueGraph | FamilyLattice) -> int:
    """Product over all clique families of the spanning-tree counts of ``B_F``."""
    lattice = _lattice(g)
    total = 1
    for i in range(len(lattice)):
        total *= count_spanning_trees(lattice.graphs(i).b_multigraph)
    return total


def assemble(lattice: FamilyLattice, choice: Mapping[CliqueFamily, Iterable[CliqueEdge]]) -> CliqueTree:
    """Union of the per-family spanning trees: a clique tree.

    ``choice`` must cover every family with a spanning tree of its ``B_F``
    (the empty set when ``B_F`` has one vertex); ValueError otherwise.
    """
    if set(choice) != set(lattice.families):
        raise ValueError("choice must assign exactly one tree to every family of the lattice")
    edges: set[CliqueEdge] = set()
    for f, chosen in choice.items():
        chosen = _canon(chosen)
        b = lattice.graphs(f).b_multigraph
        by_label = {label: (u, v) for u, v, label in b.edges}
        if not chosen <= by_label.keys():
            raise ValueError(f"family {f.members}: chosen edges are not edges of B_F")
        if not is_spanning_tree(b.n, (by_label[e] for e in chosen)):
            raise ValueError(f"family {f.members}: chosen edges do not span B_F as a tree")
        edges |= chosen
    return frozenset(edges)


def decompose(lattice: FamilyLattice, tree: Iterable[CliqueEdge]) -> FamilyChoice:
    """Split a clique tree into its per-family spanning trees of ``B_F``.

    Raises :class:`NotACliqueTreeError` naming the first family whose part is
    not a spanning tree of ``B_F``.
    """
    cg = lattice.clique_graph
    tree = _canon(tree)
    stray = sorted(e for e in tree if e not in cg.labels)
    if stray:
        raise NotACliqueTreeError(Verdict.failed("edge not in the clique graph", edge=stray[0]))
    parts: dict[int, set[CliqueEdge]] = {i: set() for i in range(len(lattice))}
    for e in tree:
        parts[lattice.index(lattice.family_of(cg.labels[e]))].add(e)
    choice = {}
    for i, f in enumerate(lattice.families):
        b = lattice.graphs(i).b_multigraph
        by_label = {label: (u, v) for u, v, label in b.edges}
        if not is_spanning_tree(b.n, (by_label[e] for e in parts[i])):
            raise NotACliqueTreeError(
                Verdict.failed(
                    f"edges of family {list(f.members)} do not form a spanning tree of B_F",
                    family=list(f.members),
                    edges=sorted(parts[i]),
                )
            )
        choice[f] = frozenset(parts[i])
    return choice


class CliqueTreeEnumerator:
    """Stream all clique trees of a lattice.

    The per-family spanning-tree lists are built once. Between emissions the
    only mutable state is one choice index per family; trees are produced in
    lexicographic order of the index vector (last family varies fastest).
    ``indices`` becomes ``None`` once the stream is exhausted.
    """

    __slots__ = ("lattice", "choices", "indices")

    def __init__(self, lattice: FamilyLattice):
        self.lattice = lattice
        self.choices: tuple[tuple[frozenset[CliqueEdge], ...], ...] = tuple(
            tuple(spanning_trees_stream(lattice.graphs(i).b_multigraph)) for i in range(len(lattice))
        )
        self.indices: list[int] | None = [0] * len(lattice)

    def __iter__(self) -> "CliqueTreeEnumerator":
        return self

    def __next__(self) -> CliqueTree:
        if self.indices is None:
            raise StopIteration
        tree = frozenset().union(*(opts[k] for opts, k in zip(self.choices, self.indices)))
        self._advance()
        return tree

    def _advance(self) -> None:
        for pos in range(len(self.indices) - 1, -1, -1):
            self.indices[pos] += 1
            if self.indices[pos] < len(self.choices[pos]):
                return
            self.indices[pos] = 0
        self.indices = None

    def state(self) -> dict:
        """Snapshot of the retained state, for introspection."""
        return {
            "families": len(self.lattice),
            "indices": None if self.indices is None else tuple(self.indices),
            "choice_counts": tuple(len(opts) for opts in self.choices),
        }


def enumerate_clique_trees(g: Graph | CliqueGraph | FamilyLattice) -> CliqueTreeEnumerator:
    return CliqueTreeEnumerator(_lattice(g))


def first_clique_tree(lattice: FamilyLattice) -> CliqueTree:
    """The first tree of the enumeration, without listing all local choices."""
    return frozenset().union(
        *(next(spanning_trees_stream(lattice.graphs(i).b_multigraph)) for i in range(len(lattice)))
    )


# -- validators -------------------------------------------------------------


def _spanning_tree_verdict(cg: CliqueGraph, tree: frozenset[CliqueEdge]) -> Verdict | None:
    stray = sorted(e for e in tree if e not in cg.labels)
    if stray:
        return Verdict.failed("edge not in the clique graph", edge=stray[0])
    if not is_spanning_tree(cg.size, tree):
        kind = "has a cycle" if len(tree) >= cg.size else "is disconnected"
        return Verdict.failed(f"not a spanning tree of the clique graph: it {kind}", edges=len(tree))
    return None


def _adjacency(n: int, tree: Iterable[CliqueEdge]) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(n)]
    for i, j in tree:
        adj[i].append(j)
        adj[j].append(i)
    for a in adj:
        a.sort()
    return adj


def _as_clique_graph(x: Graph | CliqueGraph) -> CliqueGraph:
    if isinstance(x, CliqueGraph):
        return x
    from .clique_lattice import build_clique_graph

    return build_clique_graph(x)


def validate_definition(g: Graph | CliqueGraph, tree: Iterable[CliqueEdge]) -> Verdict:
    """Spanning tree whose restriction to the cliques containing ``v`` is a
    tree, for every vertex ``v``."""
    cg = _as_clique_graph(g)
    tree = _canon(tree)
    bad = _spanning_tree_verdict(cg, tree)
    if bad is not None:
        return bad
    for v in range(cg.graph.n):
        fam = cg.cliques_of_vertex[v]
        local = {k: i for i, k in enumerate(sorted(fam))}
        inside = [(local[i], local[j]) for i, j in tree if i in fam and j in fam]
        if not is_spanning_tree(len(local), inside):
            return Verdict.failed(
                f"cliques containing vertex {cg.graph.names[v]} do not induce a subtree",
                vertex=v,
                cliques=sorted(fam),
                induced_edges=sorted((i, j) for i, j in tree if i in fam and j in fam),
            )
    return Verdict.passed()


def tree_path(adj: Sequence[Sequence[int]], a: int, b: int) -> list[int]:
    parent = {a: a}
    queue = deque([a])
    while queue:
        u = queue.popleft()
        if u == b:
            break
        for w in adj[u]:
            if w not in parent:
                parent[w] = u
                queue.append(w)
    path = [b]
    while path[-1] != a:
        path.append(parent[path[-1]])
    return path[::-1]


def validate_cip(g: Graph | CliqueGraph, tree: Iterable[CliqueEdge]) -> Verdict:
    """Clique intersection property: ``K1 ∩ K2 ⊆ K3`` for every ``K3`` on the
    tree path between ``K1`` and ``K2``."""
    cg = _as_clique_graph(g)
    tree = _canon(tree)
    bad = _spanning_tree_verdict(cg, tree)
    if bad is not None:
        return bad
    adj = _adjacency(cg.size, tree)
    sets = [frozenset(c) for c in cg.cliques]
    for a in range(cg.size):
        for b in range(a + 1, cg.size):
            common = sets[a] & sets[b]
            if not common:
                continue
            for c in tree_path(adj, a, b)[1:-1]:
                if not common <= sets[c]:
                    return Verdict.failed(
                        f"intersection of cliques {a} and {b} is not contained in clique {c} on their path",
                        triple=(a, b, c),
                        missing=sorted(common - sets[c]),
                    )
    return Verdict.passed()


def rip_ordering(tree: Iterable[CliqueEdge], root: int, size: int) -> list[int]:
    """Breadth-first enumeration of the cliques from ``root``, children by index."""
    tree = _canon(tree)
    if not is_spanning_tree(size, tree):
        raise ValueError("rip_ordering needs a spanning tree")
    adj = _adjacency(size, tree)
    order = [root]
    seen = {root}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                order.append(w)
                queue.append(w)
    return order


def validate_rip(
    g: Graph | CliqueGraph,
    order: Sequence[int],
    tree: Iterable[CliqueEdge] | None = None,
) -> Verdict:
    """Running intersection property of a clique enumeration.

    For each position ``n >= 1`` some earlier clique must contain
    ``K_n ∩ (K_0 ∪ ... ∪ K_{n-1})``. With ``tree`` given, the witness must
    additionally be a tree neighbour, so that the witness pairs realise the
    tree. The verdict's ``parents`` lists each position's witness position.
    """
    cg = _as_clique_graph(g)
    if sorted(order) != list(range(cg.size)):
        return Verdict.failed("order is not an enumeration of all cliques")
    tree_edges = None if tree is None else _canon(tree)
    sets = [frozenset(cg.cliques[k]) for k in order]
    seen: set[int] = set()
    parents: list[int | None] = [None]
    for n in range(len(order)):
        if n:
            need = sets[n] & seen
            found = None
            for i in range(n):
                if tree_edges is not None and (min(order[i], order[n]), max(order[i], order[n])) not in tree_edges:
                    continue
                if need <= sets[i]:
                    found = i
                    break
            if found is None:
                return Verdict.failed(
                    f"position {n}: intersection with earlier cliques fits in no earlier clique",
                    position=n,
                    clique=order[n],
                    intersection=sorted(need),
                )
            parents.append(found)
        seen |= sets[n]
    if tree_edges is not None:
        realised = _canon((order[n], order[i]) for n, i in enumerate(parents) if i is not None)
        if realised != tree_edges:
            return Verdict.failed("witness pairs do not realise the tree", parents=parents)
    return Verdict.passed(parents=parents)


def has_rip(g: Graph | CliqueGraph, tree: Iterable[CliqueEdge]) -> Verdict:
    """Some root's breadth-first ordering passes :func:`validate_rip` for ``tree``."""
    cg = _as_clique_graph(g)
    tree = _canon(tree)
    bad = _spanning_tree_verdict(cg, tree)
    if bad is not None:
        return bad
    last = None
    for root in range(cg.size):
        last = validate_rip(cg, rip_ordering(tree, root, cg.size), tree)
        if last:
            return Verdict.passed(root=root, **last.witness)
    return Verdict.failed("no root yields a running intersection ordering", **last.witness)


def _max_weight_spanning_tree(cg: CliqueGraph, members: Sequence[int]) -> int | None:
    inside = set(members)
    local = {k: i for i, k in enumerate(members)}
    edges = sorted(
        ((len(cg.labels[e]), e) for e in cg.edges if e[0] in inside and e[1] in inside),
        key=lambda t: -t[0],
    )
    parent = list(range(len(members)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    total, used = 0, 0
    for w, (i, j) in edges:
        ri, rj = find(local[i]), find(local[j])
        if ri != rj:
            parent[ri] = rj
            total += w
            used += 1
    return total if used == len(members) - 1 else None


def validate_local_max_weight(g: Graph | CliqueGraph | FamilyLattice, tree: Iterable[CliqueEdge]) -> Verdict:
    """For every clique family ``F``, the tree restricted to ``F`` is a maximum
    weight spanning tree of the clique graph on ``F`` (weight ``|K1 ∩ K2|``)."""
    lattice = g if isinstance(g, FamilyLattice) else enumerate_families(_as_clique_graph(g))
    cg = lattice.clique_graph
    tree = _canon(tree)
    bad = _spanning_tree_verdict(cg, tree)
    if bad is not None:
        return bad
    for f in reversed(lattice.families):
        inside = set(f.members)
        local = {k: i for i, k in enumerate(f.members)}
        part = [(i, j) for i, j in tree if i in inside and j in inside]
        best = _max_weight_spanning_tree(cg, f.members)
        weight = sum(len(cg.labels[e]) for e in part)
        spans = is_spanning_tree(len(f.members), ((local[i], local[j]) for i, j in part))
        if not spans or weight != best:
            return Verdict.failed(
                f"family {list(f.members)}: restricted weight {weight} vs maximum {best}",
                family=list(f.members),
                weight=weight,
                maximum=best,
                spanning=spans,
            )
    return Verdict.passed()


def validate_all(lattice: FamilyLattice, tree: Iterable[CliqueEdge]) -> dict[str, Verdict]:
    cg = lattice.clique_graph
    tree = _canon(tree)
    return {
        "def": validate_definition(cg, tree),
        "cip": validate_cip(cg, tree),
        "rip": has_rip(cg, tree),
        "maxw": validate_local_max_weight(lattice, tree),
    }


# -- serialisation ------------------------------------------------------------


def tree_to_json(cg: CliqueGraph, tree: Iterable[CliqueEdge]) -> list[list[list[str]]]:
    """Edges as pairs of clique member-name lists, in sorted edge order."""
    return [[cg.clique_names(i), cg.clique_names(j)] for i, j in sorted(_canon(tree))]


def tree_from_json(cg: CliqueGraph, edges: Sequence[Sequence[Sequence[str]]]) -> CliqueTree:
    index = {frozenset(cg.clique_names(k)): k for k in range(cg.size)}
    out = []
    for pair in edges:
        if len(pair) != 2:
            raise ValueError(f"tree edge must name two cliques: {pair!r}")
        try:
            i, j = (index[frozenset(map(str, c))] for c in pair)
        except KeyError as exc:
            raise ValueError(f"unknown clique in tree edge {pair!r}") from exc
        out.append((i, j))
    return _canon(out)


def choice_to_json(lattice: FamilyLattice, choice: Mapping[CliqueFamily, Iterable[CliqueEdge]]) -> dict[str, list]:
    cg = lattice.clique_graph
    return {str(lattice.index(f)): tree_to_json(cg, edges) for f, edges in sorted(choice.items())}


def choice_from_json(lattice: FamilyLattice, data: Mapping[str, Sequence]) -> FamilyChoice:
    cg = lattice.clique_graph
    return {lattice.families[int(k)]: tree_from_json(cg, v) for k, v in data.items()}
