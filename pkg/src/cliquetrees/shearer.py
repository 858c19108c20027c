"""Shearer's law on chordal graphs via a block factor of i.i.d. bits.

Given a left-handed tree order on the vertices and a coupling vector ``c``,
the field ``X_v = Y_v * prod_{w in N^-(v)} (1 - Y_w)`` built from independent
``Y_v ~ Bernoulli(c_v)`` is 1-dependent, has independent 1-sets and marginals
``p_v = c_v * prod_{w in N^-(v)} (1 - c_w)``, where ``N^-(v)`` are the
neighbours of ``v`` below it in the order.

Arithmetic is generic: pass :class:`fractions.Fraction` values for exact
results and floats for fast approximate ones.
"""
from __future__ import annotations

import enum
import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable, Mapping, NamedTuple, Sequence

import numpy as np

from .clique_lattice import CliqueGraph, FamilyLattice, build_clique_graph, enumerate_families
from .clique_trees import first_clique_tree, validate_definition
from .errors import GraphFormatError, NotACliqueTreeError, NotInRegion, Verdict
from .graph_core import Graph, require_chordal

ISP_MAX_VERTICES = 20
EXACT_LAW_MAX_VERTICES = 16


# -- tree orders --------------------------------------------------------------


class TreeOrder:
    """Strict partial order on the vertices of ``graph``.

    ``below[v]`` is the set of vertices strictly below ``v``.
    ``linear_extension`` lists all vertices so that lower ones come first.
    ``root_clique`` and ``anchor`` are set when the order comes from a rooted
    clique tree (``anchor[v]`` is the clique of ``v`` closest to the root).
    """

    __slots__ = ("graph", "below", "linear_extension", "root_clique", "anchor")

    def __init__(
        self,
        graph: Graph,
        below: Sequence[Iterable[int]],
        linear_extension: Sequence[int] | None = None,
        root_clique: int | None = None,
        anchor: Sequence[int] | None = None,
    ):
        self.graph = graph
        self.below: tuple[frozenset[int], ...] = tuple(frozenset(b) for b in below)
        if len(self.below) != graph.n:
            raise ValueError("order needs one lower set per vertex")
        if linear_extension is None:
            linear_extension = _topological(self.below)
        self.linear_extension: tuple[int, ...] = tuple(linear_extension)
        self.root_clique = root_clique
        self.anchor = None if anchor is None else tuple(anchor)

    @classmethod
    def from_relation(cls, graph: Graph, pairs: Iterable[tuple[int, int]]) -> "TreeOrder":
        """Order generated by ``v < w`` for each pair (transitively closed)."""
        below = [set() for _ in range(graph.n)]
        for v, w in pairs:
            below[w].add(v)
        changed = True
        while changed:
            changed = False
            for w in range(graph.n):
                extra = set().union(*(below[v] for v in below[w])) - below[w] if below[w] else set()
                if extra:
                    below[w] |= extra
                    changed = True
        if any(w in below[w] for w in range(graph.n)):
            raise ValueError("relation has a cycle")
        return cls(graph, below)

    def __repr__(self) -> str:
        return f"TreeOrder(linear_extension={list(self.linear_extension)})"

    def precedes(self, v: int, w: int) -> bool:
        """``v ≼ w``."""
        return v == w or v in self.below[w]

    def strictly_precedes(self, v: int, w: int) -> bool:
        return v in self.below[w]

    def comparable(self, v: int, w: int) -> bool:
        return self.precedes(v, w) or self.precedes(w, v)

    def lesser_neighbours(self, v: int) -> frozenset[int]:
        return self.below[v] & self.graph.adj[v]

    def downward_set(self, v: int) -> frozenset[int]:
        return self.below[v] | {v}

    def max_elements(self, vertices: Iterable[int]) -> frozenset[int]:
        ws = set(vertices)
        return frozenset(v for v in ws if not any(v in self.below[w] for w in ws))

    def lesser_boundary(self, vertices: Iterable[int]) -> frozenset[int]:
        ws = set(vertices)
        out: set[int] = set()
        for v in ws:
            out |= self.lesser_neighbours(v)
        return frozenset(out - ws)


def _topological(below: Sequence[frozenset[int]]) -> list[int]:
    n = len(below)
    placed: list[int] = []
    done: set[int] = set()
    while len(placed) < n:
        ready = [v for v in range(n) if v not in done and below[v] <= done]
        if not ready:
            raise ValueError("relation has a cycle")
        placed.append(ready[0])
        done.add(ready[0])
    return placed


def build_tree_order(
    g: Graph | CliqueGraph,
    tree: Iterable[tuple[int, int]],
    root: int = 0,
    tie_break: Sequence[int] | None = None,
) -> TreeOrder:
    """Left-handed tree order from a rooted clique tree.

    Each vertex is anchored at the clique of its subtree nearest the root.
    ``v`` precedes ``w`` when ``anchor[w]`` is a proper ancestor of
    ``anchor[v]``; vertices with the same anchor are ordered by ``tie_break``
    (a sequence of all vertices, lowest first; default by id).
    """
    cg = g if isinstance(g, CliqueGraph) else build_clique_graph(g)
    graph = cg.graph
    tree = frozenset((min(i, j), max(i, j)) for i, j in tree)
    verdict = validate_definition(cg, tree)
    if not verdict:
        raise NotACliqueTreeError(verdict)
    if not 0 <= root < cg.size:
        raise ValueError(f"root clique {root} out of range 0..{cg.size - 1}")
    if tie_break is None:
        tie_break = range(graph.n)
    rank = {v: i for i, v in enumerate(tie_break)}
    if sorted(rank) != list(range(graph.n)):
        raise ValueError("tie_break must list every vertex exactly once")

    adj: list[list[int]] = [[] for _ in range(cg.size)]
    for i, j in tree:
        adj[i].append(j)
        adj[j].append(i)
    depth = {root: 0}
    parent = {root: None}
    stack = [root]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in depth:
                depth[w] = depth[u] + 1
                parent[w] = u
                stack.append(w)
    ancestors = {}
    for k in range(cg.size):
        chain, x = set(), k
        while x is not None:
            chain.add(x)
            x = parent[x]
        ancestors[k] = chain

    anchor = [min(cg.cliques_of_vertex[v], key=lambda k: depth[k]) for v in range(graph.n)]
    below = []
    for w in range(graph.n):
        xw = anchor[w]
        below.append(
            {
                v
                for v in range(graph.n)
                if v != w
                and xw in ancestors[anchor[v]]
                and (anchor[v] != xw or rank[v] < rank[w])
            }
        )
    linear = sorted(range(graph.n), key=lambda v: (-depth[anchor[v]], rank[v]))
    return TreeOrder(graph, below, linear, root_clique=root, anchor=anchor)


def default_tree_order(g: Graph | FamilyLattice, root: int = 0) -> TreeOrder:
    """Tree order from the first enumerated clique tree rooted at ``root``."""
    lattice = g if isinstance(g, FamilyLattice) else enumerate_families(build_clique_graph(g))
    return build_tree_order(lattice.clique_graph, first_clique_tree(lattice), root)


def verify_tree_order(g: Graph, o: TreeOrder) -> Verdict:
    """Check partial order, tree-order law and left-handedness exhaustively."""
    n = g.n
    if o.graph.n != n:
        return Verdict.failed("order and graph have different vertex counts")
    for u in range(n):
        if u in o.below[u]:
            return Verdict.failed("relation is not irreflexive", triple=(u, u, u))
        for v in o.below[u]:
            if u in o.below[v]:
                return Verdict.failed("relation is not antisymmetric", triple=(u, v, u))
            for w in o.below[v]:
                if w not in o.below[u]:
                    return Verdict.failed("relation is not transitive", triple=(w, v, u))
    for w in range(n):
        above = [u for u in range(n) if o.precedes(w, u)]
        for u, v in itertools.combinations(above, 2):
            if not o.comparable(u, v):
                return Verdict.failed(
                    "common lower bound of incomparable vertices", triple=(w, u, v)
                )
    for u, v in g.edges():
        if not o.comparable(u, v):
            return Verdict.failed(f"edge {u}{v} joins incomparable vertices", edge=(u, v))
    for v in range(n):
        for w in o.lesser_neighbours(v):
            for u in o.below[v]:
                if w in o.below[u] and not g.has_edge(u, v):
                    return Verdict.failed(
                        "chain w < u < v with vw an edge but uv missing", triple=(w, u, v)
                    )
    return Verdict.passed()


# -- independent set polynomial ----------------------------------------------


def as_fraction(x: Any) -> Fraction:
    """Exact rational from an int, float, Fraction or string (``"0.25"``, ``"1/4"``)."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x.strip())
    return Fraction(x)


def _vector(g: Graph, values: Sequence | Mapping, exact: bool = False) -> list:
    if isinstance(values, Mapping):
        out = [values[v] for v in range(g.n)]
    else:
        out = list(values)
    if len(out) != g.n:
        raise ValueError(f"vector has {len(out)} entries for {g.n} vertices")
    return [as_fraction(x) for x in out] if exact else out


def isp(g: Graph, p: Sequence | Mapping, vertices: Iterable[int] | None = None, exact: bool = False):
    """Signed independent set polynomial of ``g[vertices]`` at ``p``.

    Sum over independent sets ``I`` of ``prod_{w in I} (-p_w)``, enumerated
    explicitly.
    """
    p = _vector(g, p, exact)
    ws = sorted(range(g.n) if vertices is None else set(vertices))
    if len(ws) > ISP_MAX_VERTICES:
        raise ValueError(f"{len(ws)} vertices exceeds the enumeration gate of {ISP_MAX_VERTICES}")
    total = Fraction(1) if exact else 1

    def walk(k: int, blocked: frozenset[int], weight) -> None:
        nonlocal total
        for i in range(k, len(ws)):
            v = ws[i]
            if v in blocked:
                continue
            term = -weight * p[v]
            total += term
            walk(i + 1, blocked | g.adj[v], term)

    walk(0, frozenset(), Fraction(1) if exact else 1)
    return total


def isp_table(g: Graph, p: Sequence | Mapping, exact: bool = False) -> list:
    """``isp(g[W], p)`` for every vertex bitmask ``W`` (bit ``v`` = vertex ``v``).

    Uses the deletion recursion ``Z(W) = Z(W - v) - p_v Z(W - N[v])``.
    """
    p = _vector(g, p, exact)
    if g.n > ISP_MAX_VERTICES:
        raise ValueError(f"{g.n} vertices exceeds the gate of {ISP_MAX_VERTICES}")
    closed = [(1 << v) | sum(1 << w for w in g.adj[v]) for v in range(g.n)]
    table = [Fraction(1) if exact else 1] * (1 << g.n)
    for mask in range(1, 1 << g.n):
        v = (mask & -mask).bit_length() - 1
        table[mask] = table[mask & ~(1 << v)] - p[v] * table[mask & ~closed[v]]
    return table


# -- correspondence between p and c -----------------------------------------


def _product(values, one):
    acc = one
    for x in values:
        acc = acc * x
    return acc


def c_from_p(o: TreeOrder, p: Sequence | Mapping, tol: float = 0) -> list:
    """Solve ``p_v = c_v * prod_{w in N^-(v)} (1 - c_w)`` for ``c``.

    Vertices are processed along the linear extension. A zero denominator
    with ``p_v = 0`` gives ``c_v = 0``. Raises :class:`NotInRegion` at the
    first vertex whose value leaves ``[-tol, 1 + tol]`` (values within the
    tolerance are clipped).
    """
    g = o.graph
    p = _vector(g, p)
    c: list = [None] * g.n
    for v in o.linear_extension:
        one = p[v] * 0 + 1
        denom = _product((1 - c[w] for w in o.lesser_neighbours(v)), one)
        if denom == 0:
            if p[v] != 0:
                raise NotInRegion(v, None)
            c[v] = p[v] * 0
            continue
        cv = p[v] / denom
        if cv < -tol or cv > 1 + tol:
            raise NotInRegion(v, cv)
        c[v] = min(max(cv, 0 * cv), one) if tol else cv
    return c


class Marginals(NamedTuple):
    p: list
    strict: bool


def p_from_c(o: TreeOrder, c: Sequence | Mapping) -> Marginals:
    """Marginals in equal correspondence with ``c``; ``strict`` if all ``c_v < 1``."""
    g = o.graph
    c = _vector(g, c)
    for v, cv in enumerate(c):
        if not 0 <= cv <= 1:
            raise ValueError(f"coupling value {cv} at vertex {v} outside [0, 1]")
    p = []
    for v in range(g.n):
        one = c[v] * 0 + 1
        p.append(c[v] * _product((1 - c[w] for w in o.lesser_neighbours(v)), one))
    return Marginals(p, all(cv < 1 for cv in c))


# -- block factor -------------------------------------------------------------


def _block_factor(o: TreeOrder, y: Sequence[int]) -> tuple[int, ...]:
    return tuple(
        int(y[v] and not any(y[w] for w in o.lesser_neighbours(v))) for v in range(o.graph.n)
    )


def sample_block_factor(o: TreeOrder, c: Sequence | Mapping, seed: int | None = None) -> tuple[int, ...]:
    """One draw of ``X``; ``X[v]`` is the value at vertex ``v``.

    Generator contract: ``numpy.random.default_rng(seed)`` (PCG64) draws one
    uniform per vertex in linear-extension order and ``Y_v = (u < c_v)``.
    """
    return tuple(int(b) for b in sample_block_factor_batch(o, c, 1, seed)[0])


def sample_block_factor_batch(o: TreeOrder, c: Sequence | Mapping, size: int, seed: int | None = None) -> np.ndarray:
    """``size`` independent draws as a ``(size, n)`` uint8 array.

    Row ``k`` consumes the uniforms ``k*n .. k*n + n - 1`` of the stream, so
    the first row equals :func:`sample_block_factor` with the same seed.
    """
    g = o.graph
    cv = np.array([float(x) for x in _vector(g, c)], dtype=float)
    rng = np.random.default_rng(seed)
    lin = np.array(o.linear_extension, dtype=np.intp)
    u = rng.random((size, g.n))
    y = np.zeros((size, g.n), dtype=bool)
    y[:, lin] = u < cv[lin]
    x = y.copy()
    for v in range(g.n):
        for w in o.lesser_neighbours(v):
            x[:, v] &= ~y[:, w]
    return x.astype(np.uint8)


@dataclass
class ExactLaw:
    """Joint law of a {0,1}-field on ``n`` vertices.

    ``probs`` maps outcome tuples (indexed by vertex id) to probabilities;
    absent outcomes have probability zero. ``order`` fixes the bit order of
    the JSON export.
    """

    n: int
    probs: dict[tuple[int, ...], Any]
    order: tuple[int, ...] = ()

    def __post_init__(self):
        if not self.order:
            self.order = tuple(range(self.n))

    def total(self):
        return sum(self.probs.values())

    def mask_table(self) -> dict[int, Any]:
        return {sum(b << v for v, b in enumerate(x)): q for x, q in self.probs.items()}

    def to_json(self) -> dict[str, str]:
        out = {}
        for x, q in sorted(self.probs.items(), key=lambda t: [t[0][v] for v in self.order]):
            out["".join(str(x[v]) for v in self.order)] = str(q)
        return out


def exact_block_factor_law(
    o: TreeOrder,
    c: Sequence | Mapping,
    exact: bool = True,
    max_vertices: int = EXACT_LAW_MAX_VERTICES,
) -> ExactLaw:
    """Law of ``X`` by summing over all ``2^n`` values of ``Y``."""
    g = o.graph
    if g.n > max_vertices:
        raise ValueError(f"{g.n} vertices exceeds the exhaustive gate of {max_vertices}")
    c = _vector(g, c, exact)
    probs: dict[tuple[int, ...], Any] = {}
    for y in itertools.product((0, 1), repeat=g.n):
        weight = Fraction(1) if exact else 1.0
        for v in range(g.n):
            weight *= c[v] if y[v] else 1 - c[v]
            if weight == 0:
                break
        if weight == 0:
            continue
        x = _block_factor(o, y)
        probs[x] = probs.get(x, 0) + weight
    return ExactLaw(g.n, probs, o.linear_extension)


# -- verification -------------------------------------------------------------


@dataclass
class Check:
    passed: bool
    max_deviation: Any
    witness: dict = field(default_factory=dict)


@dataclass
class ShearerReport:
    checks: dict[str, Check]

    def __bool__(self) -> bool:
        return all(ch.passed for ch in self.checks.values())

    def summary(self) -> dict[str, dict]:
        return {
            name: {"passed": ch.passed, "max_deviation": str(ch.max_deviation), **({"witness": ch.witness} if ch.witness else {})}
            for name, ch in self.checks.items()
        }


def _zero_avoidance(law: ExactLaw) -> list:
    """``P(X_W = 0)`` for every bitmask ``W`` via a subset-sum transform."""
    n = law.n
    f = [0] * (1 << n)
    for m, q in law.mask_table().items():
        f[m] += q
    for b in range(n):
        bit = 1 << b
        for s in range(1 << n):
            if s & bit:
                f[s] += f[s ^ bit]
    full = (1 << n) - 1
    return [f[full & ~w] for w in range(1 << n)]


def _tracker(tol):
    """Running maximum deviation; keeps the witness of the worst violation."""
    state = {"dev": 0, "witness": {}}

    def see(dev, **witness):
        if dev > state["dev"]:
            state["dev"] = dev
            if dev > tol:
                state["witness"] = witness

    return state, see


def verify_shearer_law(law: ExactLaw, g: Graph, p: Sequence | Mapping, tol: float = 0) -> ShearerReport:
    """Check the defining properties of Shearer's law for ``law``.

    ``avoidance``: ``P(X_W = 0) = isp(g[W], p)`` for all ``W``;
    ``marginals``: ``P(X_v = 1) = p_v``; ``independent_ones``: no edge has both
    ends 1; ``one_dependence``: fields at graph distance > 1 are independent.
    Each check reports its largest absolute deviation; it passes when that
    is at most ``tol``.
    """
    if law.n != g.n:
        raise ValueError(f"law has {law.n} vertices, graph has {g.n}")
    p = _vector(g, p)
    exact = all(isinstance(x, (Fraction, int)) for x in p) and all(
        isinstance(q, (Fraction, int)) for q in law.probs.values()
    )
    n = g.n
    table = law.mask_table()
    checks = {}

    avoid = _zero_avoidance(law)
    expected = isp_table(g, p, exact=exact)
    state, see = _tracker(tol)
    for w in range(1 << n):
        see(abs(avoid[w] - expected[w]), vertices=[v for v in range(n) if w >> v & 1])
    checks["avoidance"] = Check(state["dev"] <= tol, state["dev"], state["witness"])

    state, see = _tracker(tol)
    for v in range(n):
        marginal = sum(q for m, q in table.items() if m >> v & 1)
        see(abs(marginal - p[v]), vertex=v)
    checks["marginals"] = Check(state["dev"] <= tol, state["dev"], state["witness"])

    state, see = _tracker(tol)
    for u, v in g.edges():
        both = sum(q for m, q in table.items() if m >> u & 1 and m >> v & 1)
        see(abs(both), edge=(u, v))
    checks["independent_ones"] = Check(state["dev"] <= tol, state["dev"], state["witness"])

    state, see = _tracker(tol)
    full = (1 << n) - 1
    closed = [(1 << v) | sum(1 << w for w in g.adj[v]) for v in range(n)]

    def far_from(mask: int) -> int:
        near = 0
        for v in range(n):
            if mask >> v & 1:
                near |= closed[v]
        return full & ~near

    for u_mask in range(1, 1 << n):
        w_mask = far_from(u_mask)
        # independence of maximal pairs implies it for all smaller ones
        if not w_mask or far_from(w_mask) != u_mask:
            continue
        joint: dict[tuple[int, int], Any] = {}
        left: dict[int, Any] = {}
        right: dict[int, Any] = {}
        for m, q in table.items():
            a, b = m & u_mask, m & w_mask
            joint[(a, b)] = joint.get((a, b), 0) + q
            left[a] = left.get(a, 0) + q
            right[b] = right.get(b, 0) + q
        for a, qa in left.items():
            for b, qb in right.items():
                see(
                    abs(joint.get((a, b), 0) - qa * qb),
                    U=[v for v in range(n) if u_mask >> v & 1],
                    W=[v for v in range(n) if w_mask >> v & 1],
                )
    checks["one_dependence"] = Check(state["dev"] <= tol, state["dev"], state["witness"])
    return ShearerReport(checks)


# -- region membership ---------------------------------------------------------


class Region(enum.Enum):
    STRICT_INTERIOR = "StrictInterior"
    BOUNDARY = "Boundary"
    OUTSIDE = "Outside"


@dataclass
class RegionVerdict:
    region: Region
    coupling: list | None = None
    failure: NotInRegion | None = None
    oracle_region: Region | None = None
    oracle_witness: list[int] | None = None

    @property
    def agrees(self) -> bool:
        return self.oracle_region is None or self.oracle_region is self.region


def region_oracle(g: Graph, p: Sequence | Mapping) -> tuple[Region, list[int] | None]:
    """Classify ``p`` by the sign of ``isp(g[W], p)`` over all vertex subsets.

    Returns the region and the first subset attaining a negative (Outside) or
    zero (Boundary) value.
    """
    table = isp_table(g, p, exact=True)
    zero = None
    for w, value in enumerate(table):
        if value < 0:
            return Region.OUTSIDE, [v for v in range(g.n) if w >> v & 1]
        if value == 0 and zero is None:
            zero = [v for v in range(g.n) if w >> v & 1]
    return (Region.BOUNDARY, zero) if zero is not None else (Region.STRICT_INTERIOR, None)


def shearer_region_membership(
    g: Graph,
    p: Sequence | Mapping,
    order: TreeOrder | None = None,
    oracle: bool = False,
) -> RegionVerdict:
    """Locate ``p`` relative to the region of marginals admitting Shearer's law.

    The coupling vector is solved exactly (rationals) along a tree order:
    StrictInterior if all ``c_v < 1``, Boundary if some ``c_v = 1``, Outside
    if no solution exists. With ``oracle=True`` the all-subset sign test is
    evaluated as well.
    """
    require_chordal(g)
    if order is None:
        order = default_tree_order(g)
    p = _vector(g, p, exact=True)
    try:
        c = c_from_p(order, p)
    except NotInRegion as exc:
        verdict = RegionVerdict(Region.OUTSIDE, failure=exc)
    else:
        region = Region.STRICT_INTERIOR if all(cv < 1 for cv in c) else Region.BOUNDARY
        verdict = RegionVerdict(region, coupling=c)
    if oracle:
        verdict.oracle_region, verdict.oracle_witness = region_oracle(g, p)
    return verdict


def lll_lower_bound(o: TreeOrder, p: Sequence | Mapping, vertices: Iterable[int]):
    """Lower bound ``prod_{v in W} (1 - c_v)`` on the avoidance probability of
    ``W`` under every 1-dependent law with marginals ``p``.

    Requires strict correspondence; a coupling value of 1 raises
    :class:`NotInRegion`.
    """
    c = c_from_p(o, p)
    for v in o.linear_extension:
        if c[v] == 1:
            raise NotInRegion(v, c[v], f"vertex {v} has coupling value 1; p is not in strict correspondence")
    one = c[0] * 0 + 1 if c else 1
    return _product((1 - c[v] for v in set(vertices)), one)


# -- vector files -------------------------------------------------------------


def parse_vector(text: str, g: Graph) -> list[Fraction]:
    """Read ``name value`` lines (or the JSON vector document) into exact values.

    Values may be decimals or rationals ``a/b``. Every vertex must appear once.
    """
    stripped = text.lstrip()
    if stripped.startswith("{"):
        data = json.loads(stripped)
        entries = list(data["values"].items())
    else:
        entries = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            tokens = line.split()
            if len(tokens) != 2:
                raise GraphFormatError(f"line {lineno}: expected 'vertex value'")
            entries.append((tokens[0], tokens[1]))
    values: dict[int, Fraction] = {}
    for name, raw in entries:
        try:
            v = g.index(name)
        except KeyError:
            raise GraphFormatError(f"unknown vertex {name!r}") from None
        if v in values:
            raise GraphFormatError(f"vertex {name!r} given twice")
        try:
            values[v] = as_fraction(str(raw))
        except (ValueError, ZeroDivisionError):
            raise GraphFormatError(f"bad value {raw!r} for vertex {name!r}") from None
    missing = [g.names[v] for v in range(g.n) if v not in values]
    if missing:
        raise GraphFormatError(f"no value for vertices {missing}")
    return [values[v] for v in range(g.n)]


def format_vector(g: Graph, values: Sequence) -> str:
    return "".join(f"{g.names[v]} {values[v]}\n" for v in range(g.n))


def vector_to_json(g: Graph, values: Sequence) -> dict[str, str]:
    return {g.names[v]: str(values[v]) for v in range(g.n)}
