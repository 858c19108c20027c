import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cliquetrees import (
    Multigraph,
    NotACliqueTreeError,
    assemble,
    build_lattice,
    count_clique_trees,
    count_spanning_trees,
    decompose,
    enumerate_clique_trees,
    has_rip,
    parse_graph,
    rip_ordering,
    spanning_trees_stream,
    validate_cip,
    validate_definition,
    validate_local_max_weight,
    validate_rip,
)
from cliquetrees.clique_trees import (
    choice_from_json,
    choice_to_json,
    first_clique_tree,
    tree_from_json,
    tree_to_json,
    validate_all,
)
from cliquetrees.generators import complete_graph, random_chordal_graph, star_graph

from .conftest import brute_spanning_trees, clique_graph_spanning_trees

EXAMPLE_ONE = "v1 v2\nv2 v3\nv1 v3\nv3 v4\n"
THREE_CLIQUE_PATH = "1 2\n1 3\n2 3\n2 4\n3 4\n3 5\n4 5\n"
GOOD = frozenset({(0, 1), (1, 2)})
BAD = frozenset({(0, 1), (0, 2)})


def brute_multigraph_trees(m: Multigraph) -> set[frozenset]:
    proper = m.proper_edges()
    if m.n == 1:
        return {frozenset()}
    out = set()
    for subset in itertools.combinations(proper, m.n - 1):
        if brute_spanning_trees(m.n, [(u, v) for u, v, _ in subset]):
            out.add(frozenset(label for *_, label in subset))
    return out


@st.composite
def multigraphs(draw):
    n = draw(st.integers(1, 5))
    k = draw(st.integers(0, 9))
    ends = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))
    return Multigraph(n, draw(st.lists(ends, min_size=k, max_size=k)))


def graphs(max_vertices=7):
    return st.builds(
        lambda n, seed, d: random_chordal_graph(n, seed, d),
        st.integers(1, max_vertices),
        st.integers(0, 10**6),
        st.floats(0.1, 0.95),
    )


@pytest.fixture
def path3():
    return build_lattice(parse_graph(THREE_CLIQUE_PATH))


class TestSpanningTrees:
    def test_triangle(self):
        m = Multigraph(3, [(0, 1), (0, 2), (1, 2)])
        assert len(list(spanning_trees_stream(m))) == 3
        assert count_spanning_trees(m) == 3

    def test_parallel_pair(self):
        m = Multigraph(2, [(0, 1, "e"), (0, 1, "f")])
        assert list(spanning_trees_stream(m)) == [frozenset({"e"}), frozenset({"f"})]

    def test_single_loop(self):
        m = Multigraph(1, [(0, 0, "x")])
        assert list(spanning_trees_stream(m)) == [frozenset()]
        assert count_spanning_trees(m) == 1

    def test_disconnected(self):
        m = Multigraph(4, [(0, 1), (2, 3)])
        assert count_spanning_trees(m) == 0
        with pytest.raises(ValueError):
            list(spanning_trees_stream(m))

    @pytest.mark.parametrize("n, expected", [(2, 1), (3, 3), (4, 16), (5, 125), (6, 1296), (7, 16807)])
    def test_cayley(self, n, expected):
        assert count_spanning_trees(Multigraph.from_graph(complete_graph(n))) == expected

    def test_big_count_is_exact(self):
        # 12^10 exceeds a double's exact integer range
        assert count_spanning_trees(Multigraph.from_graph(complete_graph(12))) == 12**10

    @settings(max_examples=300, deadline=None)
    @given(multigraphs())
    def test_stream_count_brute_agree(self, m):
        expected = brute_multigraph_trees(m) if m.is_connected() else set()
        assert count_spanning_trees(m) == len(expected)
        if m.is_connected():
            stream = list(spanning_trees_stream(m))
            assert len(stream) == len(set(stream))
            assert set(stream) == expected


class TestCounting:
    @pytest.mark.parametrize(
        "graph, expected",
        [(parse_graph(EXAMPLE_ONE), 1), (star_graph(3), 3), (parse_graph(THREE_CLIQUE_PATH), 1), (complete_graph(4), 1)],
    )
    def test_small(self, graph, expected):
        assert count_clique_trees(graph) == expected

    def test_three_clique_path_has_three_spanning_trees(self, path3):
        assert len(clique_graph_spanning_trees(path3)) == 3

    def test_star_trees(self):
        trees = list(enumerate_clique_trees(star_graph(3)))
        assert trees == [frozenset({(0, 1), (0, 2)}), frozenset({(0, 1), (1, 2)}), frozenset({(0, 2), (1, 2)})]

    def test_path_tree(self, path3):
        assert list(enumerate_clique_trees(path3)) == [GOOD]

    def test_star_of_five_counts_cayley(self):
        # one family of five cliques pairwise meeting in the centre
        assert count_clique_trees(star_graph(5)) == 125

    @settings(max_examples=100, deadline=None)
    @given(graphs())
    def test_count_matches_brute_filter(self, g):
        lattice = build_lattice(g)
        brute = {t for t in clique_graph_spanning_trees(lattice) if validate_definition(lattice.clique_graph, t)}
        emitted = list(enumerate_clique_trees(lattice))
        assert len(emitted) == len(set(emitted))
        assert set(emitted) == brute
        assert count_clique_trees(lattice) == len(brute)
        assert first_clique_tree(lattice) == emitted[0]


class TestBijection:
    def test_example_one(self):
        lattice = build_lattice(parse_graph(EXAMPLE_ONE))
        choice = {f: frozenset() for f in lattice.families}
        choice[lattice.families[2]] = frozenset({(0, 1)})
        assert assemble(lattice, choice) == {(0, 1)}

    def test_star_label_transport(self):
        lattice = build_lattice(star_graph(3))
        choice = {f: frozenset() for f in lattice.families}
        choice[lattice.families[-1]] = frozenset({(0, 1), (0, 2)})
        assert assemble(lattice, choice) == {(0, 1), (0, 2)}

    def test_assemble_rejects_bad_choice(self):
        lattice = build_lattice(star_graph(3))
        choice = {f: frozenset() for f in lattice.families}
        with pytest.raises(ValueError, match="span"):
            assemble(lattice, choice)
        with pytest.raises(ValueError, match="every family"):
            assemble(lattice, {})

    def test_decompose_names_family(self, path3):
        with pytest.raises(NotACliqueTreeError) as info:
            decompose(path3, BAD)
        assert info.value.verdict.witness["family"]

    @settings(max_examples=100, deadline=None)
    @given(graphs())
    def test_roundtrip_and_characterisation(self, g):
        lattice = build_lattice(g)
        cg = lattice.clique_graph
        for t in clique_graph_spanning_trees(lattice):
            is_tree = bool(validate_definition(cg, t))
            try:
                choice = decompose(lattice, t)
            except NotACliqueTreeError:
                assert not is_tree
                continue
            assert is_tree
            assert assemble(lattice, choice) == t
            assert decompose(lattice, assemble(lattice, choice)) == choice


class TestEnumerator:
    def test_state_between_emissions(self):
        lattice = build_lattice(star_graph(4))
        it = enumerate_clique_trees(lattice)
        k = len(lattice)
        assert it.state() == {"families": k, "indices": (0,) * k, "choice_counts": (1,) * (k - 1) + (16,)}
        next(it)
        assert it.state()["indices"] == (0,) * (k - 1) + (1,)
        assert len(list(it)) == 15
        assert it.state()["indices"] is None
        assert next(it, None) is None

    def test_slots(self):
        it = enumerate_clique_trees(star_graph(3))
        assert not hasattr(it, "__dict__")
        with pytest.raises(AttributeError):
            it.cache = []


class TestValidators:
    def test_definition(self, path3):
        cg = path3.clique_graph
        assert validate_definition(cg, GOOD)
        bad = validate_definition(cg, BAD)
        assert not bad and cg.graph.names[bad.witness["vertex"]] == "4"
        assert validate_definition(complete_graph(3), ())

    def test_definition_rejects_non_spanning(self, path3):
        assert not validate_definition(path3.clique_graph, {(0, 1)})
        assert not validate_definition(path3.clique_graph, {(0, 1), (1, 2), (0, 2)})

    def test_cip(self, path3):
        cg = path3.clique_graph
        assert validate_cip(cg, GOOD)
        bad = validate_cip(cg, BAD)
        assert bad.witness["triple"] == (1, 2, 0)
        assert [cg.graph.names[v] for v in bad.witness["missing"]] == ["4"]
        assert validate_cip(parse_graph(EXAMPLE_ONE), {(0, 1)})

    def test_rip(self, path3):
        cg = path3.clique_graph
        order = rip_ordering(GOOD, 0, 3)
        assert order == [0, 1, 2]
        verdict = validate_rip(cg, order, GOOD)
        assert verdict and verdict.witness["parents"] == [None, 0, 1]
        bad = validate_rip(cg, [0, 2, 1])
        assert not bad and bad.witness["position"] == 2
        assert [cg.graph.names[v] for v in bad.witness["intersection"]] == ["2", "3", "4"]
        assert validate_rip(complete_graph(3), [0])
        assert not has_rip(cg, BAD)

    def test_local_max_weight(self, path3):
        assert validate_local_max_weight(path3, GOOD)
        bad = validate_local_max_weight(path3, BAD)
        assert (bad.witness["weight"], bad.witness["maximum"]) == (3, 4)
        assert validate_local_max_weight(parse_graph(EXAMPLE_ONE), {(0, 1)})

    @settings(max_examples=80, deadline=None)
    @given(graphs())
    def test_four_way_equivalence(self, g):
        lattice = build_lattice(g)
        for t in clique_graph_spanning_trees(lattice):
            verdicts = {k: bool(v) for k, v in validate_all(lattice, t).items()}
            assert len(set(verdicts.values())) == 1, verdicts

    @settings(max_examples=60, deadline=None)
    @given(graphs(8))
    def test_separator_labels_shared_by_all_trees(self, g):
        lattice = build_lattice(g)
        cg = lattice.clique_graph
        labels = {frozenset(cg.labels[e] for e in t) for t in enumerate_clique_trees(lattice)}
        assert len(labels) == 1


def test_json_roundtrip():
    lattice = build_lattice(star_graph(3))
    cg = lattice.clique_graph
    tree = next(iter(enumerate_clique_trees(lattice)))
    assert tree_to_json(cg, tree) == [[["0", "1"], ["0", "2"]], [["0", "1"], ["0", "3"]]]
    assert tree_from_json(cg, tree_to_json(cg, tree)) == tree
    choice = decompose(lattice, tree)
    assert choice_from_json(lattice, choice_to_json(lattice, choice)) == choice
