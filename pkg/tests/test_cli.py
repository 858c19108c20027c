import io
import json
import subprocess
import sys

import pytest

from cliquetrees import __version__
from cliquetrees.cli import main

EXAMPLE_ONE = "v1 v2\nv2 v3\nv1 v3\nv3 v4\n"
THREE_CLIQUE_PATH = "1 2\n1 3\n2 3\n2 4\n3 4\n3 5\n4 5\n"
FOUR_CYCLE = "a b\nb c\nc d\nd a\n"


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main([str(a) for a in argv], stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def run_json(*argv):
    code, out, err = run(*argv, "--format", "json")
    return code, json.loads(out) if out else None


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return path

    return write


def test_count_trees_example_one(files):
    code, out, _ = run("count-trees", files("g.txt", EXAMPLE_ONE))
    assert (code, out) == (0, "1\n")


def test_stdin(monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO("c a\nc b\nc d\n"))
    code, out, _ = run("count-trees")
    assert (code, out) == (0, "3\n")


def test_json_root(files):
    code, doc = run_json("cliques", files("g.txt", EXAMPLE_ONE))
    assert code == 0
    assert doc == {"version": __version__, "command": "cliques", "cliques": [["v1", "v2", "v3"], ["v3", "v4"]]}


def test_check_chordal(files):
    code, doc = run_json("check-chordal", files("g.txt", EXAMPLE_ONE))
    assert code == 0 and doc["chordal"] and sorted(doc["peo"]) == ["v1", "v2", "v3", "v4"]
    code, out, err = run("check-chordal", files("c4.txt", FOUR_CYCLE))
    assert code == 3
    assert out.startswith("not chordal")
    cycle = out.splitlines()[1].split(": ")[1].split()
    assert sorted(cycle) == ["a", "b", "c", "d"]


def test_domain_errors(files):
    code, doc = run_json("families", files("c4.txt", FOUR_CYCLE))
    assert code == 3 and sorted(doc["witness"]) == ["a", "b", "c", "d"]
    code, _, err = run("cliques", files("dis.txt", "a b\nc d\n"))
    assert code == 3 and "connected" in err


def test_usage_errors(files):
    assert run("no-such-command")[0] == 2
    assert run("cliques", files("loop.txt", "a a\n"))[0] == 2
    assert run("cliques", "/nonexistent/graph.txt")[0] == 2
    assert run("validate-tree", files("g.txt", EXAMPLE_ONE))[0] == 2


def test_families_and_partition(files):
    path = files("p.txt", THREE_CLIQUE_PATH)
    code, doc = run_json("families", path)
    top = doc["families"][-1]
    assert top["max_generator"] == ["3"] and top["B"] == {"vertices": 1, "edges": 1, "loops": 1}
    code, doc = run_json("partition", path)
    assert {(tuple(map(tuple, r["edge"])), r["family"]) for r in doc["partition"]} == {
        ((("1", "2", "3"), ("2", "3", "4")), 3),
        ((("2", "3", "4"), ("3", "4", "5")), 4),
        ((("1", "2", "3"), ("3", "4", "5")), 5),
    }
    code, doc = run_json("clique-graph", path)
    assert [e["label"] for e in doc["edges"]] == [["2", "3"], ["3"], ["3", "4"]]


def test_enum_trees_feeds_validate_tree(files):
    graph = files("s.txt", "c a\nc b\nc d\n")
    code, out, _ = run("enum-trees", graph, "--format", "json")
    assert code == 0 and len(json.loads(out)["trees"]) == 3
    trees = files("trees.json", out)
    code, doc = run_json("validate-tree", graph, "--tree", trees)
    assert code == 0 and doc["passed"]
    assert all(row[k]["ok"] for row in doc["results"] for k in ("def", "cip", "rip", "maxw"))
    code, doc = run_json("enum-trees", graph, "--limit", "2")
    assert len(doc["trees"]) == 2


def test_validate_bad_tree(files):
    graph = files("p.txt", THREE_CLIQUE_PATH)
    bad = [[["1", "2", "3"], ["2", "3", "4"]], [["1", "2", "3"], ["3", "4", "5"]]]
    code, doc = run_json("validate-tree", graph, "--tree", files("bad.json", json.dumps({"edges": bad})))
    assert code == 1 and not doc["passed"]
    row = doc["results"][0]
    assert row["cip"]["witness"]["triple"] == [1, 2, 0]
    assert row["cip"]["witness"]["missing"] == ["4"]
    assert row["def"]["witness"]["vertex"] == "4"
    assert not row["rip"]["ok"] and not row["maxw"]["ok"]
    code, _, _ = run("validate-tree", graph, "--tree", files("bad2.json", json.dumps(bad)), "--criterion", "cip")
    assert code == 1


def test_separators(files):
    graph = files("p.txt", THREE_CLIQUE_PATH)
    code, doc = run_json("separators", graph, "--oracle")
    assert code == 0 and doc["separators"] == doc["oracle"] == [["2", "3"], ["3", "4"]]
    assert run("separators", graph, "--oracle", "--max-vertices", "3")[0] == 2
    code, doc = run_json("reduced-graph", graph)
    assert doc["edges"] == [[["1", "2", "3"], ["2", "3", "4"]], [["2", "3", "4"], ["3", "4", "5"]]]


def test_shearer_roundtrip(files):
    graph = files("e.txt", "a b\n")
    prob = files("p.txt", "a 1/4\nb 3/16\n")
    code, out, _ = run("shearer", "c-from-p", graph, "--prob", prob, "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["values"] == {"a": "1/4", "b": "1/4"} and doc["strict"]
    coupling = files("c.json", out)
    code, doc = run_json("shearer", "p-from-c", graph, "--coupling", coupling)
    assert doc["values"] == {"a": "1/4", "b": "3/16"}


def test_shearer_region(files):
    graph = files("e.txt", "a b\n")
    for text, region in [("a 1/4\nb 3/16\n", "StrictInterior"), ("a 1/2\nb 1/2\n", "Boundary"), ("a 0.6\nb 0.6\n", "Outside")]:
        code, doc = run_json("shearer", "region", graph, "--prob", files("p.txt", text), "--oracle")
        assert code == 0 and doc["region"] == doc["oracle_region"] == region
    code, doc = run_json("shearer", "c-from-p", graph, "--prob", files("p.txt", "a 0.6\nb 0.6\n"))
    assert code == 3 and doc["witness"] == {"vertex": "b", "value": "3/2"}


def test_shearer_law_and_verify(files):
    graph = files("e.txt", "a b\n")
    coupling = files("c.txt", "a 1/2\nb 1/2\n")
    code, doc = run_json("shearer", "exact-law", graph, "--coupling", coupling)
    assert doc["order"] == ["a", "b"]
    assert doc["law"] == {"00": "1/4", "01": "1/4", "10": "1/2"}
    code, doc = run_json("shearer", "verify", graph, "--coupling", coupling)
    assert code == 0 and doc["passed"]
    assert all(ch["max_deviation"] == "0" for ch in doc["checks"].values())
    code, doc = run_json("shearer", "verify", graph, "--coupling", coupling, "--prob", files("p.txt", "a 1/2\nb 1/3\n"))
    assert code == 1 and not doc["checks"]["marginals"]["passed"]
    assert run("shearer", "exact-law", graph, "--coupling", coupling, "--max-vertices", "1")[0] == 2


def test_sampling_is_deterministic(files):
    graph = files("p.txt", "0 1\n1 2\n2 3\n3 4\n4 5\n")
    coupling = files("c.txt", "".join(f"{v} 0.5\n" for v in range(6)))
    argv = ("shearer", "sample", graph, "--coupling", coupling, "--seed", "2024", "--samples", "4")
    first, second = run(*argv), run(*argv)
    assert first == second
    assert first[1].splitlines()[1:] == ["010010", "000001", "000101", "100010"]


def test_module_entry_point(files):
    path = files("g.txt", EXAMPLE_ONE)
    result = subprocess.run([sys.executable, "-m", "cliquetrees", "count-trees", str(path)], capture_output=True, text=True)
    assert result.returncode == 0 and result.stdout == "1\n"
