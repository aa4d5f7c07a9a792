import json
import re

from realblocks.cli import main
from realblocks.examples import data_path
from realblocks.render import tree_to_dot, tube_to_dot, tube_to_text
from realblocks.star import StarParams
from realblocks.tree import assign_hook_signs, dump_tree, parse_tree, star_tree


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


def path(name):
    return str(data_path(name))


def test_validate(capsys):
    code, doc = run_json(capsys, "validate", path("ree.tree.json"))
    assert code == 0 and doc["ok"]
    assert (doc["e"], doc["b"], doc["kappa"]) == (12, 4, 8)
    assert doc["reflection"]["E4"] == "E4*"
    assert doc["signs"]["v0"] == 1


def test_selfdual_totals(capsys):
    code, doc = run_json(capsys, "selfdual", path("ree.tree.json"))
    assert code == 0
    assert doc["totals"] == {"irr": 4, "pim": 4, "nonprojective": 108,
                             "paths": {"i": 8, "ii": 0, "iii": 64, "iv": 32, "c": 0}}


def test_selfdual_table(capsys):
    code, out = run(capsys, "selfdual", path("star3.tree.json"), "--format", "table")
    assert code == 0
    assert "non-projective total 6" in out


def test_tube(capsys):
    code, doc = run_json(capsys, "tube", "--e", 3, "--m", 2)
    assert code == 0 and doc["case"] == "one-sd" and doc["total"] == 6
    code, doc = run_json(capsys, "tube", "--e", 4, "--m", 1, "--case", "no-sds")
    assert doc["levels"]["2"] and not doc["levels"]["1"]


def test_tube_even_needs_case(capsys):
    code, doc = run_json(capsys, "tube", "--e", 4, "--m", 1)
    assert code == 2 and doc["error"]["code"] == "UsageError"


def test_type_symbolic(capsys):
    code, doc = run_json(capsys, "type", "--case", "two-sds", "--e", 12, "--m", 9, "--level", 65,
                         "--hook-types", "bottom=?,top=?")
    assert code == 0
    assert doc["symbolic"] == "type = type(Ω^{-64}(H⁺))"
    assert all(c["type"] is None for c in doc["candidates"])
    code, doc2 = run_json(capsys, "type", path("ree.tree.json"), "--n", 33, "--eta", 4)
    assert (doc2["d_plus"], doc2["i"], doc2["level"]) == (64, 32, 65)
    assert doc2["symbolic"] == doc["symbolic"]


def test_type_with_assignment(capsys):
    code, doc = run_json(capsys, "type", "--case", "two-sds", "--e", 4, "--m", 2, "--level", 3,
                         "--hook-types", "column_E0=orthogonal,column_Eh=symplectic")
    assert code == 0
    assert sorted(c["type"] for c in doc["candidates"]) == ["orthogonal", "symplectic"]


def test_type_inconsistent_anchors_exit_1(capsys):
    code, doc = run_json(capsys, "type", "--case", "two-sds", "--e", 4, "--m", 3, "--level", 1,
                         "--hook-types", "column_E0=+,column_Eh=-")
    assert code == 1
    assert doc["violations"][0]["error"] == "InconsistentAnchors"


def test_type_from_table(capsys):
    code, doc = run_json(capsys, "type", "--case", "no-sds", "--e", 2, "--m", 2, "--level", 2,
                         "--table", path("c5c4.table.json"), "--fs", "exceptional=exc1")
    assert code == 0
    assert {c["type"] for c in doc["candidates"]} == {"symplectic"}


def test_type_normal_defect(capsys):
    code, doc = run_json(capsys, "type", "--table", path("c15c8.table.json"), "--mu", "X3", "--chi", "X11")
    assert doc["normal_defect"] == {"epsilon": 1, "type": "symplectic"}
    code, doc = run_json(capsys, "type", "--table", path("c15c8.table.json"), "--mu", "X3", "--chi", "X12")
    assert doc["normal_defect"] == {"epsilon": -1, "type": "orthogonal"}


def test_indicator(capsys):
    code, doc = run_json(capsys, "indicator", path("c15c8.table.json"), "--mu", "X3", "--chi", "X11")
    assert code == 0 and doc["twisted"] == 1
    code, doc = run_json(capsys, "indicator", path("c5c4.table.json"), "--chi", "exc1")
    assert doc["fs"] == -1
    code, doc = run_json(capsys, "indicator", path("c15c8.table.json"), "--mu", "X3", "--chi", "X1")
    assert "warning" in doc


def test_missing_file_exit_2(capsys, tmp_path):
    code, doc = run_json(capsys, "validate", tmp_path / "nope.json")
    assert code == 2 and doc["error"]["error"] == "FormatError"


def test_bad_json_exit_2(capsys, tmp_path):
    f = tmp_path / "bad.json"
    f.write_text("{")
    code, _ = run_json(capsys, "validate", f)
    assert code == 2


def test_asymmetric_tree_exit_1(capsys, tmp_path):
    doc = {"edges": [{"id": "E0", "ends": ["X", "a"]}, {"id": "A", "ends": ["X", "u"]},
                     {"id": "A2", "ends": ["u", "w"]}, {"id": "A3", "ends": ["u", "z"]},
                     {"id": "B", "ends": ["X", "l"]}, {"id": "B2", "ends": ["l", "k"]},
                     {"id": "B3", "ends": ["k", "j"]}],
           "rotations": {"X": ["E0", "A", "B"], "a": ["E0"], "u": ["A", "A2", "A3"], "w": ["A2"], "z": ["A3"],
                         "l": ["B", "B2"], "k": ["B2", "B3"], "j": ["B3"]},
           "exceptional": "X", "multiplicity": 2, "real_stem": ["X", "a"]}
    f = tmp_path / "asym.json"
    f.write_text(json.dumps(doc))
    code, out = run_json(capsys, "validate", f)
    assert code == 1 and out["violations"][0]["error"] == "NotReflectionSymmetric"


def test_bad_arguments_exit_2(capsys):
    assert main(["tube", "--e", "x"]) == 2
    capsys.readouterr()


def test_examples_pass(capsys):
    code, doc = run_json(capsys, "examples")
    assert code == 0 and doc["ok"]
    assert {r["name"] for r in doc["results"]} == {"ree", "star3", "single_edge", "c3", "c5c4", "c15c4", "c15c8"}


def test_output_round_trips(capsys, tmp_path):
    # documents re-serialise byte-identically
    code, out = run(capsys, "selfdual", path("ree.tree.json"))
    assert json.dumps(json.loads(out), sort_keys=True, indent=2, ensure_ascii=False) == out.rstrip("\n")
    doc = json.loads(out)
    tree = parse_tree(doc["tree"])
    assert dump_tree(parse_tree(dump_tree(tree))) == dump_tree(tree)


# -- rendering -------------------------------------------------------------------------------


def _nodes_edges(dot):
    nodes = re.findall(r'^  "([^"]+)" \[', dot, re.M)
    edges = re.findall(r'^  "[^"]+" -> "[^"]+"', dot, re.M)
    return nodes, edges


def test_render_single_edge(single_edge):
    dot = tree_to_dot(single_edge)
    nodes, edges = _nodes_edges(dot)
    assert len(nodes) == 2 and len(edges) == 1
    assert dot.count("fillcolor=black") == 1


def test_render_ree(ree):
    dot = tree_to_dot(ree, assign_hook_signs(ree).sign)
    nodes, edges = _nodes_edges(dot)
    assert len(nodes) == 13 and len(edges) == 12
    filled = [l for l in dot.splitlines() if "fillcolor=black" in l]
    assert len(filled) == 1 and '"X"' in filled[0]
    assert ree.valence("X") == 2
    assert "rank=same" in dot
    assert tree_to_dot(ree, assign_hook_signs(ree).sign) == dot


def test_render_halves(ree):
    dot = tree_to_dot(ree)
    assert '"u1" [half="upper"' in dot and '"l1" [half="lower"' in dot


def test_render_tube():
    p = StarParams(3, 2, "one-sd")
    dot = tube_to_dot(p)
    assert dot.count("shape=") == 18
    assert dot.count("doublecircle") == 6
    text = tube_to_text(p)
    rows = text.splitlines()[1:]
    assert len(rows) == 6
    assert sum(r.count("*") + r.count("H") for r in rows) == 6
    assert sum(r.count("H") for r in rows) == 2


def test_render_cli(capsys, tmp_path):
    target = tmp_path / "t.dot"
    code, doc = run_json(capsys, "render", path("ree.tree.json"), "--dot", target)
    assert code == 0 and target.read_text().startswith("digraph")
    code, out = run(capsys, "render", "--e", 3, "--m", 2)
    assert code == 0 and "H" in out


def test_star_tree_render_stable():
    t = star_tree(4, 2, 2)
    assert tree_to_dot(t) == tree_to_dot(parse_tree(dump_tree(t)))
