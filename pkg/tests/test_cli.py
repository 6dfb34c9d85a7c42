"""End-to-end runs of the command line, exit codes included."""

from __future__ import annotations

import json

import pytest

from antimagic import (
    build_cycle,
    canonical_json,
    graph_to_dict,
    labels_to_dict,
)
from antimagic.cli import main


def write_graph(tmp_path, g, name="graph.json"):
    path = tmp_path / name
    path.write_text(canonical_json(graph_to_dict(g)))
    return str(path)


def write_labels(tmp_path, labels, name="labels.json"):
    path = tmp_path / name
    path.write_text(canonical_json(labels_to_dict(labels)))
    return str(path)


def test_construct_then_verify_round_trip(tmp_path, capsys):
    out = tmp_path / "result.json"
    code = main(["construct", "--family", "theta-double-prime",
                 "--n", "3", "--D", "0,1", "--out", str(out)])
    assert code == 0
    doc = json.loads(out.read_text())
    assert doc["labels"] == [1, 2, 3]
    assert doc["weights"] == [3, 2, 5]
    gpath = tmp_path / "graph.json"
    gpath.write_text(canonical_json(doc["graph"]))
    lpath = write_labels(tmp_path, tuple(doc["labels"]))
    capsys.readouterr()
    code = main(["verify", "--graph", str(gpath), "--labeling", lpath,
                 "--D", "0,1"])
    captured = capsys.readouterr()
    assert code == 0
    assert "weights: 3 2 5" in captured.out
    assert "antimagic: yes" in captured.out


def test_construct_writes_canonical_json(capsys):
    code = main(["construct", "--family", "uni-path", "--n", "4",
                 "--D", "0,1"])
    captured = capsys.readouterr()
    assert code == 0
    doc = json.loads(captured.out)
    assert set(doc) == {"graph", "labels", "d_set", "theorem_tag", "weights"}
    assert captured.out == canonical_json(doc)


def test_construct_mpn_and_forest(capsys):
    assert main(["construct", "--family", "mpn", "--m", "2", "--n", "4",
                 "--k", "2"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["d_set"] == [0, 2]
    assert main(["construct", "--family", "forest",
                 "--spec", "2x3,1x5"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert sorted(doc["labels"]) == list(range(1, 12))


def test_construct_dot_output(capsys):
    code = main(["construct", "--family", "theta-double-prime", "--n", "3",
                 "--D", "0,1", "--dot"])
    captured = capsys.readouterr()
    assert code == 0
    assert captured.out.startswith("digraph {")
    assert 'f=1 w=3' in captured.out


def test_construct_rejects_conflicting_mpn_flags(capsys):
    code = main(["construct", "--family", "mpn", "--m", "2", "--n", "4",
                 "--k", "2", "--D", "0,2"])
    captured = capsys.readouterr()
    assert code == 2
    assert "either --k or --D" in captured.err


def test_construct_reports_bad_k(capsys):
    code = main(["construct", "--family", "mpn", "--m", "2", "--n", "3",
                 "--k", "5"])
    captured = capsys.readouterr()
    assert code == 2
    assert captured.err.startswith("error: ")


def test_verify_failure_lists_collisions(tmp_path, capsys):
    gpath = write_graph(tmp_path, build_cycle(3))
    lpath = write_labels(tmp_path, (1, 2, 3))
    code = main(["verify", "--graph", gpath, "--labeling", lpath,
                 "--D", "0,1,2"])
    captured = capsys.readouterr()
    assert code == 1
    assert "antimagic: no" in captured.out
    assert "collisions: v1=v2 v1=v3 v2=v3" in captured.out


def test_verify_magic_mode(tmp_path, capsys):
    gpath = write_graph(tmp_path, build_cycle(4))
    lpath = write_labels(tmp_path, (1, 2, 4, 3))
    code = main(["verify", "--graph", gpath, "--labeling", lpath,
                 "--D", "1,3", "--magic"])
    captured = capsys.readouterr()
    assert code == 0
    assert "magic constant: 5" in captured.out
    code = main(["verify", "--graph", gpath, "--labeling", lpath,
                 "--D", "1", "--magic"])
    captured = capsys.readouterr()
    assert code == 1
    assert "not magic" in captured.out


def test_verify_clamp_allows_large_distances(tmp_path, capsys):
    gpath = write_graph(tmp_path, build_cycle(3))
    lpath = write_labels(tmp_path, (1, 2, 3))
    code = main(["verify", "--graph", gpath, "--labeling", lpath,
                 "--D", "0,9", "--clamp"])
    captured = capsys.readouterr()
    assert code in (0, 1)
    assert captured.out.startswith("weights:")
    assert main(["verify", "--graph", gpath, "--labeling", lpath,
                 "--D", "0,9"]) == 2


def test_search_found_on_a_path(capsys):
    code = main(["search", "--path", "4", "--D", "0,1"])
    captured = capsys.readouterr()
    assert code == 0
    assert "outcome: found" in captured.out
    assert "witness:" in captured.out
    assert "candidates examined:" in captured.out


def test_search_mask_orientation(capsys):
    code = main(["search", "--path", "4", "--orientation", "0b101",
                 "--D", "1"])
    captured = capsys.readouterr()
    assert code in (0, 1)
    assert "outcome:" in captured.out


def test_search_shortcut_and_full_scan(capsys):
    code = main(["search", "--cycle", "4", "--D", "0,2"])
    captured = capsys.readouterr()
    assert code == 1
    assert "shortcut: two vertices share a distance neighborhood" in captured.out
    assert "candidates examined: 0" in captured.out
    code = main(["search", "--cycle", "4", "--D", "0,2", "--no-prune"])
    captured = capsys.readouterr()
    assert code == 1
    assert "candidates examined: 24" in captured.out


def test_search_budget_from_the_environment(capsys, monkeypatch):
    monkeypatch.setenv("ANTIMAGIC_BUDGET", "5")
    code = main(["search", "--cycle", "4", "--D", "0,2", "--no-prune"])
    captured = capsys.readouterr()
    assert code == 1
    assert "outcome: aborted-budget" in captured.out
    assert "candidates examined: 5" in captured.out
    monkeypatch.setenv("ANTIMAGIC_BUDGET", "soon")
    assert main(["search", "--cycle", "4", "--D", "0,2",
                 "--no-prune"]) == 2


def test_search_explicit_budget_beats_the_environment(capsys, monkeypatch):
    monkeypatch.setenv("ANTIMAGIC_BUDGET", "5")
    code = main(["search", "--cycle", "4", "--D", "0,2", "--no-prune",
                 "--budget", "24"])
    captured = capsys.readouterr()
    assert code == 1
    assert "outcome: exhausted-none" in captured.out


def test_search_magic_hunt(capsys):
    code = main(["search", "--magic", "--order", "5", "--D", "0,2,3",
                 "--lambda", "10"])
    captured = capsys.readouterr()
    assert code == 0
    assert "witness graph: 1->4 2->3 3->5 4->5 5->1 5->2" in captured.out
    assert "magic constant: 10" in captured.out
    assert main(["search", "--magic", "--order", "3", "--D", "1"]) == 1
    capsys.readouterr()


def test_search_magic_needs_an_order(capsys):
    code = main(["search", "--magic", "--D", "1"])
    captured = capsys.readouterr()
    assert code == 2
    assert "--magic needs --order" in captured.err


def test_search_needs_a_target(capsys):
    code = main(["search", "--D", "1"])
    captured = capsys.readouterr()
    assert code == 2
    assert "search needs" in captured.err


def test_sweep_paths(capsys):
    code = main(["sweep", "path-characterizations", "--n-max", "3"])
    captured = capsys.readouterr()
    assert code == 0
    lines = captured.out.strip().splitlines()
    assert lines[0].split()[0] == "family"
    assert len(lines) == 5
    assert all(line.endswith("ok") for line in lines[1:])


def test_sweep_union_counterexample(capsys):
    code = main(["sweep", "union-counterexample"])
    captured = capsys.readouterr()
    assert code == 0
    lines = captured.out.strip().splitlines()
    assert lines[0] == "singleton {0}: found"
    assert lines[1] == "singleton {2}: found"
    assert lines[2] == "union {0, 2} with pruning: exhausted-none (shortcut=True)"
    assert lines[3] == "union {0, 2} full scan: exhausted-none after 24 candidates"
    assert lines[4] == "ok"


def test_sweep_duality_on_a_cycle(capsys):
    code = main(["sweep", "duality", "--cycle", "4"])
    captured = capsys.readouterr()
    assert code == 0
    assert "complement-duality" in captured.out


def test_sweep_neighborhood_survey(capsys):
    code = main(["sweep", "neighborhood-survey", "--order", "3"])
    captured = capsys.readouterr()
    assert code == 0
    assert captured.out.strip() == (
        "order 3: 111 graph/distance-set pairs, "
        "91 pass the necessary condition, 91 antimagic, gap 0")


def test_sweep_magic_bounds(capsys):
    code = main(["sweep", "magic-bounds", "--order", "3"])
    captured = capsys.readouterr()
    assert code == 0
    assert "magic-constant-window" in captured.out


def test_sweep_rejects_out_of_range_orders(capsys):
    code = main(["sweep", "neighborhood-survey", "--order", "9"])
    captured = capsys.readouterr()
    assert code == 2
    assert captured.err.startswith("error: ")


def test_export_json_and_dot(tmp_path, capsys):
    gpath = write_graph(tmp_path, build_cycle(3))
    code = main(["export", "--graph", gpath, "--format", "json"])
    captured = capsys.readouterr()
    assert code == 0
    assert json.loads(captured.out) == {"n": 3,
                                        "arcs": [[1, 2], [2, 3], [3, 1]]}
    lpath = write_labels(tmp_path, (2, 3, 1))
    out = tmp_path / "graph.dot"
    code = main(["export", "--graph", gpath, "--format", "dot",
                 "--labeling", lpath, "--D", "1", "--out", str(out)])
    assert code == 0
    assert 'v1 [label="v1 f=2 w=3"];' in out.read_text()


def test_export_json_rejects_annotations(tmp_path, capsys):
    gpath = write_graph(tmp_path, build_cycle(3))
    lpath = write_labels(tmp_path, (1, 2, 3))
    code = main(["export", "--graph", gpath, "--format", "json",
                 "--labeling", lpath])
    captured = capsys.readouterr()
    assert code == 2
    assert "graph alone" in captured.err


def test_missing_file_is_a_usage_error(tmp_path, capsys):
    code = main(["verify", "--graph", str(tmp_path / "nope.json"),
                 "--labeling", str(tmp_path / "nope2.json"), "--D", "1"])
    captured = capsys.readouterr()
    assert code == 2
    assert "cannot read" in captured.err


def test_bad_distance_set_text(tmp_path, capsys):
    gpath = write_graph(tmp_path, build_cycle(3))
    lpath = write_labels(tmp_path, (1, 2, 3))
    code = main(["verify", "--graph", gpath, "--labeling", lpath,
                 "--D", "one"])
    captured = capsys.readouterr()
    assert code == 2
    assert "comma-separated integers" in captured.err


def test_help_exits_zero(capsys):
    assert main(["--help"]) == 0
    capsys.readouterr()
    assert main(["construct", "--help"]) == 0
    capsys.readouterr()


def test_no_arguments_is_a_usage_error(capsys):
    assert main([]) == 2
    capsys.readouterr()
