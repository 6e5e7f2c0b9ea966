"""Command line interface: formats, exit codes, determinism."""

import json

import pytest

import interfere as itf

from conftest import run_cli, run_cli_json

OK, USAGE, BUDGET, FORMAT = 0, 2, 3, 4


def strip_timing(obj):
    if isinstance(obj, dict):
        return {k: strip_timing(v) for k, v in obj.items() if k != "timing"}
    if isinstance(obj, list):
        return [strip_timing(v) for v in obj]
    return obj


class TestGen:
    def test_family_graph6(self):
        code, out = run_cli(["gen", "--family", "wheel:5"])
        assert code == OK and out == "Ehfw\n"

    def test_family_edges(self):
        code, out = run_cli(["gen", "--family", "path:3", "--format", "edges"])
        assert code == OK and out == "3\n0 1\n1 2\n"

    def test_graph_spec_passthrough(self):
        code, out = run_cli(["gen", "--graph", "g6:Ehfw"])
        assert code == OK and out == "Ehfw\n"

    def test_catalog_lines(self):
        code, out = run_cli(["gen", "--catalog", "4", "--connected"])
        assert code == OK
        words = out.split()
        assert len(words) == 6
        assert all(itf.from_graph6(w).n == 4 for w in words)

    def test_catalog_rejects_edge_format(self):
        code, out = run_cli(["gen", "--catalog", "3", "--format", "edges"])
        assert code == USAGE

    def test_file_spec(self, tmp_path):
        p = tmp_path / "g.txt"
        p.write_text("3\n0 1\n1 2\n")
        code, out = run_cli(["gen", "--graph", f"file:{p}"])
        assert code == OK and out.strip() == itf.to_graph6(itf.path(3))

    def test_bad_graph6_is_a_format_error(self):
        code, out = run_cli(["gen", "--graph", "g6:B!"])
        assert code == FORMAT
        err = json.loads(out)["error"]
        assert err["kind"] == "format"
        assert "graph6" in err["message"]

    def test_unknown_family_is_format_error(self):
        # Anything malformed inside a graph spec string is a format problem,
        # same exit class as an unparseable graph6 word.
        code, _ = run_cli(["gen", "--family", "moebius:5"])
        assert code == FORMAT


class TestDomsets:
    def test_minimal_anchor(self):
        code, out = run_cli(["domsets", "--graph", "path:3"])
        assert code == OK and json.loads(out) == [[1], [0, 2]]

    def test_all_kind(self):
        code, out = run_cli(["domsets", "--graph", "path:3", "--kind", "all"])
        got = json.loads(out)
        assert code == OK
        assert [1] in got and [0, 1, 2] in got and [0] not in got


class TestCheck:
    def test_builtin_complete_labeling_with_pattern(self):
        code, obj = run_cli_json(
            ["check", "--graph", "complete:3", "--labeling", "complete",
             "--pattern", "min-dominating"]
        )
        assert code == OK
        assert obj["labeling_valid"] and obj["verdict"]
        assert obj["sets_checked"] == 3 and obj["violations"] == []

    def test_explicit_sets_and_violation_report(self, tmp_path):
        lab = tmp_path / "lab.json"
        lab.write_text(json.dumps(
            {"ground_set_size": 2, "labels": [[0], [1], [0, 1]]}
        ))
        code, obj = run_cli_json(
            ["check", "--graph", "complete:3", "--labeling", str(lab),
             "--set", "0", "--set", "1,2"]
        )
        assert code == OK
        assert obj["sets_checked"] == 2
        assert not obj["verdict"]
        assert obj["violations"] == [
            {"set": [0], "vertex": 1, "candidates": [0]}
        ]

    def test_malformed_labeling_json_is_format_error(self, tmp_path):
        lab = tmp_path / "lab.json"
        lab.write_text(json.dumps({"labels": [[0]]}))
        code, out = run_cli(
            ["check", "--graph", "complete:3", "--labeling", str(lab), "--set", "0"]
        )
        assert code == FORMAT

    def test_vertex_out_of_range_is_usage(self):
        code, out = run_cli(
            ["check", "--graph", "complete:3", "--labeling", "complete", "--set", "9"]
        )
        assert code == USAGE
        assert "out of range" in json.loads(out)["error"]["message"]


class TestIndex:
    def test_complete_graph_anchor(self):
        code, obj = run_cli_json(
            ["index", "--graph", "complete:4", "--pattern", "singletons"]
        )
        assert code == OK
        assert obj["defined"] is True
        assert obj["index"] == 3
        assert obj["witness"]["labels"] == [[0], [0, 1], [0, 2], [0, 1, 2]]
        assert obj["trace"][-1]["found"] is True

    def test_undefined_is_still_exit_zero(self, tmp_path):
        sets = tmp_path / "sets.json"
        sets.write_text(json.dumps([[0]]))
        code, obj = run_cli_json(
            ["index", "--graph", "path:3", "--pattern", f"explicit:{sets}"]
        )
        assert code == OK
        assert obj["defined"] is False and "reason" in obj

    def test_budget_flag_exits_three(self):
        code, out = run_cli(
            ["index", "--graph", "complete:6", "--pattern", "singletons",
             "--budget", "3"]
        )
        assert code == BUDGET
        assert json.loads(out)["error"]["kind"] == "budget"

    def test_budget_env(self, monkeypatch):
        monkeypatch.setenv("INTERFERE_BUDGET", "2")
        code, out = run_cli(["index", "--graph", "complete:5", "--pattern", "singletons"])
        assert code == BUDGET

    def test_budget_flag_beats_env(self, monkeypatch):
        monkeypatch.setenv("INTERFERE_BUDGET", "2")
        code, obj = run_cli_json(
            ["index", "--graph", "complete:5", "--pattern", "singletons",
             "--budget", "100000"]
        )
        assert code == OK and obj["index"] == 4


class TestBrm:
    def test_table_value(self):
        code, obj = run_cli_json(["brm", "--r", "2", "--m", "4"])
        assert code == OK and obj["value"] == 12

    def test_krs(self):
        code, obj = run_cli_json(["brm", "--krs", "2,5"])
        assert code == OK
        assert obj["index"] == 4
        assert obj["upper_bound"] == 4
        assert obj["side_index"] == 3

    def test_cap_exit(self):
        code, out = run_cli(["brm", "--r", "2", "--m", "9"])
        assert code == BUDGET

    def test_requires_some_mode(self):
        code, _ = run_cli(["brm"])
        assert code == USAGE


class TestNbd:
    def test_complete_mode(self):
        code, obj = run_cli_json(["nbd", "--graph", "wheel:5", "--complete"])
        assert code == OK and obj["verdict"] is True
        assert obj["rule"] == "open_complete"

    def test_wheel_four_singleton_center(self):
        code, obj = run_cli_json(["nbd", "--graph", "wheel:4", "--singleton", "4"])
        assert code == OK and obj["verdict"] is False
        assert obj["trace"]["injective"] is False

    def test_complemented_set(self):
        code, obj = run_cli_json(
            ["nbd", "--graph", "cycle:5", "--labeling", "complemented", "--set", "0"]
        )
        assert code == OK and obj["verdict"] is True
        assert obj["rule"] == "complemented_set"

    def test_complemented_complete_reports_rule(self):
        code, obj = run_cli_json(
            ["nbd", "--graph", "cycle:5", "--labeling", "complemented", "--complete"]
        )
        assert code == OK and obj["verdict"] is True
        assert obj["trace"]["sufficient_rule"] == "regular"

    def test_closed_selfcheck(self):
        code, obj = run_cli_json(["nbd", "--graph", "path:3", "--labeling", "closed", "--complete"])
        assert code == OK and obj["verdict"] is True
        code, obj = run_cli_json(["nbd", "--graph", "complete:2", "--labeling", "closed", "--complete"])
        assert code == OK and obj["verdict"] is False
        assert obj["trace"]["reason"] == "NOT_INJECTIVE"

    def test_allbut_disconnected_is_usage(self):
        code, _ = run_cli(["nbd", "--graph", "matching:2", "--allbut", "0"])
        assert code == USAGE


class TestLinegraph:
    def test_injective(self):
        code, obj = run_cli_json(["linegraph", "--graph", "path:4", "--check", "injective"])
        assert code == OK and obj["verdict"] is False
        assert obj["obstructions"] == [["sandwich", [0, 1, 2, 3]]]

    def test_interference_with_edge_set(self):
        # In L(C6) the label of edge 1-2 is {01, 23}, disjoint from the labels
        # of both of its matching neighbors, so this target set fails.
        code, obj = run_cli_json(
            ["linegraph", "--graph", "cycle:6", "--check", "interference",
             "--edge-set", "0-1", "2-3", "4-5"]
        )
        assert code == OK
        assert obj["verdict"] is False and obj["oracle_agrees"] is True
        # An adjacent pair plus the opposite edge does interfere.
        code, obj = run_cli_json(
            ["linegraph", "--graph", "cycle:6", "--check", "interference",
             "--edge-set", "0-1", "1-2", "3-4"]
        )
        assert code == OK
        assert obj["verdict"] is True and obj["oracle_agrees"] is True

    def test_complete_undetermined_flag(self):
        code, obj = run_cli_json(["linegraph", "--graph", "cycle:5", "--check", "complete"])
        assert code == OK
        assert obj["verdict"] is False and obj["undetermined"] is True

    def test_rules(self):
        code, obj = run_cli_json(["linegraph", "--graph", "kpq:4,4", "--check", "rules"])
        assert code == OK
        assert obj["rules"]["regular"] is True
        assert obj["rules"]["independence"] is False
        assert obj["rule"] == "regular" and obj["verdict"] is True

    def test_hypothesis_violation_is_usage(self):
        code, out = run_cli(["linegraph", "--graph", "path:4", "--check", "cnbd",
                             "--edge-set", "0-1"])
        assert code == USAGE

    def test_unknown_edge_is_usage(self):
        code, _ = run_cli(
            ["linegraph", "--graph", "path:4", "--check", "interference",
             "--edge-set", "0-2"]
        )
        assert code == USAGE


class TestDpd:
    def test_path_construction_anchor(self):
        code, obj = run_cli_json(["dpd", "--graph", "path:9", "--path-construction"])
        assert code == OK
        assert obj["markers"] == [0, 1, 3, 6]
        assert obj["dpd"] is True and obj["interference"] is True

    def test_explicit_marker_set(self):
        code, obj = run_cli_json(["dpd", "--graph", "path:3", "--set", "1"])
        assert code == OK
        assert obj["dpd"] is False and obj["interference"] is False

    def test_disconnected_is_usage(self):
        code, _ = run_cli(["dpd", "--graph", "matching:2", "--set", "0"])
        assert code == USAGE


class TestSweep:
    def test_nbd_oracle_small(self):
        code, obj = run_cli_json(["sweep", "--suite", "nbd-oracle", "--max-n", "4"])
        assert code == OK
        assert obj["ok"] is True and obj["mismatch_count"] == 0
        assert obj["graph_count"] == 10  # connected graphs on 2..4 vertices

    def test_lg_injectivity_small(self):
        code, obj = run_cli_json(["sweep", "--suite", "lg-injectivity", "--max-n", "4"])
        assert code == OK and obj["ok"] is True

    def test_index_kn(self):
        code, obj = run_cli_json(["sweep", "--suite", "index-kn", "--max-n", "5"])
        assert code == OK and obj["ok"] is True

    def test_graphs_file(self, tmp_path):
        p = tmp_path / "graphs.g6"
        p.write_text("Bw\nBg\n")
        code, obj = run_cli_json(
            ["sweep", "--suite", "nbd-oracle", "--graphs-file", str(p)]
        )
        assert code == OK and obj["graph_count"] == 2 and obj["ok"] is True


class TestHarness:
    def test_schema_field_everywhere(self):
        for args in (
            ["domsets", "--graph", "path:3"],
            ["index", "--graph", "complete:3", "--pattern", "singletons"],
            ["nbd", "--graph", "cycle:5", "--complete"],
        ):
            code, out = run_cli(args)
            assert code == OK
            parsed = json.loads(out)
            if isinstance(parsed, dict):
                assert parsed["schema"] == "1"

    def test_output_is_deterministic_up_to_timing(self):
        a = strip_timing(run_cli_json(["nbd", "--graph", "wheel:5", "--complete"])[1])
        b = strip_timing(run_cli_json(["nbd", "--graph", "wheel:5", "--complete"])[1])
        assert a == b
        s = json.dumps(strip_timing(json.loads(run_cli(["sweep", "--suite", "index-kn", "--max-n", "4"])[1])), sort_keys=True)
        t = json.dumps(strip_timing(json.loads(run_cli(["sweep", "--suite", "index-kn", "--max-n", "4"])[1])), sort_keys=True)
        assert s == t

    def test_usage_error_shape(self):
        code, out = run_cli(["nbd", "--graph", "cycle:5"])  # no mode chosen
        assert code == USAGE
        obj = json.loads(out)
        assert obj["error"]["kind"] == "usage"

    def test_unknown_command(self):
        code, _ = run_cli(["frobnicate"])
        assert code == USAGE
