import json

import pandas as pd
import pytest

from apollonian.main import build_parser, main
from apollonian.theory.diameter import CONSTANT_KEYS


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestUsage:
    def test_help(self, capsys):
        code, out, _ = run(capsys, "--help")
        assert code == 0
        for name in ("generate", "export", "degrees", "distances", "constants", "experiment", "runs"):
            assert name in out

    def test_unknown_subcommand(self, capsys):
        code, _, err = run(capsys, "plot")
        assert code == 2
        assert "usage" in err

    def test_unknown_flag(self, capsys):
        code, _, err = run(capsys, "constants", "--colour")
        assert code == 2
        assert "usage" in err

    def test_every_subcommand_documents_log_level(self):
        parser = build_parser()
        actions = [a for a in parser._actions if a.dest == "command"][0]
        for name, sub in actions.choices.items():
            assert "--log-level" in sub.format_help(), name


class TestConstants:
    def test_stdout_json(self, capsys):
        code, out, _ = run(capsys, "constants", "--dim", "2")
        assert code == 0
        payload = json.loads(out)
        assert list(payload) == CONSTANT_KEYS
        assert payload["diam_const"] == pytest.approx(1.668, abs=1e-3)

    def test_out_file(self, capsys, tmp_path):
        code, out, _ = run(capsys, "constants", "--dim", "3", "--out", str(tmp_path / "c.json"))
        assert code == 0
        assert out == ""
        assert json.loads((tmp_path / "c.json").read_text())["d"] == 3

    def test_bad_dimension(self, capsys):
        code, _, _ = run(capsys, "constants", "--dim", "1")
        assert code == 2


class TestGenerate:
    def test_ran(self, capsys, tmp_path):
        code, out, _ = run(
            capsys, "generate", "--model", "ran", "--dim", "2", "--steps", "8", "--seed", "7",
            "--out", str(tmp_path / "g"),
        )
        assert code == 0
        assert json.loads(out)["vertices"] == 12
        vertices = pd.read_csv(tmp_path / "g" / "vertices.csv", dtype={"code": str}, keep_default_na=False)
        assert len(vertices) == 12
        assert vertices.loc[0, "code"] == ""

    def test_ean_full_occupation(self, capsys, tmp_path):
        code, out, _ = run(
            capsys, "generate", "--model", "ean", "--dim", "2", "--steps", "3", "--q", "const:1",
            "--check", "--out", str(tmp_path / "g"),
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["active_cliques"] == 81
        assert payload["added_nodes"] == 39

    def test_seed_determines_files(self, capsys, tmp_path):
        for name in ("a", "b"):
            run(capsys, "generate", "--steps", "40", "--seed", "5", "--out", str(tmp_path / name))
        for name in ("vertices.csv", "edges.csv"):
            assert (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes()

    def test_q_needs_ean(self, capsys, tmp_path):
        code, _, err = run(capsys, "generate", "--steps", "3", "--q", "const:1", "--out", str(tmp_path))
        assert code == 2
        assert "--q" in err

    @pytest.mark.parametrize("value", ["const:2", "cubic:1"])
    def test_bad_schedule(self, capsys, tmp_path, value):
        code, _, _ = run(capsys, "generate", "--model", "ean", "--steps", "3", "--q", value, "--out", str(tmp_path))
        assert code == 2

    def test_negative_seed(self, capsys, tmp_path):
        code, _, _ = run(capsys, "generate", "--steps", "3", "--seed", "-1", "--out", str(tmp_path))
        assert code == 2

    def test_unwritable_output(self, capsys, tmp_path):
        blocker = tmp_path / "file"
        blocker.write_text("x")
        code, _, err = run(capsys, "generate", "--steps", "3", "--out", str(blocker))
        assert code == 1
        assert "error" in err


class TestExport:
    def test_graphml(self, capsys, tmp_path):
        run(capsys, "generate", "--steps", "20", "--out", str(tmp_path / "g"))
        code, out, _ = run(
            capsys, "export", "--graph", str(tmp_path / "g"), "--format", "graphml",
            "--out", str(tmp_path / "g.graphml"),
        )
        assert code == 0
        assert json.loads(out) == {"format": "graphml", "nodes": 24, "edges": 6 + 20 * 3, "file": str(tmp_path / "g.graphml")}

    def test_missing_graph(self, capsys, tmp_path):
        code, _, _ = run(capsys, "export", "--graph", str(tmp_path / "nope"), "--out", str(tmp_path / "g.gexf"))
        assert code == 1


class TestMeasure:
    def test_degrees_to_file(self, capsys, tmp_path):
        code, out, _ = run(capsys, "degrees", "--steps", "200", "--out", str(tmp_path / "deg.csv"))
        assert code == 0
        table = pd.read_csv(tmp_path / "deg.csv")
        assert list(table.columns) == ["k", "empirical", "theoretical", "abs_diff"]
        assert json.loads(out)["sup_deviation"] == pytest.approx(table["abs_diff"].max())

    def test_degrees_to_stdout(self, capsys):
        code, out, _ = run(capsys, "degrees", "--steps", "0")
        assert code == 0
        assert out.splitlines()[0] == "k,empirical,theoretical,abs_diff"

    def test_distances(self, capsys, tmp_path):
        code, out, _ = run(capsys, "distances", "--steps", "100", "--pairs", "50", "--out", str(tmp_path / "d.csv"))
        assert code == 0
        table = pd.read_csv(tmp_path / "d.csv")
        assert len(table) == 50
        assert json.loads(out)["pairs"] == 50


class TestExperiment:
    def test_hopclt_files(self, capsys, tmp_path):
        code, _, _ = run(
            capsys, "experiment", "--kind", "hopclt", "--dim", "2", "--steps", "500",
            "--replicates", "10", "--seed", "3", "--out", str(tmp_path / "e"),
        )
        assert code == 0
        summary = json.loads((tmp_path / "e" / "summary.json").read_text())
        assert summary["replicates"] == 10
        assert summary["master_seed"] == 3
        assert len(pd.read_csv(tmp_path / "e" / "results.csv")) == 10

    def test_summary_on_stdout(self, capsys):
        code, out, _ = run(capsys, "experiment", "--kind", "depth", "--steps", "100", "--replicates", "2")
        assert code == 0
        assert json.loads(out)["kind"] == "depth"

    def test_dist_oracle_exit_code_tracks_witnesses(self, capsys, tmp_path):
        code, _, _ = run(
            capsys, "experiment", "--kind", "dist_oracle", "--steps", "40", "--replicates", "2",
            "--out", str(tmp_path / "o"),
        )
        failures = json.loads((tmp_path / "o" / "summary.json").read_text())["stats"]["failures"]
        assert code == (1 if failures else 0)

    def test_schedule_on_ran_kind(self, capsys):
        code, _, err = run(capsys, "experiment", "--kind", "degree", "--steps", "10", "--q", "const:0.5")
        assert code == 2
        assert "schedule" in err

    def test_ledger(self, capsys, tmp_path):
        ledger = str(tmp_path / "runs.db")
        for kind in ("hopclt", "clustering"):
            code, _, _ = run(capsys, "experiment", "--kind", kind, "--steps", "50", "--ledger", ledger)
            assert code == 0
        code, out, _ = run(capsys, "runs", "--ledger", ledger)
        assert code == 0
        runs = json.loads(out)["runs"]
        assert [r["kind"] for r in runs] == ["hopclt", "clustering"]
        code, out, _ = run(capsys, "runs", "--ledger", ledger, "--kind", "clustering")
        assert len(json.loads(out)["runs"]) == 1
        code, out, _ = run(capsys, "runs", "--ledger", ledger, "--limit", "1")
        assert [r["kind"] for r in json.loads(out)["runs"]] == ["clustering"]

    @pytest.mark.parametrize("url", ["nosuchdialect://x", "not a url://"])
    def test_malformed_ledger_url(self, capsys, url):
        code, _, err = run(capsys, "runs", "--ledger", url)
        assert code == 2
        assert "ledger" in err
        assert "Traceback" not in err
