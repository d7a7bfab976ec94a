import csv
import json

import pytest

from cvdsolve.cli import RunReport, main
from cvdsolve.generators import erdos_renyi
from cvdsolve.graph import format_graph, parse_graph
from cvdsolve.oracle import oracle_min_cvd

from conftest import complete_graph, cycle_graph


@pytest.fixture
def files(tmp_path):
    paths = {
        "p3": "3 2\n0 1\n1 2\n",
        "c4": format_graph(cycle_graph(4)),
        "k4": format_graph(complete_graph(4)),
        "p3dimacs": "c path\np edge 3 2\ne 1 2\ne 2 3\n",
        "bad": "2 1\n0 0\n",
    }
    out = {}
    for name, text in paths.items():
        p = tmp_path / f"{name}.txt"
        p.write_text(text)
        out[name] = str(p)
    return out


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


class TestSolve:
    def test_decision_no(self, files, capsys):
        code, out = run(capsys, "solve", files["p3"], "--k", "0")
        assert code == 1 and out.out.strip() == "no"

    def test_minimum(self, files, capsys):
        code, out = run(capsys, "solve", files["p3"])
        lines = out.out.splitlines()
        assert code == 0 and lines[0] == "1"
        assert len(lines[1].split()) == 2  # "witness:" plus one vertex

    def test_dimacs_labels(self, files, capsys):
        code, out = run(capsys, "solve", files["p3dimacs"], "--json")
        report = RunReport.from_json(out.out)
        assert code == 0 and report.result == 1
        assert set(report.witness) <= {1, 2, 3}

    def test_json_round_trip(self, files, capsys):
        _, out = run(capsys, "solve", files["c4"], "--json")
        report = RunReport.from_json(out.out)
        assert json.loads(report.to_json()) == json.loads(out.out)
        assert report.n == 4 and report.m == 4 and report.result == 2
        assert report.command == ["solve", files["c4"], "--json"]
        assert report.counters["nodes"] >= 1

    def test_matches_oracle(self, tmp_path, capsys):
        G = erdos_renyi(10, 0.4, seed=3)
        p = tmp_path / "random_n10.txt"
        p.write_text(format_graph(G))
        _, a = run(capsys, "solve", str(p))
        _, b = run(capsys, "oracle", str(p))
        assert a.out.splitlines()[0] == b.out.splitlines()[0] == str(oracle_min_cvd(G)[0])

    def test_errors(self, files, tmp_path, capsys):
        code, out = run(capsys, "solve", files["bad"])
        assert code == 2 and "line 2" in out.err
        code, out = run(capsys, "solve", str(tmp_path / "missing.txt"))
        assert code == 2 and "cannot read" in out.err

    def test_identical_reports(self, files, capsys):
        _, a = run(capsys, "solve", files["c4"], "--json")
        _, b = run(capsys, "solve", files["c4"], "--json")
        ra, rb = json.loads(a.out), json.loads(b.out)
        ra.pop("elapsed"), rb.pop("elapsed")
        assert ra == rb


class TestOracleVerify:
    @pytest.mark.parametrize("name, size", [("c4", "2"), ("k4", "0"), ("p3", "1")])
    def test_oracle(self, files, capsys, name, size):
        code, out = run(capsys, "oracle", files[name])
        assert code == 0 and out.out.splitlines()[0] == size

    def test_guard(self, files, capsys):
        code, _ = run(capsys, "oracle", files["c4"], "--guard", "3")
        assert code == 2

    def test_verify(self, files, capsys):
        assert run(capsys, "verify", files["p3"], "--witness", "1", "--k", "1")[0] == 0
        code, out = run(capsys, "verify", files["p3"], "--witness", "", "--k", "1")
        assert code == 1 and out.out.strip() == "invalid"
        assert run(capsys, "verify", files["p3"], "--witness", "7")[0] == 2


class TestAnalyze:
    def test_top_five(self, capsys):
        code, out = run(capsys, "analyze", "--top", "5")
        rows = out.out.splitlines()[1:]
        assert code == 0 and len(rows) == 5
        assert [r.split()[-2] for r in rows] == [
            "(2,3,2,2)", "(1,3,3,3)", "(2,3,2,4,3)", "(1,3,5,4,3)", "(1,3,4,4,4)"]
        assert [r.split()[-1] for r in rows] == ["1.880", "1.864", "1.840", "1.840", "1.811"]

    def test_final_bound(self, capsys):
        _, out = run(capsys, "analyze", "--final-bound")
        assert out.out.startswith("final bound: 1.811")

    def test_bn(self, capsys):
        code, out = run(capsys, "bn", "1,2")
        assert code == 0 and out.out.strip() == "1.618034"
        assert run(capsys, "bn", "0,1")[0] == 2

    def test_out_dir(self, tmp_path, capsys):
        out = tmp_path / "report"
        assert run(capsys, "analyze", "--top", "8", "--out", str(out))[0] == 0
        with open(out / "cases.csv") as fh:
            rows = list(csv.DictReader(fh))
        assert len(rows) == 8 and rows[0]["vector"] == "2,3,2,2"
        assert (out / "refined.csv").exists()
        assert (out / "cases.png").read_bytes()[:4] == b"\x89PNG"


class TestGen:
    def test_deterministic(self, capsys):
        _, a = run(capsys, "gen", "--n", "8", "--p", "0.3", "--seed", "7")
        _, b = run(capsys, "gen", "--n", "8", "--p", "0.3", "--seed", "7")
        assert a.out == b.out and parse_graph(a.out).n == 8

    def test_planted_bound(self, tmp_path, capsys):
        p = tmp_path / "pl.txt"
        run(capsys, "gen", "--planted", "--cliques", "4", "--size", "5", "--deletions", "3",
            "--seed", "1", "-o", str(p))
        _, out = run(capsys, "solve", str(p))
        assert int(out.out.splitlines()[0]) <= 3

    def test_invalid(self, capsys):
        code, out = run(capsys, "gen", "--n", "0")
        assert code == 2 and "error" in out.err


def test_bench(tmp_path, capsys):
    out = tmp_path / "bench"
    code, res = run(capsys, "bench", "--corpus", "er", "--n", "8", "--count", "4", "--oracle",
                    "--out", str(out))
    assert code == 0
    rows = list(csv.DictReader(res.out.splitlines()))
    assert len(rows) == 4 and all(r["match"] == "True" for r in rows)
    assert (out / "bench.csv").exists() and (out / "bench.png").exists()


def test_debug_commands(files, capsys):
    code, out = run(capsys, "hv", files["p3"], "--vertex", "1")
    assert code == 0 and "e 0 2" in out.out
    code, out = run(capsys, "vcalg", files["p3"], "--vertex", "1", "--k", "2")
    assert code == 0 and "family" in out.out
