import csv
import io
import json
import subprocess
import sys

import pytest

from satex import bounds, cli
from satex.berge import Hypergraph, berge_counts
from satex.counting import count_subgraphs
from satex.graph import Graph
from satex.patterns import parse_pattern
from satex.search import exact_satex


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--no-timestamp")
    assert code == 0, err
    return json.loads(out)["result"]


def test_count(capsys):
    assert run_json(capsys, "count", "--pattern", "P3", "--host", Graph.complete(3).to_graph6())["count"] == 3


def test_count_host_from_file(capsys, tmp_path):
    path = tmp_path / "g.json"
    path.write_text(json.dumps(Graph.petersen().to_json()))
    res = run_json(capsys, "count", "--pattern", "C5", "--host", str(path))
    assert res["count"] == count_subgraphs(parse_pattern("C5"), Graph.petersen())


def test_build(capsys):
    res = run_json(capsys, "build", "--family", "quasi_clique", "--param", "t=3", "--n", "5")
    g = Graph.from_graph6(res["graph6"])
    assert g.n == 5 and g.edge_count() == 3


def test_build_from_spec_file(capsys, tmp_path):
    path = tmp_path / "spec.json"
    path.write_text(json.dumps({"family": "furedi", "params": {"p": 5, "r": 2}}))
    g = Graph.from_graph6(run_json(capsys, "build", "--spec", str(path))["graph6"])
    assert sorted(g.degrees()) == [3] * 4 + [4] * 6


def test_bound_matches_direct_call(capsys):
    res = run_json(capsys, "bound", "--name", "bollobas", "--n", "6", "--k", "2", "--r", "3", "--m", "12")
    assert res.items() >= bounds.bollobas_interpolated_bound(6, 2, 3, 12).to_json().items()
    assert res["value"] == 8
    res = run_json(capsys, "bound", "--name", "spanning", "--n", "10", "--H", "P4", "--F", "K2", "--m", "60")
    assert res["value"] == 10 and res["kind"] == "asymptotic"


def test_satex_matches_direct_call(capsys):
    res = run_json(capsys, "satex", "--n", "4", "--F", "K2", "--m", "5", "--G", "K3")
    assert res.items() >= exact_satex(4, parse_pattern("K2"), 5, parse_pattern("K3")).to_json().items()


def test_heuristic_satex(capsys):
    res = run_json(capsys, "satex", "--n", "12", "--F", "K2", "--m", "36", "--G", "K3", "--heuristic", "--seed", "3")
    assert res["optimum"] == 0 and res["exact"] is False


def test_turan(capsys):
    assert run_json(capsys, "turan", "--n", "5", "--F", "K2", "--G", "K3")["optimum"] == 6


def test_berge(capsys):
    res = run_json(capsys, "berge", "--n1n2n3", "--hyper", "complete-3-uniform-4", "--pattern", "P3")
    assert (res["n1"], res["n2"], res["n3"]) == (6, 12, 36)
    res = run_json(capsys, "berge", "--n1n2n3", "--hyper", "gadget-2", "--pattern", "K3")
    assert (res["n1"], res["n2"], res["n3"]) == (8, 1, 8)


def test_berge_hypergraph_file(capsys, tmp_path):
    H = Hypergraph(5, 3, ((0, 1, 2), (1, 2, 3), (2, 3, 4)))
    path = tmp_path / "h.json"
    path.write_text(json.dumps(H.to_json()))
    res = run_json(capsys, "berge", "--n1n2n3", "--hyper", str(path), "--pattern", "P3")
    assert (res["n1"], res["n2"], res["n3"]) == berge_counts(H, parse_pattern("P3")).as_tuple()


def test_berge_sandwich(capsys):
    res = run_json(capsys, "berge", "--sandwich", "--n", "5", "--r", "3", "--m", "4", "--pattern", "K3")
    assert res["holds"] is True


def test_phase_csv(capsys):
    code, out, _ = run(capsys, "phase", "--n", "20", "--s", "2", "--a", "1", "--b", "1", "--grid", "0,50,100,190", "--no-timestamp")
    assert code == 0
    assert "\r\n" in out
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [int(r["m"]) for r in rows] == [0, 50, 100, 190]


def test_csv_timestamp_column(capsys):
    code, out, _ = run(capsys, "count", "--pattern", "K2", "--host", "A_", "--format", "csv")
    assert code == 0
    header = out.splitlines()[0].split(",")
    assert header[-1] == "timestamp"
    code, out, _ = run(capsys, "count", "--pattern", "K2", "--host", "A_", "--format", "csv", "--no-timestamp")
    assert "timestamp" not in out


def test_sweep(capsys, tmp_path):
    jobs = [
        {"bound": "bollobas", "params": {"n": 6, "k": 2, "r": 3, "m": 10}, "exact": {"n": 6, "F": "K2", "m": 10, "G": "K3"}},
        {"bound": "csillag1", "params": {"n": 5, "m": 7, "s": 1, "a": 1, "b": 1}},
        {"satex": {"n": 5, "F": "K2", "m": 7, "G": "K3"}},
    ]
    path = tmp_path / "jobs.json"
    path.write_text(json.dumps(jobs))
    code, out, err = run(capsys, "sweep", "--file", str(path), "--no-timestamp")
    assert code == 0, err
    rows = list(csv.DictReader(io.StringIO(out)))
    assert rows[0]["holds"] == "True" and rows[0]["exact"] == "3"
    assert rows[2]["exact"] == str(exact_satex(5, parse_pattern("K2"), 7, parse_pattern("K3")).optimum)


def test_sweep_soundness_alarm(capsys, tmp_path, monkeypatch):
    def broken(n, k, r, m):
        return bounds.BoundReport(10 ** 6, bounds.CERTIFIED, {})

    monkeypatch.setitem(cli.BOUND_EVALUATORS, "bollobas", (broken, ("n", "k", "r", "m")))
    path = tmp_path / "jobs.json"
    path.write_text(json.dumps([{"bound": "bollobas", "params": {"n": 6, "k": 2, "r": 3, "m": 10},
                                 "exact": {"n": 6, "F": "K2", "m": 10, "G": "K3"}}]))
    code, _, err = run(capsys, "sweep", "--file", str(path), "--no-timestamp")
    assert code == cli.EXIT_ALARM == 4
    assert "SOUNDNESS ALARM" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["bound", "--name", "bollobas", "--n", "6"],
        ["count", "--pattern", "Q7", "--host", "A_"],
        ["count", "--pattern", "K2", "--host", "A`"],
        ["build", "--family", "furedi", "--param", "p=6", "--param", "r=1"],
        ["satex", "--n", "5", "--F", "K2", "--m", "3", "--G", "K3", "--seed", "-1"],
    ],
)
def test_parameter_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == cli.EXIT_PARAM == 2
    assert err.startswith("satex: error")


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as info:
        cli.main(["frobnicate"])
    assert info.value.code == 2


def test_size_refusal_exit_3(capsys):
    code, _, err = run(capsys, "satex", "--n", "11", "--F", "K2", "--m", "3", "--G", "K3")
    assert code == cli.EXIT_SIZE == 3
    assert "--heuristic" in err


def test_byte_identical_without_timestamp():
    argv = [sys.executable, "-m", "satex", "satex", "--n", "10", "--F", "K2", "--m", "30", "--G", "K3",
            "--heuristic", "--budget", "2000", "--seed", "11", "--no-timestamp"]
    a = subprocess.run(argv, capture_output=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, check=True).stdout
    assert a == b and a
