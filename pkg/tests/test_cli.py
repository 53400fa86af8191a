import json
import subprocess
import sys

import pytest

from bergekit import hgio
from bergekit.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, main
from bergekit.hypercore import make_hypergraph, turan_hypergraph


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def report(text):
    obj = json.loads(text)
    assert set(obj) == {"command", "inputs_digest", "outputs", "assertions"}
    return obj


@pytest.fixture
def triangle_host(tmp_path):
    path = tmp_path / "host.hg"
    hgio.write(make_hypergraph(6, [[0, 1, 3], [1, 2, 4], [0, 2, 5]]), path)
    return str(path)


def test_construct_turan(capsys, tmp_path):
    out = tmp_path / "t.hg"
    code, text, _ = run(capsys, "construct", "turan", "--n", "7", "--r", "3", "--parts", "4",
                        "--out", str(out))
    assert code == EXIT_OK
    assert report(text)["outputs"]["edges"] == 20
    assert hgio.read(out) == turan_hypergraph(7, 3, 4).base


@pytest.mark.parametrize("argv,n,m", [
    (["complete", "--s", "3", "--r", "3"], 3, 1),
    (["expansion", "--pattern", "k3.hg", "--r", "3"], 6, 3),
    (["star", "--n", "5", "--r", "3", "--t", "1"], 5, 6),
    (["single-edge", "--n", "4"], 4, 1),
    (["clique-replacement", "--graph", "k4.hg", "--r", "3"], 4, 4),
])
def test_construct_stdout_roundtrip(capsys, argv, n, m):
    code, text, _ = run(capsys, "construct", *argv)
    assert code == EXIT_OK
    H = hgio.loads_hg(text)
    assert (H.n, H.m) == (n, m)
    assert hgio.dumps_hg(H) == text


def test_construct_missing_param(capsys):
    code, _, err = run(capsys, "construct", "turan", "--n", "5")
    assert code == EXIT_USAGE and "--r" in err


def test_shadow(capsys, triangle_host):
    code, text, _ = run(capsys, "shadow", triangle_host, "--r", "2")
    assert code == EXIT_OK and hgio.loads_hg(text).m == 9


def test_detect_exit_codes(capsys, triangle_host, tmp_path):
    wit = tmp_path / "w.json"
    code, text, _ = run(capsys, "detect", triangle_host, "k3.hg", "--witness", str(wit))
    assert code == EXIT_OK
    assert report(text)["outputs"]["found"] is True
    assert json.loads(wit.read_text())["vertex_map"] == [0, 1, 2]

    turan = tmp_path / "turan.hg"
    main(["construct", "turan", "--n", "6", "--r", "3", "--parts", "3", "--out", str(turan)])
    capsys.readouterr()
    code, text, _ = run(capsys, "detect", str(turan), "k4.hg")
    assert code == EXIT_FAIL and report(text)["outputs"]["found"] is False

    code, _, err = run(capsys, "detect", str(tmp_path / "missing.hg"), "k3.hg")
    assert code == EXIT_USAGE and "missing" in err


def test_detect_malformed(capsys, tmp_path):
    bad = tmp_path / "bad.hg"
    bad.write_text("3 2\n0 1\n")
    code, _, _ = run(capsys, "detect", str(bad), "k3.hg")
    assert code == EXIT_USAGE


def test_count(capsys, tmp_path):
    path = tmp_path / "k4.hg"
    main(["construct", "complete", "--s", "4", "--r", "2", "--out", str(path)])
    capsys.readouterr()
    code, text, _ = run(capsys, "count", str(path), "--pattern", "k3.hg")
    assert code == EXIT_OK and report(text)["outputs"]["copies"] == 4
    code, text, _ = run(capsys, "count", str(path), "--cliques", "4")
    assert report(text)["outputs"]["cliques"] == 1


@pytest.mark.parametrize("argv,value", [
    (["berge", "--n", "4", "--r", "3", "--pattern", "k3.hg"], 2),
    (["uniform", "--n", "5", "--k", "2", "--pattern", "k3.hg"], 6),
    (["generalized", "--n", "5", "--k", "2", "--s", "3", "--pattern", "k4.hg"], 4),
])
def test_ex(capsys, argv, value):
    code, text, _ = run(capsys, "ex", *argv)
    rep = report(text)
    assert code == EXIT_OK
    assert rep["outputs"]["value"] == value and rep["outputs"]["exhausted"]


def test_ex_grid_and_budget(capsys):
    code, _, err = run(capsys, "ex", "berge", "--n", "9", "--r", "3", "--pattern", "k3.hg")
    assert code == EXIT_USAGE and "grid" in err
    code, text, _ = run(capsys, "ex", "berge", "--n", "7", "--r", "3", "--pattern", "k4.hg",
                        "--max-nodes", "5")
    assert code == EXIT_FAIL and report(text)["assertions"] == {"exhausted": False}


def test_ex_threads_identical_output(capsys):
    argv = ["ex", "berge", "--n", "6", "--r", "3", "--pattern", "k3.hg", "--all"]
    _, one, _ = run(capsys, *argv)
    _, four, _ = run(capsys, *argv, "--threads", "4")
    a, b = report(one), report(four)
    assert a["outputs"] == b["outputs"]


def test_ramsey(capsys):
    code, text, _ = run(capsys, "ramsey", "--pattern", "p3.hg", "--cap", "5")
    assert code == EXIT_OK and report(text)["outputs"]["value"] == 3
    code, text, _ = run(capsys, "ramsey", "--pattern", "k3.hg", "--cap", "4")
    assert report(text)["outputs"]["value"] == "exceeds cap"


def test_verify_sandwich_and_chain(capsys):
    code, text, _ = run(capsys, "verify", "sandwich", "--n", "5", "--k", "2", "--r", "3",
                        "--pattern", "k3.hg")
    assert code == EXIT_OK and report(text)["outputs"]["status"] == "pass"
    code, text, _ = run(capsys, "verify", "expansion-chain", "--n", "5", "--k", "2", "--r", "3",
                        "--pattern", "k3.hg")
    assert code == EXIT_OK


def test_verify_observation(capsys):
    code, text, _ = run(capsys, "verify", "observation", "--pattern", "p3.hg", "--l", "3",
                        "--k", "4")
    assert code == EXIT_OK and report(text)["assertions"] == {"equal": True}


def test_verify_lemma5_reports_impossible_instances(capsys):
    code, text, _ = run(capsys, "verify", "lemma5", "--max-a", "3", "--max-b", "4")
    rep = report(text)
    assert code == EXIT_FAIL
    assert rep["outputs"]["proved_impossible"] == 270
    assert rep["outputs"]["other_errors"] == 0
    code, text, _ = run(capsys, "verify", "lemma5", "--max-a", "2", "--max-b", "3")
    assert code == EXIT_OK


def test_verify_lemma4_and_claim1(capsys, tmp_path):
    host = tmp_path / "h.hg"
    hgio.write(make_hypergraph(5, [[0, 1, 2], [0, 3, 4]]), host)
    code, text, _ = run(capsys, "verify", "lemma4", "--host", str(host), "--k", "2", "--r", "3",
                        "--pattern", "k3.hg")
    assert code == EXIT_OK
    assert report(text)["outputs"]["report"]["g"] >= 2
    code, text, _ = run(capsys, "verify", "claim1", "--host", str(host), "--pattern", "k3.hg")
    assert code == EXIT_OK
    code, text, _ = run(capsys, "verify", "lemma5", "--host", str(host), "--k", "2")
    assert code == EXIT_OK


def test_bounds(capsys):
    assert run(capsys, "bounds", "decaen", "--n", "6", "--r", "3", "--s", "4")[1] == \
        "15/1 (floor 15)\n"
    assert run(capsys, "bounds", "alpha", "--r", "2", "--s", "3")[1] == "3/4\n"
    assert run(capsys, "bounds", "ceiling", "--pattern", "k3.hg")[1] == "12/1\n"
    code, _, _ = run(capsys, "bounds", "decaen", "--n", "3", "--r", "3", "--s", "4")
    assert code == EXIT_USAGE


def test_experiment(capsys, tmp_path):
    out = tmp_path / "o.csv"
    code, text, _ = run(capsys, "experiment", "weightsum", "--pattern", "k3.hg", "--r", "2",
                        "--n-min", "4", "--n-max", "9", "--csv", str(out))
    assert code == EXIT_OK and report(text)["outputs"]["rows"] == 6
    lines = out.read_text().splitlines()
    assert len(lines) == 7 and lines[0].startswith("generator,n,r,pattern")
    code, _, err = run(capsys, "experiment", "weightsum", "--pattern", "k3.hg",
                       "--n-min", "4", "--n-max", "5", "--generators", "bogus")
    assert code == EXIT_USAGE and "unknown generator" in err


def test_identical_commands_identical_bytes(capsys):
    argv = ["experiment", "weightsum", "--pattern", "k3.hg", "--n-min", "4", "--n-max", "10",
            "--generators", "greedy-random,single-edge", "--seed", "5"]
    assert run(capsys, *argv)[1] == run(capsys, *argv)[1]


def test_usage_errors(capsys):
    assert run(capsys)[0] == EXIT_USAGE
    assert run(capsys, "frobnicate")[0] == EXIT_USAGE
    assert run(capsys, "ex", "berge", "--n", "4", "--pattern", "k3.hg")[0] == EXIT_USAGE


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "bergekit.cli", "bounds", "alpha", "--r", "3",
                           "--s", "4"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "5/6\n"
