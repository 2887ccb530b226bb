import json
import os
import subprocess

import pytest

import obstructa as ob

CLI = os.environ.get("OBSTRUCTA_CLI", "obstructa")


def run(*args, stdin=None):
    return subprocess.run([CLI, *args], input=stdin, capture_output=True, text=True)


def test_graph6_round_trip():
    g = ob.from_graph6("C~")
    assert g.n == 4
    assert len(g.edges()) == 6
    assert ob.to_graph6(g) == "C~"
    assert g.to_graph6() == "C~"
    assert ob.Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)]) == ob.from_graph6("Cl")


def test_classify_theta():
    r = ob.classify(ob.build("theta:2,2,2"))
    assert r.two_connected and r.wheel_free and r.hc_obstruction
    assert not r.hamiltonian
    assert r.recognized_3pc == "theta:2,2,2"
    assert json.loads(r.to_json())["hc_obstruction"] is True


def test_k4_is_a_wheel():
    k4 = ob.from_graph6("C~")
    assert not ob.is_wheel_free(k4)
    assert ob.has_k4_minor(k4)
    assert ob.hamiltonian_cycle(k4) == [0, 1, 2, 3]


def test_obstruction_verdict_and_trace():
    v = ob.is_hc_obstruction(ob.from_graph6("A_"))
    assert v["is_obstruction"] is False
    assert v["failure_reason"] == "NotTwoConnected"
    steps = ob.decompose(ob.build("theta:2,2,2"))
    assert steps[0]["step"] == "two_connected"


def test_errors_raise():
    with pytest.raises(ob.ObstructaError, match="TooManyThetaChords"):
        ob.build("theta+12:2,2,2")
    with pytest.raises(ob.ObstructaError):
        ob.from_graph6("!!")


def test_verify_small():
    report = ob.verify(6)
    assert report["counterexamples"] == []
    assert [r["hc_obstructions_wheel_free"] for r in report["rows"]] == [0, 0, 0, 0, 2, 2]
    assert ob.census(4) == ob.census(4, jobs=2)


def test_cli_check_examples():
    out = run("check", "C~")
    assert out.returncode == 0
    assert json.loads(out.stdout)["wheel_free"] is False
    assert json.loads(run("check", "theta:2,2,2").stdout)["hc_obstruction"] is True
    assert json.loads(run("check", "A_").stdout)["two_connected"] is False


def test_cli_gen_and_exit_codes():
    assert run("gen", "wheel:3@0,1,2").stdout.strip() == "C~"
    assert run("gen", "theta+12:2,2,2").returncode == 4
    assert run("gen", "theta:").returncode == 2
    assert run("verify", "--max-n", "12").returncode == 3
    assert run("verify", "--max-n", "7").returncode == 0


@pytest.mark.parametrize(
    "spec", ["theta:2,2,3", "theta+1:2,3,3", "pyramid:2,2,3", "pyramid+13:2,3,2", "prism:2,2,2"]
)
def test_cli_gen_check_round_trip(spec):
    g6 = run("gen", spec).stdout.strip()
    record = json.loads(run("check", g6).stdout)
    assert record["hc_obstruction"] is True
    assert ob.from_graph6(g6) == ob.build(spec)
    assert ob.are_isomorphic(ob.build(record["recognized_3pc"]), ob.build(spec))


def test_cli_batch_check_is_json_lines():
    out = run("check", stdin="C~\nD]o\n")
    lines = out.stdout.splitlines()
    assert out.returncode == 0
    assert [json.loads(line)["hc_obstruction"] for line in lines] == [False, True]


def test_cli_csv_report():
    out = run("verify", "--max-n", "5", "--format", "csv")
    assert out.stdout.splitlines()[-1] == "5,34,10,5,3,3,2,2"
