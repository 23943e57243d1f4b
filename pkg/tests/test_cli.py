import json
import subprocess
import sys

import pytest

from mcstandards.cli import (EXIT_CAP, EXIT_INFEASIBLE, EXIT_INVALID, EXIT_OK, EXIT_PARSE,
                             EXIT_USAGE, RunConfig, main, run)
from mcstandards.formats import dumps_graph
from mcstandards.instances import figure2_graph

INFEASIBLE = """\
variables
  x : interval 0 1
objectives
  F : max : x
constraints
  x >= 2
"""


def test_solve_gamma_example1():
    status, text = run(RunConfig("solve", ["example1"], kind="gamma"))
    assert status == EXIT_OK
    assert "point 1: y1=1 y2=1 y3=0  F = (1, 1, 0)" in text
    assert "point 2" not in text


def test_standards_example2_json():
    status, text = run(RunConfig("standards", ["example2"], output_format="json"))
    doc = json.loads(text)
    assert status == EXIT_OK
    assert doc["command"] == "standards"
    assert doc["standards"]["ideal"] == [2.0, 1.0]
    assert doc["standards"]["anti_ideal"] == [1.0, 2.0]


def test_solve_normalized_and_lex():
    _, text = run(RunConfig("solve", ["example2"], normalized=True, output_format="json"))
    rep = json.loads(text)["report"]
    assert rep["best_points"] == [{"y1": 1.0, "y2": 1.0, "y3": 0.0}]
    assert rep["objective_vectors"] == [[2.0, 1.0]] and rep["normalized"]
    _, text = run(RunConfig("solve", ["example1"], lex="theta-delta", output_format="json"))
    assert json.loads(text)["report"]["lex_order"] == "theta-delta"


def test_front_and_circuits():
    status, text = run(RunConfig("front", ["example1"], resolution=1))
    assert status == EXIT_OK and "front size: 2" in text
    status, text = run(RunConfig("circuits", ["figure2"]))
    assert text.splitlines() == ["3 simple circuits", "y1: 1 -> 3 -> 1",
                                 "y2: 2 -> 3 -> 2", "y3: 1 -> 2 -> 3 -> 1"]


def test_build_from_graph_file(tmp_path):
    path = tmp_path / "g.graph"
    path.write_text(dumps_graph(figure2_graph()))
    status, text = run(RunConfig("build", [str(path)], objectives="sum-cost", relation="eq"))
    assert status == EXIT_OK
    assert "F2 : min :" in text and "(y1 + y3) = 1.0" in text


def test_verify_examples_and_random():
    status, text = run(RunConfig("verify", ["example1", "example2"], random=5, resolution=4))
    assert status == EXIT_OK
    assert "FAIL" not in text


@pytest.mark.parametrize("cfg, expected", [
    (RunConfig("front", ["no/such.problem"]), EXIT_PARSE),
    (RunConfig("circuits", ["no/such.graph"]), EXIT_PARSE),
    (RunConfig("solve", ["example1"], grid_cap=100), EXIT_CAP),
    (RunConfig("verify", []), EXIT_INVALID),
])
def test_exit_codes(cfg, expected):
    status, text = run(cfg)
    assert status == expected
    assert text.startswith("error:")


def test_infeasible_exit_code(tmp_path):
    path = tmp_path / "bad.problem"
    path.write_text(INFEASIBLE)
    assert run(RunConfig("solve", [str(path)]))[0] == EXIT_INFEASIBLE


def test_config_validation():
    with pytest.raises(ValueError):
        RunConfig("solve", ["example1"], resolution=0)
    with pytest.raises(ValueError):
        RunConfig("bogus")


def test_main_usage_errors(capsys):
    for argv in ([], ["solve"], ["solve", "example1", "--lex", "delta-theta", "--normalized"]):
        with pytest.raises(SystemExit) as info:
            main(argv)
        assert info.value.code == EXIT_USAGE


def test_main_writes_output_file(tmp_path):
    out = tmp_path / "r.json"
    assert main(["standards", "example2", "--format", "json", "-o", str(out)]) == EXIT_OK
    assert json.loads(out.read_text())["schema"] == "mcstandards.report"


def test_json_identical_across_worker_counts():
    base = ["solve", "example1", "--format", "json", "--resolution", "30", "--refine", "2"]
    outs = [subprocess.run([sys.executable, "-m", "mcstandards.cli", *base, *extra],
                           capture_output=True, check=True).stdout
            for extra in (["--single-threaded"], ["--workers", "4"])]
    assert outs[0] == outs[1]
