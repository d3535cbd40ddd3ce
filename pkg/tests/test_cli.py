import io
import json
import subprocess
import sys

import pytest

from petit.cli import run

F9 = ["--field", "Fq(3,2)", "--sigma", "frob(1)"]


def invoke(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, json.loads(out.getvalue()), err.getvalue()


def test_irred_example():
    code, report, _ = invoke("irred", *F9, "--poly", "t^2 - g")
    assert code == 0
    assert report["results"]["verdict"] == "Irreducible"
    assert report["results"]["criterion"]
    assert report["context"]["modulus"] == "x^2+1"
    assert report["schema_version"] == 1 and report["timing"] is None


def test_irred_reducible_carries_witness():
    code, report, _ = invoke("irred", *F9, "--poly", "t^2 - 2")
    res = report["results"]
    assert code == 0 and res["verdict"] == "Reducible"
    assert res["witness"] and len(res["factorization"]) == 2


def test_aut_dicyclic():
    # g^2 = -1 = 2 in F_9 with modulus x^2 + 1
    code, report, _ = invoke("aut", *F9, "--poly", "t^2 - g")
    res = report["results"]
    assert code == 0
    assert res["classification"] == "Dicyclic(2)" and res["order"] == 8
    assert set(res["generators"]) == {"x", "y"}
    assert all(res["relations"].values()) and res["oracle_agrees"] is True


def test_counting_verbs():
    code, report, _ = invoke("count-irred", "3", "2", "1", "2")
    assert code == 0 and report["results"]["count"] == 6
    code, report, _ = invoke("count-irred", "3", "2", "1", "2", "--oracle")
    assert report["results"]["oracle_agrees"] is True
    code, report, _ = invoke("count-irred", "2", "2", "1", "3")
    assert code == 2 and report["error"]["kind"] == "inapplicable"
    code, report, _ = invoke("exists-irred", "2", "6", "2", "3")
    assert code == 0 and report["results"]["exists"] and report["results"]["witness"]


def test_algebra_verbs():
    code, report, _ = invoke("mul", "--field", "Fq(2,2)", "--sigma", "frob(1)", "--poly", "t^2 - g", "--x", "t", "--y", "t")
    assert code == 0 and report["results"]["product"] == "g"
    code, report, _ = invoke("nuclei", *F9, "--poly", "t^2 - g")
    assert report["results"]["sizes"]["nucleus"] == 9
    code, report, _ = invoke("eigenring", *F9, "--poly", "t^2 - g")
    assert report["results"]["size"] == 9
    code, report, _ = invoke("division-status", "--field", "Fq(2,2)", "--sigma", "frob(1)", "--poly", "t^2 + 1")
    assert report["results"]["kind"] == "ZeroDivisors"
    code, report, _ = invoke("division-status", "--field", "Rat(2,1)", "--sigma", "ysq", "--poly", "t^2 - y")
    assert report["results"]["kind"] == "RightNotLeftDivision"
    code, report, _ = invoke("semimult", *F9, "--poly", "t^2 - g", "--g", "1")
    assert report["results"]["value"] == "1"
    code, report, _ = invoke("divmod", *F9, "--poly", "t^3 + g", "--by", "t - 1", "--side", "left")
    assert code == 0 and report["results"]["side"] == "left"


def test_morphism_verbs():
    code, report, _ = invoke("iso", *F9, "--poly", "t^2 - g", "--poly2", "t^2 - 2*g")
    assert code == 0 and report["results"]["isomorphic"]
    code, report, _ = invoke("iso-classes", *F9, "--m", "2")
    assert report["results"]["count"] == 2
    code, report, _ = invoke("inner", *F9, "--poly", "t^2 - (1+g)")
    assert report["results"]["order"] == 4


def test_parse_error_reports_position():
    code, report, _ = invoke("irred", *F9, "--poly", "t^2 - g)")
    assert code == 1
    assert report["error"]["kind"] == "parse" and report["error"]["position"] == 7


@pytest.mark.parametrize("argv", [
    ["irred", "--field", "Fq(4,1)", "--poly", "t^2"],
    ["irred", "--field", "Fq(3,2)", "--sigma", "frob(x)", "--poly", "t^2"],
    ["mul", *F9, "--poly", "t^2 - g"],
    ["nuclei", *F9, "--poly", "t"],
])
def test_input_errors_exit_one(argv):
    code, report, _ = invoke(*argv)
    assert code == 1 and "error" in report


def test_bound_exceeded_exits_two(monkeypatch):
    monkeypatch.setenv("PETIT_MAX_EXHAUST", "10")
    code, report, _ = invoke("nuclei", *F9, "--poly", "t^2 - g")
    assert code == 2 and report["error"]["kind"] == "inapplicable"


def test_pretty_goes_to_stderr_and_timing_is_opt_in():
    code, report, err = invoke("irred", *F9, "--poly", "t^2 - g", "--pretty", "--timing")
    assert "verdict" in err and report["timing"]["ms"] >= 0


def test_byte_identical_across_processes():
    argv = [sys.executable, "-m", "petit.cli", "aut", *F9, "--poly", "t^2 - g"]
    first = subprocess.run(argv, capture_output=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, check=True).stdout
    assert first == second and json.loads(first)["results"]["order"] == 8
