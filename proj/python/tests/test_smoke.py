import json
from fractions import Fraction

import pytest

import folres


def test_polynomial_roundtrip():
    p = folres.Polynomial("x^2*y - 3/2*z", ["x", "y", "z"])
    assert p.total_degree == 3
    assert p.evaluate([2, 1, Fraction(2, 3)]) == "3"
    assert str(p.derivative("x")) == str(folres.parse_polynomial("2*x*y", ["x", "y", "z"]))


def test_parse_error_raises():
    with pytest.raises(folres.FolresError):
        folres.parse_polynomial("2x", ["x"])


def test_integrability():
    v = ["x", "y", "z"]
    assert folres.is_integrable(["2*y*z", "3*x*z", "4*x*y"], v)
    assert not folres.is_integrable(["y", "z", "x"], v)
    assert folres.is_invariant(["2*y*z", "3*x*z", "4*x*y"], v, "z")


def test_worked_example():
    code, report = folres.worked_example()
    assert code == 0
    bb = [e for e in report["indices"] if e["kind"] == "BB"]
    assert {e["fraction"] for e in bb} == {Fraction(-1, 12)}
    var = {e["hypersurface"]: e["fraction"] for e in report["indices"] if e["kind"] == "Var"}
    assert var["V3"] == Fraction(1, 4)
    assert var["V2"] == Fraction(-1, 3)
    assert all(a["pass"] for a in report["assertions"])


def test_job_dict_and_exit_codes():
    job = folres.worked_example_job()
    code, _ = folres.run("indices", job)
    assert code == 0
    code, report = folres.run("indices", "{ not json")
    assert code == 1
    assert report["error"]["code"] == "SyntaxError"
    code, _ = folres.run("global", job)
    assert code == 1


def test_determinism():
    job = json.dumps(folres.worked_example_job())
    assert folres.run("indices", job) == folres.run("indices", job)
