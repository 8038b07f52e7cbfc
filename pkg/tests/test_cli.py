import json
import subprocess
import sys

import jsonschema
import pytest

from germlab.serialize import load_schema

SCHEMA = load_schema()


def run(*args):
    proc = subprocess.run(
        [sys.executable, "-m", "germlab", *args], capture_output=True, text=True, timeout=300
    )
    return proc.returncode, proc.stdout, proc.stderr


def run_json(*args):
    code, out, err = run(*args, "--json", "-")
    doc = json.loads(out)
    jsonschema.validate(doc, SCHEMA)
    assert doc["schema_version"] == "1"
    return code, doc


def test_verify_worked_instance():
    code, doc = run_json("verify", "--vars", "x,y", "--map", "x; y^2", "x^3 - y^2")
    assert code == 0
    res = doc["result"]
    assert res["mu_V"] == {"kind": "finite", "mu": 2}
    assert res["mu_W"] == {"kind": "finite", "mu": 6}
    assert res["inequality"]["status"] == "holds"
    assert (res["r"], res["pure"]) == (1, True)


def test_verify_skip_exit_code():
    code, doc = run_json("verify", "--vars", "x,y", "--map", "x; x*y", "x^3 - y^2")
    assert code == 3
    assert doc["result"]["inequality"] == {"status": "skipped", "reason": "map_not_finite"}


def test_milnor_exit_codes():
    code, doc = run_json("milnor", "--vars", "x,y", "x^2*y^2")
    assert code == 3 and doc["result"] == {"kind": "non_isolated"}
    code, doc = run_json("milnor", "--vars", "x,y", "x^3 - y^2")
    assert code == 0 and doc["result"] == {"kind": "finite", "mu": 2}
    code, doc = run_json("milnor", "--vars", "x,y", "x + y^2")
    assert code == 0 and doc["result"] == {"kind": "smooth_point", "mu": 0}
    code, out, _ = run("milnor", "--vars", "x,y", "x^3 - y^2")
    assert out.strip() == "Finite(2)"


@pytest.mark.parametrize(
    "args",
    [
        ("milnor", "--vars", "x,y", "x^-1"),
        ("milnor", "--vars", "x,y", "x + q"),
        ("milnor", "--vars", "x,y", "0"),
        ("milnor", "--vars", "x,x", "x"),
        ("mult", "--vars", "x,y", "--map", "x"),
        ("mult", "--vars", "x,y", "--map", "x + 1; y"),
        ("verify", "--vars", "x,y", "--map", "x; y", "x^"),
        ("suite", "--cases", "0"),
        ("nf", "--vars", "x,y", "--ideal", "0", "x"),
        ("frobnicate",),
    ],
)
def test_input_errors_exit_2(args):
    code, out, err = run(*args)
    assert code == 2
    assert err.strip()
    assert out == ""


def test_mult():
    code, doc = run_json("mult", "--vars", "x,y", "--map", "x^2; y^3")
    assert code == 0 and doc["result"] == {"kind": "finite", "value": 6}
    code, doc = run_json("mult", "--vars", "x,y", "--map", "x; x*y")
    assert code == 3 and doc["result"] == {"kind": "not_finite"}


def test_pullback():
    code, doc = run_json("pullback", "--vars", "x,y", "--map", "x; y^2", "x^3 - y^2")
    assert code == 0
    assert doc["result"] == {"pullback": "-y^4 + x^3", "h": "y^4 - x^3", "r": 1, "pure": True}
    code, out, _ = run("pullback", "--vars", "x,y", "--map", "x^2; y", "x")
    assert "r = 2" in out and "pure = true" in out


def test_nf():
    code, doc = run_json("nf", "--vars", "x,y", "--ideal", "x - x^2", "x")
    assert code == 0 and doc["result"] == {"normal_form": "0"}
    code, out, _ = run("nf", "--vars", "x,y", "--ideal", "x - x^2", "x")
    assert out.strip() == "0"


def test_rationals_are_strings():
    # the leading monomial y is irreducible, so the weak normal form stops there
    code, doc = run_json("nf", "--vars", "x,y", "--ideal", "x^2", "1/3*y + x^3")
    assert doc["result"]["normal_form"] == "x^3 + 1/3*y"
    code, doc = run_json("nf", "--vars", "x,y", "--ideal", "y - 2*x^2", "3/4*y")
    assert doc["result"]["normal_form"] == "3/2*x^2"


def test_suite_json_file(tmp_path):
    path = tmp_path / "out.json"
    code, out, _ = run("suite", "--n", "2", "--cases", "12", "--seed", "7", "--json", str(path))
    assert code == 0 and "OK" in out
    doc = json.loads(path.read_text())
    jsonschema.validate(doc, SCHEMA)
    assert len(doc["result"]["cases"]) == 12
    assert isinstance(doc["timing"]["elapsed_ms"], int)


def _no_floats(obj):
    if isinstance(obj, float):
        return False
    if isinstance(obj, dict):
        return all(_no_floats(v) for v in obj.values())
    if isinstance(obj, list):
        return all(_no_floats(v) for v in obj)
    return True


def test_suite_json_has_no_floats():
    code, doc = run_json("suite", "--n", "3", "--cases", "6", "--seed", "1")
    assert code == 0
    assert _no_floats(doc)


def test_schema_rejects_numeric_infinity():
    doc = {"schema_version": "1", "command": "milnor", "inputs": {"vars": ["x"], "f": "x^2"},
           "result": {"kind": "non_isolated", "mu": 1e308}}
    with pytest.raises(jsonschema.ValidationError):
        jsonschema.validate(doc, SCHEMA)
