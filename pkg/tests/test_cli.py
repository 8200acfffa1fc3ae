import io
import json
import subprocess
import sys

import pytest

from csl.cli import emit_json, jsonable, main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def test_quad_text():
    code, out = run("quad", "-d", "-3", "-f", "2")
    assert code == 0 and "2 classes" in out and "Boolean: true" in out
    code, out = run("quad", "-d", "-3", "-f", "1")
    assert "1 class\n" in out
    code, out = run("quad", "-d", "-15", "-f", "1")
    assert "2 classes" in out and "Boolean: false" in out and "Clifford: true" in out


def test_quad_json_deterministic_and_round_trips():
    code, a = run("quad", "-d", "-23", "-f", "2", "--json")
    _, b = run("quad", "-d", "-23", "-f", "2", "--json")
    assert code == 0 and a == b
    data = json.loads(a)
    assert emit_json(data) + "\n" == a
    assert data["clifford"] and len(data["classes"]) == len(data["table"])
    assert sorted(data["group_orders"].values()) == [3, 3]  # h(-23) = h(-92) = 3


def test_quad_csv():
    code, out = run("quad", "-d", "-15", "--csv")
    lines = out.strip().splitlines()
    assert lines[0].startswith("label,norm") and len(lines) == 3


def test_window():
    code, out = run("window", "-c", "X^2", "-D", "const", "-I", "X^2-1,X^3-1", "--json")
    d = json.loads(out)
    assert code == 0 and d["regular"] and d["stable"] and not d["strongly_stable"] and d["endo_ring"] == "R"
    _, out = run("window", "-c", "X^2", "-I", "X^2,X^3", "--json")
    assert json.loads(out)["strongly_stable"]
    _, out = run("window", "-c", "X", "-I", "1", "--field", "F_5", "--json")
    d = json.loads(out)
    assert all(d[k] for k in ("regular", "stable", "strongly_stable", "l_stable"))


def test_pvd(tmp_path):
    from csl.pvd import biquadratic_over_Q, tower_to_json

    p = tmp_path / "tower.json"
    p.write_text(json.dumps(tower_to_json(biquadratic_over_Q())))
    code, out = run("pvd", "--tower", str(p), "--json")
    d = json.loads(out)
    assert code == 0 and not d["clifford"] and d["witness"]["strict"]
    code, out = run("pvd", "--preset", "q-sqrt2")
    assert "Boolean: true" in out


@pytest.mark.parametrize("eid", ["example-4.6", "example-5.2", "example-5.4", "theorem-5.1-witness", "theorem-5.5-dvr"])
def test_examples(eid):
    code, out = run("examples", eid)
    assert code == 0 and out.startswith("PASS")


def test_usage_errors(tmp_path, capsys):
    assert run("examples", "nope")[0] == 2
    assert run("quad", "-d", "5")[0] == 2
    assert run("quad", "-d", "-12")[0] == 2
    assert run("window", "-c", "X^3", "-D", "X", "-I", "1")[0] == 2
    assert run("window", "-c", "X^2", "-I", "X^")[0] == 2
    assert run("pvd", "--tower", str(tmp_path / "missing.json"))[0] == 2
    with pytest.raises(SystemExit) as e:
        main(["quad"])
    assert e.value.code == 2


def test_mismatch_exit_code(monkeypatch):
    from csl import registry

    spec = registry.REGISTRY["example-5.4"]
    monkeypatch.setattr(spec, "expected", {"boolean": False})
    code, out = run("examples", "example-5.4")
    assert code == 1 and out.startswith("FAIL") and "boolean: expected False, got True" in out


def test_jsonable():
    from fractions import Fraction

    obj = {1: (Fraction(1, 2), None, [True])}
    assert jsonable(obj) == {"1": ["1/2", None, [True]]}
    assert json.loads(emit_json(obj)) == jsonable(obj)


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "csl", "examples", "list"], capture_output=True, text=True)
    assert out.returncode == 0 and "criterion-12" in out.stdout
