import json
import subprocess
import sys

import pytest

from toricsl2.cli import main, parse_vectors, render, run


def kv(result):
    return dict(line.split("=", 1) for line in render(result, False).splitlines())


def test_classify_toric():
    out = kv(run(["classify", "--p", "1", "--q", "2", "--r", "2"]))
    assert out["toric"] == "true" and out["l"] == "2"
    assert out["class_group"] == "Z + Z_2" and out["height"] == "1/2"


def test_classify_non_toric():
    res = run(["classify", "--p", "1", "--q", "3", "--r", "3"])
    assert res.exit_code == 0
    out = kv(res)
    assert out["toric"] == "false" and out["reason"] == "q-p=2 does not divide r=3"


def test_classify_height_one_reason():
    out = kv(run(["classify", "--p", "1", "--q", "1", "--r", "5"]))
    assert out["toric"] == "false" and "q-p=0" in out["reason"]


def test_dual_example():
    out = kv(run(["dual", "--dim", "3", "--rays", "1,0,0;0,1,0;-1,0,2;0,-1,1"]))
    assert set(out["rays"].split(";")) == {"0,0,1", "2,0,1", "0,1,1", "2,1,1"}


def test_dual_roundtrip(tmp_path):
    first = run(["--machine", "dual", "--rays", "1,0,0;0,1,0;-1,0,2;0,-1,1"])
    f = tmp_path / "dual.json"
    f.write_text(json.dumps(first.payload))
    back = run(["dual", "--file", str(f)])
    canon = run(["cone", "--rays", "1,0,0;0,1,0;-1,0,2;0,-1,1"])
    assert back.payload["rays"] == canon.payload["rays"]


def test_deterministic():
    argv = ["--machine", "hilbert", "--equalities", "1,1,-2,-2", "--congruences", "1,1,0,0:4"]
    assert render(run(argv), True) == render(run(argv), True)


def test_hilbert_cone_with_oracle():
    res = run(["hilbert", "--rays", "1,0;1,2", "--oracle", "--bound", "8"])
    out = kv(res)
    assert res.exit_code == 0 and out["basis"] == "1,0;1,1;1,2" and out["oracle.agree"] == "true"


def test_hilbert_system_file(tmp_path):
    f = tmp_path / "s.json"
    f.write_text(json.dumps({"vars": 4, "equalities": [[1, 1, -2, -2]],
                             "congruences": [{"row": [1, 1, 0, 0], "mod": 4}]}))
    assert run(["hilbert", "--file", str(f)]).payload["size"] == 15


def test_invariants_and_class_group():
    assert run(["invariants", "--p", "1", "--q", "2", "--r", "1"]).payload["size"] == 6
    assert run(["invariants", "--torus", "1,-1"]).payload["generators"] == [[1, 1]]
    out = kv(run(["class-group", "--p", "1", "--q", "2", "--r", "6"]))
    assert out["class_group"] == "Z + Z_6"


def test_divisor():
    res = run(["divisor", "--p", "1", "--q", "2", "--r", "1", "--m", "1,0,0",
               "--divisor", "1,0,0,0", "--equivalent", "0,0,0,0"])
    assert res.payload["principal"] == [1, 0, -1, 0]
    assert res.payload["equivalent"] is False


def test_verify_and_exit_codes():
    assert run(["verify", "--p", "1", "--q", "2", "--r", "2", "--bound", "10"]).exit_code == 0
    assert run(["verify", "--p", "1", "--q", "3", "--r", "3"]).exit_code == 2


def test_grid():
    res = run(["--machine", "grid", "--Q", "3", "--R", "2"])
    cells = res.payload["cells"]
    assert all(c["p"] < c["q"] for c in cells)
    assert res.payload["toric_count"] == 5


@pytest.mark.parametrize("argv,field", [
    (["classify", "--p", "x"], "--p"),
    (["classify", "--p", "1", "--q", "2"], "--r"),
    (["cone", "--rays", "1,0;1"], "--rays"),
    (["cone", "--rays", "1,a"], "--rays[0]"),
    (["hilbert", "--rays", "1,0;-1,0"], "--rays"),
    (["hilbert", "--congruences", "1,1"], "--congruences[0]"),
    (["nosuch"], "invalid choice"),
])
def test_input_errors(argv, field):
    res = run(argv)
    assert res.status == "input_error" and res.exit_code == 2
    assert field in res.payload["error"]


def test_bad_json_reports_line(tmp_path):
    f = tmp_path / "bad.json"
    f.write_text('{"dim": 2,\n "rays": [1, 0]\n')
    res = run(["dual", "--file", str(f)])
    assert res.exit_code == 2 and "line" in res.payload["error"]
    g = tmp_path / "missing.json"
    g.write_text('{"dim": 2}')
    assert "rays" in run(["dual", "--file", str(g)]).payload["error"]


def test_parse_vectors():
    assert parse_vectors("1,0;0,1", "x") == [(1, 0), (0, 1)]
    assert parse_vectors("", "x") == []


def test_main_exit_code(capsys):
    assert main(["classify", "--p", "1", "--q", "2", "--r", "1"]) == 0
    assert "toric=true" in capsys.readouterr().out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "toricsl2", "--machine", "classify",
                           "--p", "2", "--q", "3", "--r", "3"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["class_group"] == "Z + Z_3"
