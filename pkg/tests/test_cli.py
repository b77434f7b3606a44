import json

import pytest

from equivknot.cli import run
from equivknot.two_bridge import parse_fraction
from equivknot.unknotter import MoveLog


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_torus_unknot(capsys, tmp_path):
    path = tmp_path / "log.json"
    code, out, _ = call(capsys, "torus-unknot", "--p", "3", "--q", "5", "--verify", "--emit-log", str(path))
    assert code == 0
    assert "cost 4" in out and "log verifies" in out
    log = MoveLog.from_json(path.read_text())
    assert log.total_cost == 4
    code, out, _ = call(capsys, "verify-log", str(path))
    assert code == 0 and "log verifies" in out


def test_verify_log_failure(capsys, tmp_path):
    path = tmp_path / "log.json"
    call(capsys, "torus-unknot", "--p", "3", "--q", "5", "--emit-log", str(path))
    data = json.loads(path.read_text())
    data["steps"] = data["steps"][:-1]
    path.write_text(json.dumps(data))
    code, out, _ = call(capsys, "verify-log", str(path), "--json")
    assert code == 1 and json.loads(out)["ok"] is False
    path.write_text("{")
    assert call(capsys, "verify-log", str(path))[0] == 2


def test_u4_one(capsys):
    code, out, _ = call(capsys, "u4-one", "--fraction", "5/2")
    assert code == 0 and out.strip() == "u4 ≠ 1"
    code, out, _ = call(capsys, "u4-one", "--fraction", "3/1", "--json")
    data = json.loads(out)
    assert data["u4_equals_one"] and (data["witness"]["r"], data["witness"]["s"]) == (1, 1)


def test_cont_frac(capsys):
    code, out, _ = call(capsys, "cont-frac", "--coeffs", "6,-1,-9,-1,6")
    assert code == 0 and out.strip() == "-357/-50 (normalized 357/50)"
    code, out, _ = call(capsys, "--json", "cont-frac", "--coeffs", "6,-1,-9,-1,6")
    data = json.loads(out)
    assert str(parse_fraction(data["fraction"])) == data["fraction"] == "-357/-50"
    assert call(capsys, "cont-frac", "--coeffs", "3,0")[0] == 2


def test_jm(capsys):
    code, out, _ = call(capsys, "jm", "--m-range", "-5..2", "--json")
    rows = json.loads(out)["rows"]
    assert [r["m"] for r in rows] == list(range(-5, 3))
    assert rows[0]["fraction"] == "-357/-50" and rows[-1]["fraction"] == "329/48"
    assert not any(r["u4_equals_one"] for r in rows)
    assert call(capsys, "jm", "--m-range", "2..1")[0] == 2


def test_signature(capsys, tmp_path):
    path = tmp_path / "g.txt"
    path.write_text("3\n7 -1 0\n-1 -9 -1\n0 -1 7\n")
    code, out, _ = call(capsys, "signature", "--matrix", str(path), "--json")
    assert code == 0 and json.loads(out) == {"n_plus": 2, "n_minus": 1, "n_zero": 0, "signature": 1}
    path.write_text("2\n1 2\n3 1\n")
    code, _, err = call(capsys, "signature", "--matrix", str(path))
    assert code == 2 and "symmetric" in err


def test_bounds(capsys):
    code, out, _ = call(capsys, "bounds", "--knot", "K_3")
    assert code == 0 and "type A lower bound 3" in out
    code, out, _ = call(capsys, "bounds", "--knot", "4_1#4_1", "--json")
    assert json.loads(out)["type_B_lower"] == 4
    assert call(capsys, "bounds", "--knot", "J_m^+")[0] == 2
    assert call(capsys, "bounds", "--knot", "nope")[0] == 2


def test_bad_registry(capsys, tmp_path):
    path = tmp_path / "reg.json"
    path.write_text(json.dumps({"knots": [{"name": "X", "q1": "T(2,6)", "q2": "unknot", "provenance": "p"}]}, indent=1))
    code, _, err = call(capsys, "bounds", "--knot", "X", "--registry", str(path))
    assert code == 2 and "q1" in err and "line" in err


def test_nonadditivity_report(capsys):
    code, out, _ = call(capsys, "nonadditivity-report")
    assert code == 0 and "ũ(K₁#K₂) ≥ 3 > 2 = ũ(K₁)+ũ(K₂)" in out
    code, out, _ = call(capsys, "nonadditivity-report", "--m-range", "-10..10", "--json")
    data = json.loads(out)
    assert data["status"] == "PASS" and data["m_range"] == [-10, 10]


def test_intravergent_commands(capsys):
    assert call(capsys, "check-intravergent", "--word", "1 2", "--strands", "3")[0] == 0
    assert call(capsys, "check-intravergent", "--word", "1 1", "--strands", "3")[0] == 1
    code, out, _ = call(capsys, "unknot-braid", "--word", "1,2,3,4,1,2,3,4", "--strands", "5", "--verify", "--json")
    data = json.loads(out)
    assert code == 0 and data["total_cost"] == 2 and data["verified"]
    assert call(capsys, "unknot-braid", "--word", "1 1", "--strands", "3")[0] == 2


@pytest.mark.parametrize("argv", [[], ["frobnicate"], ["torus-unknot", "--p", "4", "--q", "6"], ["u4-one", "--fraction", "4/1"]])
def test_usage_errors(capsys, argv):
    code, out, err = call(capsys, *argv)
    assert code == 2 and "usage" in err and out == ""


def test_json_outputs_are_deterministic(capsys):
    first = call(capsys, "torus-unknot", "--p", "5", "--q", "3", "--json")[1]
    assert first == call(capsys, "torus-unknot", "--p", "5", "--q", "3", "--json")[1]
