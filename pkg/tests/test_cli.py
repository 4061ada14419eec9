import json
from pathlib import Path

import pytest

from tmk.cli import EX_USAGE, main
from tmk.report import ANCHORS, bundle, render, text_table
from tmk.pipelines import Check

ROOT = Path(__file__).resolve().parents[1]


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_bb_skip_mpcp(capsys):
    code, out = run(capsys, "bb", "--skip-mpcp")
    data = json.loads(out)
    assert code == 0
    assert [c["anchor"] for c in data["checks"]] == [
        "nef-duality", "normal-fan-rays", "normal-fan-cones", "normal-fan-cones"]
    assert data["summary"]["errata"] == 1


def test_reports_are_byte_identical(capsys):
    first = run(capsys, "n2")[1]
    second = run(capsys, "n2")[1]
    assert first == second
    assert "wall_time" not in first
    assert "wall_time" in run(capsys, "n2", "--timings")[1]


def test_expect_file(capsys, tmp_path):
    path = tmp_path / "cones.json"
    path.write_text(json.dumps({"max_cones": [[0, 1, 2, 9, 10]]}))
    code, out = run(capsys, "bb", "--expect", str(path))
    table = [c for c in json.loads(out)["checks"] if c["anchor"] == "mpcp-table"][0]
    assert code == 0 and table["status"] == "pass"
    assert table["details"]["common"] == 1 and not table["details"]["identical"]


@pytest.mark.parametrize("value", ["1", "-1", "0", "x"])
def test_bad_lambda_rejected(capsys, value):
    with pytest.raises(SystemExit) as exc:
        main(["lt", "--lambda", value])
    assert exc.value.code == EX_USAGE


def test_lt_budget_exhaustion_is_undecided(capsys):
    code, out = run(capsys, "lt", "--budget", "3")
    data = json.loads(out)
    lt = [c for c in data["checks"] if c["anchor"] == "lt-radical-containment"][0]
    assert lt["status"] == "undecided" and code == 2
    assert all(lt["details"]["key_monomial_covers"].values())
    assert {c["anchor"] for c in data["checks"]} <= set(ANCHORS)


def test_small_verbs(capsys):
    code, out = run(capsys, "groebner", "--vars", "x,y", "x^2 - y", "x*y - 1")
    assert code == 0 and json.loads(out)["generators"] == ["y^2 - x", "x * y - 1", "x^2 - y"]
    code, out = run(capsys, "radical", "x", "--vars", "x,y", "--ideal", "x^3", "y")
    assert json.loads(out)["member"] is True
    code, out = run(capsys, "cox", "--builtin", "lt")
    assert json.loads(out)["torsion"] == ["3", "3", "9"]
    code, out = run(capsys, "dualcone", "--builtin", "lt-total")
    assert len(json.loads(out)["dual_cone"]) == 12
    code, out = run(capsys, "subdivide")
    assert len(json.loads(out)["cells"]) == 12
    with pytest.raises(SystemExit) as exc:
        main(["subdivide", "--weights", "1,2"])
    assert exc.value.code == EX_USAGE
    code, out = run(capsys, "triangulate", "--format", "text")
    assert "witness:" in out and "passed: True" in out


def test_emit(capsys, tmp_path):
    code, out = run(capsys, "emit", "lt", "--format", "json")
    assert json.loads(out)["validation"]["is_complete"]
    report = tmp_path / "r.json"
    main(["bb", "--skip-mpcp", "-o", str(report)])
    code, out = run(capsys, "emit", "report", str(report), "--format", "text")
    assert out.startswith("pass") and "exit 0" in out
    code, out = run(capsys, "emit", "bb-triangulation")
    assert len(json.loads(out)["cells"]) == 42


def test_fan_file_input(capsys, tmp_path):
    path = tmp_path / "fan.json"
    path.write_text(json.dumps({"dim": 2, "rays": [[1, 0], [0, 1], [-1, -1]],
                                "max_cones": [[0, 1], [1, 2], [0, 2]]}))
    code, out = run(capsys, "cox", "--fan", str(path))
    assert json.loads(out)["group_order"] == "1"


def test_every_anchor_is_documented():
    readme = (ROOT / "README.md").read_text()
    for anchor in ANCHORS:
        assert f"`{anchor}`" in readme, anchor


def test_text_rendering():
    rep = bundle("x", [Check("c", "nef-duality", "pass", {"n": 1})])
    assert text_table(rep).splitlines()[0].split() == ["pass", "nef-duality", "c"]
    assert json.loads(render(rep)) == rep
