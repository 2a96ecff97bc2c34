import dataclasses
import json

from pisano_lab import _checks, complete, render
from pisano_lab.cli import main
from pisano_lab.render import build_scene, render_frames, render_svg
from pisano_lab.subseq import SubsequenceSpec

from oracles import PARENT_PERIOD_10, PERIOD_MOD_8


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_period_text(capsys):
    code, out, _ = run(capsys, "period", "10")
    assert code == 0
    lines = out.splitlines()
    assert "length: 60" in lines
    assert "period: " + " ".join(str(v) for v in PARENT_PERIOD_10) in lines


def test_period_json_matches_text(capsys):
    code, text_out, _ = run(capsys, "period", "8")
    assert code == 0
    code, json_out, _ = run(capsys, "period", "8", "--format", "json")
    assert code == 0
    report = json.loads(json_out)
    assert report["command"] == "period"
    assert report["inputs"] == {"m": 8}
    assert report["results"]["length"] == 12
    assert tuple(report["results"]["period"]) == PERIOD_MOD_8
    # identical numeric content in both formats
    assert f"length: {report['results']['length']}" in text_out
    assert " ".join(str(v) for v in report["results"]["period"]) in text_out


def test_period_flag_form(capsys):
    code, out, _ = run(capsys, "period", "--m", "8")
    assert code == 0
    assert "length: 12" in out


def test_period_rejects_double_or_missing_modulus(capsys):
    code, _, err = run(capsys, "period", "8", "--m", "8")
    assert code == 2 and "once" in err
    code, _, err = run(capsys, "period")
    assert code == 2 and "required" in err


def test_period_rejects_small_modulus(capsys):
    code, _, err = run(capsys, "period", "1")
    assert code == 2
    assert "modulus" in err


def test_classify_worked_example(capsys):
    code, out, _ = run(capsys, "classify", "--k", "9", "--r", "13", "--format", "json")
    assert code == 0
    results = json.loads(out)["results"]
    assert (results["n"], results["q"], results["type"]) == (60, 13, "Type3")
    assert results["quasi"] == "forward"
    assert results["prediction"] == "forward"
    cert = results["certificate"]
    assert cert == {
        "unit_digit": 3,
        "log_index": 1,
        "zero_vertex": 15,
        "restart_index": 42,
        "first_zero": 12,
        "direction": "forward",
        "shift": 18,
    }


def test_classify_star_polygon_example(capsys):
    code, out, _ = run(capsys, "classify", "--k", "3", "--r", "25")
    assert code == 0
    for line in ("n: 12", "q: 5", "type: Type2", "convex: false", "quasi: forward"):
        assert line in out.splitlines()
    assert "certificate: none" in out


def test_classify_rejects_out_of_range(capsys):
    assert run(capsys, "classify", "--k", "0", "--r", "60")[0] == 2
    assert run(capsys, "classify", "--k", "60", "--r", "1")[0] == 2
    assert run(capsys, "classify", "--k", "0")[0] == 2  # argparse: missing --r


def test_unknown_command(capsys):
    assert run(capsys, "frobnicate")[0] == 2


def test_sweep_counts(capsys):
    code, out, _ = run(capsys, "sweep")
    assert code == 0
    rows = out.splitlines()
    assert len(rows) == 3540
    assert rows[0] == "k=0 r=1 n=60 q=1 type=Type3 quasi=forward prediction=forward shift=forward:0"
    assert rows[1].startswith("k=0 r=2 ")
    by_type = {"Type1": 0, "Type2": 0, "Type3": 0}
    for row in rows:
        for name in by_type:
            if f"type={name}" in row:
                by_type[name] += 1
    # 16 jump sizes are coprime to 60, and 19 expose a regular polygon
    assert by_type == {"Type1": 19 * 60, "Type2": 24 * 60, "Type3": 16 * 60}


def test_sweep_json_agrees_with_text(capsys):
    code, out, _ = run(capsys, "sweep", "--format", "json")
    assert code == 0
    report = json.loads(out)
    rows = report["results"]["rows"]
    assert report["results"]["row_count"] == 3540
    assert rows[0] == {
        "k": 0, "r": 1, "n": 60, "q": 1, "type": "Type3",
        "quasi": "forward", "prediction": "forward",
        "direction": "forward", "shift": 0,
    }
    assert rows[-1]["k"] == 59 and rows[-1]["r"] == 59
    assert sum(1 for row in rows if row["shift"] is not None) == 960


def test_verify_passes_and_reports_each_check(capsys):
    code, out, _ = run(capsys, "verify")
    assert code == 0
    lines = out.splitlines()
    assert lines[-1] == "verified: true"
    assert all(line.startswith("PASS ") for line in lines[:-1])
    assert len(lines) > 20


def test_verify_json_shape(capsys):
    code, out, _ = run(capsys, "verify", "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert report["verified"] is True
    assert all(check["passed"] for check in report["results"]["checks"])


def test_report_written_to_out_path(capsys, tmp_path):
    target = tmp_path / "report.json"
    code, _, _ = run(capsys, "classify", "--k", "3", "--r", "25", "--out", str(target))
    assert code == 0
    report = json.loads(target.read_text())
    assert report["results"]["n"] == 12


def test_diagram_single_file(capsys, tmp_path):
    target = tmp_path / "diagram.svg"
    code, out, _ = run(capsys, "diagram", "--k", "3", "--r", "25", "--out", str(target))
    assert code == 0
    assert f"wrote {target}" in out
    assert target.read_bytes() == render_svg(build_scene(SubsequenceSpec(k=3, r=25)))


def test_diagram_frames(capsys, tmp_path):
    target = tmp_path / "steps.svg"
    code, out, _ = run(capsys, "diagram", "--k", "3", "--r", "25", "--frames", "--out", str(target))
    assert code == 0
    frames = render_frames(SubsequenceSpec(k=3, r=25))
    paths = sorted(tmp_path.glob("steps-*.svg"))
    assert [p.name for p in paths] == [f"steps-{i:02d}.svg" for i in range(12)]
    for path, frame in zip(paths, frames):
        assert path.read_bytes() == frame


def test_diagram_steps_render_a_partial_walk(capsys, tmp_path):
    target = tmp_path / "ten.svg"
    code, _, _ = run(capsys, "diagram", "--k", "9", "--r", "13", "--steps", "10", "--out", str(target))
    assert code == 0
    document = target.read_text()
    assert document.count("<line ") == 10


def test_diagram_argument_errors(capsys, tmp_path):
    target = str(tmp_path / "x.svg")
    assert run(capsys, "diagram", "--k", "3", "--r", "25", "--steps", "0", "--out", target)[0] == 2
    assert run(capsys, "diagram", "--k", "3", "--r", "25", "--steps", "13", "--out", target)[0] == 2
    assert run(capsys, "diagram", "--k", "3", "--r", "25")[0] == 2  # --out required
    code, _, err = run(capsys, "diagram", "--k", "3", "--r", "25", "--frames", "--steps", "2", "--out", target)
    assert code == 2 and "combined" in err


def test_diagram_unwritable_path(capsys, tmp_path):
    target = tmp_path / "missing-dir" / "x.svg"
    code, _, err = run(capsys, "diagram", "--k", "3", "--r", "25", "--out", str(target))
    assert code == 3
    assert "error" in err


def test_unreduced_shift_bug_is_caught(monkeypatch):
    # simulate forgetting the final mod-60 reduction of the shift
    real = complete.compute_shift

    def buggy(k, r):
        cert = real(k, r)
        if cert.direction is complete.ShiftDirection.FORWARD:
            return dataclasses.replace(cert, shift=60 - cert.restart_index)
        return cert

    monkeypatch.setattr(_checks, "compute_shift", buggy)
    result = _checks.check_alignment_agreement()
    assert not result.passed
    assert "(k=0, r=1)" in result.detail


def test_reversed_orientation_is_caught(monkeypatch):
    monkeypatch.setattr(render, "_angle_degrees", lambda p: 90.0 + 6.0 * (p % 60))
    result = _checks.check_diagram_labels()
    assert not result.passed
