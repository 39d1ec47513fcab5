import json
import subprocess
import sys

from pshlab.cli import main

RUN = [sys.executable, "-m", "pshlab"]


def run_cli(args, **kwargs):
    return subprocess.run(RUN + args, capture_output=True, text=True, **kwargs)


def test_analyze_m4(capsys):
    rc = main(["analyze", "--preset", "theorem1", "--m", "4",
               "--no-timestamp"])
    assert rc == 0
    payload = json.loads(capsys.readouterr().out)
    result = payload["results"][0]
    assert result["ideal"] == {"b": [2, 2, 2], "e": 7, "p": 1}
    assert result["generators"] == ["(x*y*(x+y))^2 * x", "(x*y*(x+y))^2 * y"]
    assert result["class"] == {"gamma": ["1/2", "1/2", "1/2"], "delta": "1/4"}
    assert result["lelong"] == "7/4"
    assert "generated_at" not in payload


def test_analyze_point_preset(capsys):
    rc = main(["analyze", "--preset", "point", "--m", "2", "--no-timestamp"])
    assert rc == 0
    result = json.loads(capsys.readouterr().out)["results"][0]
    assert result["ideal"] == {"b": [], "e": 1, "p": 1}
    assert result["class"]["delta"] == "1/2"


def test_analyze_rejects_m0():
    proc = run_cli(["analyze", "--preset", "theorem1", "--m", "0"])
    assert proc.returncode == 2
    assert "must be >= 1" in proc.stderr


def test_sequence_reports_violations(capsys):
    rc = main(["sequence", "--preset", "theorem1", "--m-max", "40",
               "--no-timestamp"])
    assert rc == 0
    payload = json.loads(capsys.readouterr().out)
    violations = [tuple(v) for v in payload["violations"]]
    assert (3, 4) in violations and (6, 7) in violations


def test_sequence_smooth_no_violations(capsys):
    rc = main(["sequence", "--preset", "smooth", "--m-max", "40",
               "--no-timestamp"])
    assert rc == 0
    assert json.loads(capsys.readouterr().out)["violations"] == []


def test_sequence_pow2_indices(capsys):
    rc = main(["sequence", "--preset", "theorem1", "--indices", "pow2",
               "--k-max", "10", "--no-timestamp"])
    assert rc == 0
    sub = json.loads(capsys.readouterr().out)["subsequence"]
    assert sub["decreasing"] is True
    assert sub["indices"][:3] == [2, 4, 8]


def test_compare_command(capsys):
    rc = main(["compare", "--preset", "theorem1", "--m1", "4", "--m2", "3",
               "--no-timestamp"])
    assert rc == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["comparison"]["relation"] == "second_more_singular"


def test_lct_command(capsys):
    rc = main(["lct", "--preset", "theorem1", "--format", "md"])
    assert rc == 0
    assert capsys.readouterr().out.strip() == "lct = 1"


def test_output_file(tmp_path, capsys):
    out = tmp_path / "report.json"
    rc = main(["lct", "--preset", "point", "--no-timestamp",
               "--output", str(out)])
    assert rc == 0
    assert capsys.readouterr().out == ""
    assert json.loads(out.read_text())["lct"] == "2"


def test_verify_paper_exit_codes(capsys):
    rc = main(["verify-paper", "--no-timestamp"])
    payload = json.loads(capsys.readouterr().out)
    assert rc == 0 and payload["all_passed"] is True
    assert len(payload["claims"]) == 8
    rc = main(["verify-paper", "--claims", "prop2", "--no-timestamp"])
    payload = json.loads(capsys.readouterr().out)
    assert rc == 0 and len(payload["claims"]) == 1


def test_verify_paper_unknown_claim():
    proc = run_cli(["verify-paper", "--claims", "bogus"])
    assert proc.returncode == 2


def test_verify_paper_failing_claim_exits_1(monkeypatch, capsys):
    import pshlab.sequence as seq

    def broken():
        return seq.ClaimResult("broken", "always fails", False, {})

    monkeypatch.setitem(seq.CLAIMS, "broken", broken)
    rc = main(["verify-paper", "--claims", "broken", "--no-timestamp"])
    assert rc == 1
    assert json.loads(capsys.readouterr().out)["all_passed"] is False


def test_corrupted_arrangement_file(tmp_path):
    bad = tmp_path / "broken.json"
    bad.write_text('{"lines": [[[1, 0]]]', encoding="utf-8")
    proc = run_cli(["lct", "--file", str(bad)])
    assert proc.returncode == 2
    assert "line" in proc.stderr  # parse diagnostic with position info


def test_arrangement_file_round_trip(tmp_path, capsys):
    path = tmp_path / "arr.json"
    path.write_text(json.dumps({
        "lines": [[["1", "0"], ["0", "0"]]],
        "coeffs": ["1"],
        "point_mass": "0",
    }), encoding="utf-8")
    rc = main(["lct", "--file", str(path), "--format", "md"])
    assert rc == 0
    assert capsys.readouterr().out.strip() == "lct = 1"


def test_bergman_rejects_small_samples():
    proc = run_cli(["bergman", "--preset", "theorem1", "--m1", "3",
                    "--m2", "4", "--samples", "100"])
    assert proc.returncode == 2
    assert "sphere_samples" in proc.stderr


def test_bergman_scan_and_determinism(tmp_path):
    args = ["bergman", "--preset", "theorem1", "--m1", "3", "--m2", "4",
            "--curve", "x=y", "--tmin", "1e-3", "--tmax", "1e-1",
            "--samples", "20000", "--seed", "42", "--max-degree", "8",
            "--no-timestamp"]
    first = run_cli(args)
    second = run_cli(args)
    assert first.returncode == 0
    assert first.stdout == second.stdout  # byte-identical with equal seeds
    payload = json.loads(first.stdout)
    assert payload["verdict"] == "UNBOUNDED"
    assert payload["slope"] < -0.1


def test_bergman_ray_mode(capsys):
    rc = main(["bergman", "--preset", "point", "--m", "2", "--samples",
               "20000", "--seed", "1", "--max-degree", "6",
               "--rays", "4", "--no-timestamp"])
    assert rc == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["symbolic_lelong"] == "1/2"
    assert abs(payload["lelong_estimate"] - 0.5) < 0.05


def test_bergman_csv_table(capsys):
    rc = main(["bergman", "--preset", "smooth", "--m1", "2", "--m2", "3",
               "--samples", "10000", "--seed", "3", "--max-degree", "6",
               "--points", "5", "--format", "csv"])
    assert rc == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "t,phi_m1,phi_m2,delta"
    assert len(lines) == 6


def test_usage_requires_m_flags():
    proc = run_cli(["bergman", "--preset", "theorem1"])
    assert proc.returncode == 2
