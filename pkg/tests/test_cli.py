import io
import json
import subprocess
import sys

import pytest

from g2twist.cli import parse_records, run_batch, run_cli, tables_markdown

GOOD = "1,0,0,0,0,-1,0"


def _run(*argv):
    out = io.StringIO()
    code = run_cli(list(argv), out)
    return code, out.getvalue()


def _json(text):
    return [json.loads(line) for line in text.splitlines() if line.strip()]


def test_classify_good_reduction():
    code, text = _run("classify", "--prime", "7", "--coeffs", GOOD)
    assert code == 0
    (rec,) = _json(text)
    assert rec["stable_shape"] == "I-Smooth"
    assert rec["type_X"] == "I[0,0,0]"
    assert rec["valuations"]["J10"] == 0
    assert rec["schema_version"] == 1


def test_twist_good_reduction():
    code, text = _run("twist", "-p", "7", "-c", GOOD, "--d", "7")
    assert code == 0
    (rec,) = _json(text)
    assert rec["twist"]["type_Xchi"] == "Istar[0,0,0]"
    assert rec["twist"]["parity"] == "ramified"
    assert rec["twist"]["primed"]["n"] == 2


def test_invariants_subcommand():
    code, text = _run("invariants", "-p", "7", "-c", "1,0,0,0,0,0,-1")
    assert code == 0
    (rec,) = _json(text)
    # disc(x^6 - 1) = 46656 = 4096 * 729/64
    assert rec["invariants"]["J10"] == "729/64"
    assert rec["valuations"]["J10"] == 0


@pytest.mark.parametrize("argv", [
    ["classify", "-p", "4", "-c", GOOD],
    ["classify", "-p", "7", "-c", "1,2,3"],
    ["classify", "-p", "7", "-c", "1,x,0,0,0,0,1"],
    ["twist", "-p", "7", "-c", GOOD, "--d", "0"],
    ["classify", "-p", "7"],
    ["nonsense"],
])
def test_bad_input_exits_1(argv, capsys):
    code, _ = _run(*argv)
    assert code == 1


CHAR3_TWO_COMPONENTS = "1,-16,95,-260,324,-144,0"


def test_classification_failure_exits_2():
    code, text = _run("classify", "-p", "3", "-c", CHAR3_TWO_COMPONENTS)
    (rec,) = _json(text)
    assert code == 2
    assert rec["errors"][0].startswith("[ramification]")


def test_remark_rows_report_both_readings():
    # roots 0, 7, 7 + 49, 1, 2, 3: one elliptic component, n = 2 and d odd
    P = "1,-69,781,-3051,4690,-2352,0"
    (rec,) = _json(_run("classify", "-p", "7", "-c", P)[1])
    assert rec["stable_shape"] == "VI-OneSmoothOneSingular"
    assert rec["type_X"] is None
    readings = {x for x, _ in rec["candidates"]}
    assert len(readings) == 2
    picked = set()
    for flag in ("yes", "no"):
        code, text = _run("classify", "-p", "7", "-c", P, "--e1-smooth", flag)
        (one,) = _json(text)
        assert code == 0
        picked.add(one["type_X"])
    assert picked == readings


def test_audit_tables():
    code, text = _run("audit-tables")
    assert code == 0
    assert "violations: 0" in text
    assert "char-5 concordance: 8/8" in text


def test_tables_listing():
    code, text = _run("tables")
    assert code == 0
    assert len(text.splitlines()) == 108
    assert "## smooth" in tables_markdown()


def test_verify_sweep_seed_from_environment(monkeypatch, tmp_path):
    monkeypatch.setenv("GENUS2_SEED", "5")
    jsonl = tmp_path / "reports.jsonl"
    code, a = _run("verify", "--count", "30", "--jsonl", str(jsonl))
    assert code == 0
    code, b = _run("verify", "--count", "30", "--seed", "5")
    assert a == b
    reports = _json(jsonl.read_text())
    assert len(reports) == 30
    assert all(len(r["records"]) == 2 for r in reports)
    monkeypatch.setenv("GENUS2_SEED", "x")
    assert _run("verify", "--count", "3")[0] == 1


def test_verify_input_file(tmp_path):
    f = tmp_path / "in.csv"
    f.write_text("id,a0,a1,a2,a3,a4,a5,a6,p,D\ngood,1,0,0,0,0,-1,0,7,7\nnode,1,-17,95,-225,274,-120,0,11,11\n")
    code, text = _run("verify", "--input", str(f))
    assert code == 0
    recs = _json(text)
    assert [r["index"] for r in recs] == ["good", "node"]
    assert all(r["status"] == "agree" for r in recs)


CSV = """id,a0,a1,a2,a3,a4,a5,a6,p,D
a,1,0,0,0,0,-1,0,7,7
b,1,0,0,0,0,-1,0,7,
c,1,-10,35,-50,24,0,0,3,3
d,1,0,0,0,0,-1,0,7,49
"""


def test_batch_csv_keeps_order(tmp_path):
    f = tmp_path / "in.csv"
    f.write_text(CSV)
    out = io.StringIO()
    code = run_cli(["batch", str(f), "--workers", "3"], out)
    recs = _json(out.getvalue())
    assert [r["id"] for r in recs] == ["a", "b", "c", "d"]
    assert code == 2  # record c has a repeated root
    assert recs[0]["twist"]["type_Xchi"] == "Istar[0,0,0]"
    assert recs[1]["twist"] is None and recs[1]["type_X"] == "I[0,0,0]"
    assert recs[2]["errors"]
    assert recs[3]["twist"]["type_Xchi"] == "I[0,0,0]"


def test_batch_json_matches_csv(tmp_path):
    csv_recs = parse_records(CSV, "in.csv")
    rows = [{"id": r.id, "coefficients": [str(c) for c in r.curve.coeffs], "p": r.ctx.p,
             "D": None if r.D is None else str(r.D)} for r in csv_recs]
    jsonl = "\n".join(json.dumps(r) for r in rows)
    json_recs = parse_records(jsonl, "in.jsonl")
    assert run_batch(json_recs, 2) == run_batch(csv_recs, 1)
    assert parse_records(json.dumps(rows), "in.json") == json_recs


def test_batch_rejects_malformed_rows(tmp_path):
    f = tmp_path / "bad.csv"
    f.write_text("id,a0,a1,a2,a3,a4,a5,a6,p,D\nx,1,0,0,0,0,-1,0,6,7\n")
    assert run_cli(["batch", str(f)], io.StringIO()) == 1
    assert run_cli(["batch", str(tmp_path / "missing.csv")], io.StringIO()) == 1


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "g2twist", "twist", "-p", "7", "-c", GOOD, "-D", "7"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["twist"]["type_Xchi"] == "Istar[0,0,0]"
