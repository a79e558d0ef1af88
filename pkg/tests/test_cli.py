import io
import json
import re
import subprocess
import sys
from pathlib import Path

import pytest

from oddschur.cli import main

GOLDEN_DIR = Path(__file__).parent / "golden" / "v1"

GOLDEN_CASES = {
    "lr_cancel_all": ["lr", "--mu", "[2,1]", "--nu", "[2,1]", "--lambda", "[3,2,1]", "--method", "all"],
    "lr_cancel_all_json": ["lr", "--mu", "[2,1]", "--nu", "[2,1]", "--lambda", "[3,2,1]", "--method", "all",
                           "--format", "json"],
    "lr_table_21_21": ["lr", "--mu", "[2,1]", "--nu", "[2,1]"],
    "lr_table_21_21_even": ["lr", "--mu", "[2,1]", "--nu", "[2,1]", "--method", "even"],
    "lr_table_21_1_json": ["lr", "--mu", "[2,1]", "--nu", "[1]", "--format", "json"],
    "kostka_3": ["kostka", "--k", "3"],
    "kostka_4_json": ["kostka", "--k", "4", "--format", "json"],
    "schur_21_n3": ["schur", "--lambda", "[2,1]", "--n", "3"],
    "schur_11_json": ["schur", "--lambda", "[1,1]", "--format", "json"],
    "hive_cancel_points": ["hive", "--mu", "[2,1]", "--nu", "[2,1]", "--lambda", "[3,2,1]", "--emit", "points"],
    "triangle_cancel_points": ["hive", "--mu", "[2,1]", "--nu", "[2,1]", "--lambda", "[3,2,1]",
                               "--emit", "points", "--polytope", "triangle"],
    "hive_signed_json": ["hive", "--mu", "[2,1]", "--nu", "[1]", "--lambda", "[2,1,1]", "--emit", "signed",
                         "--format", "json"],
    "pieri_21_v2": ["pieri", "--lambda", "[2,1]", "--k", "2", "--kind", "vertical"],
    "pieri_21_h2_json": ["pieri", "--lambda", "[2,1]", "--k", "2", "--kind", "horizontal", "--format", "json"],
    "plactic_long_word": ["plactic", "--word", "53422331112"],
    "plactic_231_json": ["plactic", "--word", "231", "--format", "json"],
    "verify_ring_3": ["verify", "--suite", "ring", "--max-degree", "3", "--verbose"],
}


def run(argv):
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


def strip_timing(text):
    return re.sub(r" in \d+\.\d+s$", "", text, flags=re.M)


@pytest.mark.parametrize("name", sorted(GOLDEN_CASES))
def test_golden_output(name, regen_golden):
    code, text = run(GOLDEN_CASES[name])
    assert code == 0
    text = strip_timing(text)
    path = GOLDEN_DIR / f"{name}.txt"
    if regen_golden:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text)
    assert path.exists(), f"missing golden file {path}; run pytest --regen-golden"
    assert text == path.read_text()


def test_lr_cancellation_all_methods():
    code, text = run(GOLDEN_CASES["lr_cancel_all_json"])
    payload = json.loads(text)
    assert code == 0
    assert payload["coeff"] == 0
    assert payload["agree"] is True
    assert set(payload["methods"]) == {"direct", "yamanouchi", "plactic", "triangle", "hive"}


def test_plactic_long_word():
    code, text = run(["plactic", "--word", "53422331112", "--format", "json"])
    payload = json.loads(text)
    assert code == 0
    assert payload["sign"] == 1
    assert payload["tableau"] == "1,1,1,2/2,2,3,3/3,4/5"


def test_lr_json_schema():
    _, text = run(["lr", "--mu", "[1]", "--nu", "[1]", "--format", "json"])
    rows = json.loads(text)
    assert {tuple(r["lambda"]) for r in rows} == {(2,), (1, 1)}
    for r in rows:
        assert set(r) == {"mu", "nu", "lambda", "coeff", "method"}


def test_verify_all_degree_4():
    code, text = run(["verify", "--suite", "all", "--max-degree", "4"])
    assert code == 0
    assert "failed" not in text.splitlines()[-1] or " 0 failed" in text


def test_verify_deterministic_across_jobs():
    _, a = run(["verify", "--suite", "lr", "--max-degree", "3", "--format", "json"])
    _, b = run(["verify", "--suite", "lr", "--max-degree", "3", "--format", "json", "--jobs", "2"])
    a, b = json.loads(a), json.loads(b)
    del a["summary"]["wall_time"], b["summary"]["wall_time"]
    assert a == b
    assert all(c["source"] in ("reference", "trivial", "derived") for c in a["cases"])


@pytest.mark.parametrize("argv", [
    ["lr", "--mu", "[1,2]", "--nu", "[1]"],
    ["lr", "--mu", "2,1", "--nu", "[1]"],
    ["kostka"],
    ["kostka", "--k", "-1"],
    ["schur", "--lambda", "[2,1]", "--method", "nope"],
    ["plactic", "--word", "12a"],
    ["verify", "--suite", "everything"],
    ["schur", "--lambda", "[1,1,1]", "--n", "2", "--method", "symmetrized"],
    [],
])
def test_usage_errors_exit_2(argv, capsys):
    code, text = run(argv)
    assert code == 2
    assert text == ""
    err = capsys.readouterr().err
    assert "usage:" in err


def test_console_entry_point():
    result = subprocess.run(
        [sys.executable, "-m", "oddschur", "lr", "--mu", "[2,1]", "--nu", "[2,1]", "--lambda", "[3,2,1]",
         "--method", "all"],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 0
    assert "c = 0" in result.stdout
    bad = subprocess.run([sys.executable, "-m", "oddschur", "hive", "--mu", "[x]"], capture_output=True, text=True)
    assert bad.returncode == 2
    assert "usage:" in bad.stderr


def test_verification_failure_exit_1(monkeypatch):
    from oddschur import cli
    from oddschur.verification import Case, VerificationReport

    def failing(*args, **kwargs):
        return VerificationReport("ring", [Case("x", {}, "trivial", 1, 2, False)])

    monkeypatch.setattr(cli, "run_suite", failing)
    code, text = run(["verify", "--suite", "ring"])
    assert code == 1
    assert text.startswith("FAIL")


def test_schur_disagreement_exit_1(monkeypatch):
    from oddschur import cli
    from oddschur.opol import SkewPolynomial

    real = cli.schur

    def broken(lam, n, method):
        f = real(lam, n, method)
        return f + SkewPolynomial.one(n) if method == "kostka" else f

    monkeypatch.setattr(cli, "schur", broken)
    code, text = run(["schur", "--lambda", "[2,1]", "--n", "3"])
    assert code == 1
    assert "DISAGREE" in text
