import csv
import io
import json
import subprocess
import sys

import pytest

from fimgrowth.cli import main


def run(*argv):
    out = io.StringIO()
    try:
        code = main(list(argv), out=out)
    except SystemExit as exc:
        code = exc.code
    return code, out.getvalue()


def test_spheres_csv_rank1():
    code, text = run("spheres", "--rank", "1", "--max-k", "6", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(text)))
    assert [int(r["sphere"]) for r in rows] == [1, 2, 4, 6, 9, 12, 16]


def test_spheres_default_and_json():
    code, text = run("spheres", "--rank", "2", "--max-k", "3")
    assert code == 0
    assert [int(r["sphere"]) for r in csv.DictReader(io.StringIO(text))] == [1, 4, 16, 60]
    code, text = run("spheres", "--rank", "2", "--max-k", "60", "--format", "json")
    doc = json.loads(text)
    assert doc["rank"] == 2
    assert all(isinstance(r["sphere"], str) for r in doc["rows"])
    assert int(doc["rows"][3]["sphere"]) == 60


@pytest.mark.parametrize(
    "argv",
    [
        ("spheres", "--rank", "0", "--max-k", "3"),
        ("spheres", "--rank", "x", "--max-k", "3"),
        ("spheres", "--rank", "2"),
        ("nonsense",),
        ("poly",),
    ],
)
def test_usage_errors_exit_1(argv, capsys):
    code, _ = run(*argv)
    assert code == 1


def test_verify_pass():
    code, text = run("verify", "--rank", "2", "--max-k", "8")
    assert code == 0
    assert text.strip().endswith("PASS")
    assert "8,0,4," in text.split("8,8,0,")[0]  # rows ordered by K, then t


def test_verify_rank3():
    code, text = run("verify", "--rank", "3", "--max-k", "7", "--samples", "100", "--seed", "7")
    assert code == 0
    assert "seed=7" in text


def test_verify_budget_exceeded():
    code, text = run("verify", "--rank", "2", "--max-k", "50")
    assert code == 3
    assert "budget exceeded" in text
    assert "INCOMPLETE" in text


def test_verify_budget_flag():
    code, _ = run("verify", "--rank", "2", "--max-k", "6", "--budget", "100")
    assert code == 3


def test_growth_rank2():
    code, text = run("growth", "--rank", "2", "--digits", "15")
    assert code == 0
    fields = dict(line.split("=", 1) for line in text.splitlines())
    assert fields["growth_rate"] == "3.636108971065328"  # 11/6 + sqrt(13)/2 = 3.63610897106532798...
    assert float(fields["bracket_lo"]) <= 3.6361089710653280 <= float(fields["bracket_hi"])


def test_growth_rank1_exit_2():
    code, text = run("growth", "--rank", "1")
    assert code == 2
    assert "polynomial" in text


def test_table1():
    code, text = run("table1", "--digits", "4")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(text)))
    assert list(rows[0]) == ["rank", "growth_rate", "asymptotic", "idempotent_rate"]
    assert [r["rank"] for r in rows] == ["2", "3", "4", "5", "6", "7"]
    assert rows[0]["growth_rate"] == "3.6361"
    assert rows[1]["growth_rate"] == "5.7593"
    assert rows[0]["idempotent_rate"] == "2.5981"
    code, text = run("table1", "--format", "json")
    assert json.loads(text)[4]["growth_rate"] == "11.878"


def test_poly():
    code, text = run("poly", "--rank", "2")
    assert code == 0 and text.strip() == "-9 33 -1"
    code, text = run("poly", "--rank", "5", "--factor-check")
    assert "ReducibleWitness(81y^2 + 9y + 1)" in text
    assert "rank5_identity=verified" in text
    code, text = run("poly", "--rank", "4", "--factor-check")
    assert text.splitlines()[1].startswith("Irreducible(primes=")


def test_poly_sweep():
    code, text = run("poly", "--up-to", "8")
    assert code == 0
    lines = text.splitlines()
    assert len(lines) == 7
    assert lines[3].startswith("5,ReducibleWitness")


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "fimgrowth", "poly", "--rank", "2"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "-9 33 -1"
