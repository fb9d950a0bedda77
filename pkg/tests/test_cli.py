"""Command-line behavior: exit codes, formats, caps."""

import json

import pytest

from sptforge.cli import main
from sptforge.reports import render_value
from sptforge.rings import CyclotomicInteger, LaurentPolynomial


def test_value_rendering():
    assert render_value(-7) == "-7"
    assert render_value(CyclotomicInteger(5, (1, 0, -2, 3))) == "[1,0,-2,3]"
    assert render_value(LaurentPolynomial({1: 3, -1: 3, 0: -2})) == "-1:3,0:-2,1:3"
    assert render_value(LaurentPolynomial({})) == "0"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_verify_single(capsys):
    code, out = run(capsys, "verify", "--id", "dissect_B2_7", "--order", "250")
    assert code == 0
    assert "dissect_B2_7: verified to order 250" in out


def test_congruence(capsys):
    code, out = run(capsys, "congruence", "--family", "F3", "--p", "7", "--b", "4", "--max", "120")
    assert code == 0
    code, out = run(capsys, "congruence", "--family", "B2", "--p", "5", "--b", "2", "--max", "60")
    assert code == 1


def test_spt_csv(capsys):
    code, out = run(capsys, "spt", "--family", "B2", "--max", "4", "--format", "csv")
    assert code == 0
    assert out == "n,spt\n1,0\n2,1\n3,2\n4,5\n"


def test_crank_table(capsys):
    code, out = run(capsys, "crank", "--family", "B2", "--t", "5", "--max", "6", "--format", "csv")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "n,m0,m1,m2,m3,m4"
    assert lines[6] == "6,3,3,3,3,3"  # equal classes at n = 6


def test_oracle_compare(capsys):
    code, out = run(capsys, "oracle-compare", "--family", "J2", "--max", "8", "--format", "csv")
    assert code == 0
    assert out.splitlines()[0] == "n,series,oracle,equal"
    assert all(line.endswith("yes") for line in out.splitlines()[1:])


def test_list(capsys):
    code, out = run(capsys, "list")
    assert code == 0
    assert "dissect_F3_3" in out and "h25" in out


def test_json_roundtrip(capsys):
    code, out = run(capsys, "verify", "--id", "gauss_half", "--format", "json", "--timing", "none")
    assert code == 0
    parsed = json.loads(out)
    assert json.dumps(parsed, indent=2, sort_keys=True) + "\n" == out
    assert parsed[0]["id"] == "gauss_half"
    assert set(parsed[0]) == {"id", "order", "status", "first_mismatch", "millis"}
    assert parsed[0]["millis"] == 0


def test_usage_errors(capsys):
    assert main(["verify", "--bogus"]) == 2
    assert main(["spt", "--family", "XX", "--max", "4"]) == 2
    assert main(["spt", "--family", "B2", "--max", "99999"]) == 2
    assert main(["congruence", "--family", "B2", "--p", "11", "--b", "1", "--max", "10"]) == 2


def test_order_cap_env(capsys, monkeypatch):
    monkeypatch.setenv("SPTFORGE_MAX_ORDER", "150")
    assert main(["verify", "--id", "gauss_half", "--order", "200"]) == 2
    monkeypatch.setenv("SPTFORGE_MAX_ORDER", "5000")
    code, out = run(capsys, "verify", "--id", "heine", "--order", "90")
    assert code == 0


def test_output_file(tmp_path, capsys):
    target = tmp_path / "out.json"
    code = main(["spt", "--family", "J3", "--max", "5", "--format", "json",
                 "--output", str(target)])
    assert code == 0
    doc = json.loads(target.read_text())
    assert doc["family"] == "J3"
    assert doc["rows"][1] == {"n": 2, "spt": 1}


def test_timing_none_byte_identical(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    argv = ["verify", "--id", "series_J1_additivity", "--format", "json", "--timing", "none"]
    assert main(argv + ["--parallelism", "1", "--output", str(a)]) == 0
    assert main(argv + ["--parallelism", "8", "--output", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
