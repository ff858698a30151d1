import csv
import io
import json
import subprocess
import sys

import pytest

from dcsemigroup.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_show_text(capsys):
    code, out, _ = run(capsys, "show", "--gens", "3,5,7")
    assert code == 0
    assert "genus            3" in out
    assert "gaps             1,2,4" in out


def test_show_full_monoid(capsys):
    code, out, _ = run(capsys, "show", "--gens", "1", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["genus"] == 0 and doc["gaps"] == [] and doc["frobenius"] == -1


@pytest.mark.parametrize(
    "argv, token",
    [
        (["show", "--gens", "2,4"], "GcdNotOne"),
        (["show", "--gens", "3,x"], "ParseError"),
        (["show", "--gens", ""], "EmptyGenerators"),
        (["show", "--gens", "-3,5"], "ValueError"),
        (["family", "--case", "thm99", "--d", "5"], "InvalidCase"),
        (["family", "--case", "thm12a", "--d", "3"], "DegreeTooSmall"),
        (["verify", "--case", "thm12b", "--d-min", "3", "--d-max", "5"], "DegreeTooSmall"),
        (["verify", "--d-min", "6", "--d-max", "5"], "InvalidRange"),
        (["picard", "--class", "1,2,3"], "ParseError"),
        (["picard", "--class", "a,b"], "ParseError"),
    ],
)
def test_usage_errors(capsys, argv, token):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert token in err
    assert out == ""


def test_argparse_errors_exit_2(capsys):
    assert main(["family", "--case", "thm12a"]) == 2
    assert main(["nonsense"]) == 2
    assert main(["show", "--gens", "3,4", "--format", "xml"]) == 2


def test_family_text(capsys):
    code, out, _ = run(capsys, "family", "--case", "thm12a", "--d", "4")
    assert code == 0
    assert "generators       6,10,14,23,27" in out
    assert "FAIL" not in out


def test_family_json(capsys):
    code, out, _ = run(capsys, "family", "--case", "thm12c", "--d", "4", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert doc["odd_generators"]["2d2_minus_1"] == 31
    assert 31 in doc["generators"]
    for key in ("case", "d", "generators", "conductor", "frobenius", "genus",
                "gaps", "odd_gaps", "even_gaps", "checks"):
        assert key in doc
    assert doc["odd_gaps"] == doc["formula_odd_gaps"]
    assert all(set(c) == {"name", "expected", "actual", "pass"} for c in doc["checks"])


def test_family_lemma(capsys):
    code, out, _ = run(capsys, "family", "--case", "lemma21i", "--d", "5", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["generators"] == [4, 5] and doc["genus"] == 6


@pytest.mark.parametrize("case", ["thm11a", "thm11b", "thm12a", "thm12b", "thm12c", "lemma21ii"])
def test_family_round_trip(capsys, case):
    _, out, _ = run(capsys, "family", "--case", case, "--d", "6", "--format", "json")
    fam = json.loads(out)
    gens = ",".join(map(str, fam["generators"]))
    _, out, _ = run(capsys, "show", "--gens", gens, "--format", "json")
    shown = json.loads(out)
    for key, value in shown.items():
        assert fam[key] == value


def test_family_csv(capsys):
    code, out, _ = run(capsys, "family", "--case", "thm12b", "--d", "4", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0 and rows[0] == ["field", "value"]
    assert ["generators", "6 10 14 21"] in rows


def test_verify_single_case(capsys):
    code, out, _ = run(capsys, "verify", "--case", "thm12a", "--d-min", "4", "--d-max", "30")
    assert code == 0
    assert out.strip().endswith("27/27 case reports passed")


def test_verify_all_json(capsys):
    code, out, _ = run(capsys, "verify", "--case", "all", "--d-min", "4", "--d-max", "4", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["pass"] is True
    assert len(doc["reports"]) == 7 and len(doc["cases"]) == 7


def test_verify_csv_rows(capsys):
    code, out, _ = run(capsys, "verify", "--case", "thm12c", "--d-min", "4", "--d-max", "5", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0
    assert list(rows[0]) == ["case", "d", "check", "expected", "actual", "pass"]
    assert {r["d"] for r in rows} == {"4", "5"}
    assert all(r["pass"] == "true" for r in rows)


def test_verify_parallel_same_order(capsys):
    _, serial, _ = run(capsys, "verify", "--d-min", "4", "--d-max", "6", "--format", "json")
    _, parallel, _ = run(capsys, "verify", "--d-min", "4", "--d-max", "6", "--format", "json", "--jobs", "3")
    assert serial == parallel


def test_verify_failure_exit_1(capsys, monkeypatch):
    from dcsemigroup import families

    monkeypatch.setattr(families, "expected_min_odd", lambda case: -1)
    code, out, _ = run(capsys, "verify", "--case", "thm11a", "--d-min", "4", "--d-max", "4")
    assert code == 1
    assert "FAIL" in out and "min_odd" in out


@pytest.mark.parametrize(
    "value, self_int, k_pair, genus",
    [("4,-1", 15, -11, 3), ("-3,1", 8, 8, 9), ("1,0", 1, -3, 0)],
)
def test_picard(capsys, value, self_int, k_pair, genus):
    code, out, _ = run(capsys, "picard", "--class", value, "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert (doc["self_intersection"], doc["canonical_pairing"], doc["adjunction_genus"]) == (
        self_int, k_pair, genus,
    )


def test_out_file(capsys, tmp_path):
    target = tmp_path / "report.json"
    code, out, _ = run(capsys, "show", "--gens", "3,4", "--format", "json", "--out", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["gaps"] == [1, 2, 5]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "dcsemigroup", "show", "--gens", "2,4"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 2
    assert "GcdNotOne" in proc.stderr
