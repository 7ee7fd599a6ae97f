import csv
import json

import pytest

from cohlength.cli import main
from cohlength.cohfun import chi_of_complex, chi_table, chi_table_csv, probe_window, simple_module_function
from cohlength.perfcx import barcode, direct_sum, string_complex, zero_complex
from cohlength.perfcx.serialize import dump
from cohlength.suites import RunConfig, run_suite


@pytest.fixture
def write(tmp_path):
    def _write(name, X):
        path = tmp_path / name
        dump(X, path)
        return path
    return _write


def test_decompose_matches_library(A, write, tmp_path, capsys):
    X = string_complex(A, 0, 2)
    assert main(["decompose", str(write("x02.json", X)), "--out", str(tmp_path / "out")]) == 0
    assert capsys.readouterr().out.strip() == "{(0,2):1}"
    doc = json.loads((tmp_path / "out" / "barcode.json").read_text())
    assert doc == barcode(X).to_json() == [[0, 2, 1]]


def test_decompose_direct_sum(A, write, capsys):
    X = direct_sum(string_complex(A, 0, 2), string_complex(A, 1, 0), string_complex(A, 0, 2))
    assert main(["decompose", str(write("sum.json", X))]) == 0
    assert capsys.readouterr().out.strip() == "{(0,2):2, (1,0):1}"


def test_decompose_rejects_bad_differential(tmp_path, capsys):
    doc = {"algebra": "dual_numbers", "field": "5", "ranks": {"0": 1, "1": 1, "2": 1},
           "diffs": {"0": [[[1, 0]]], "1": [[[1, 0]]]}}
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    assert main(["decompose", str(path)]) == 1
    assert "degree 0" in capsys.readouterr().err


def test_missing_file(tmp_path, capsys):
    assert main(["decompose", str(tmp_path / "nope.json")]) == 1


def test_chi_matches_library(A, write, tmp_path, capsys):
    X = string_complex(A, 0, 0)
    assert main(["chi", str(write("x00.json", X)), "--out", str(tmp_path)]) == 0
    text = (tmp_path / "chi_table.csv").read_text()
    rows = chi_table(chi_of_complex(X), probe_window(A, range(-3, 4), 3))
    assert text == chi_table_csv(rows)
    assert ("X(0,0)", 0, 2) in rows
    assert "X(0,0)" in capsys.readouterr().out


def test_chi_zero_complex(A, write, tmp_path):
    assert main(["chi", str(write("zero.json", zero_complex(A))), "--out", str(tmp_path)]) == 0
    rows = list(csv.reader((tmp_path / "chi_table.csv").read_text().splitlines()))[1:]
    assert rows and all(v == "0" for _, _, v in rows)


def test_chi_module_k(A, tmp_path):
    assert main(["chi", "--module", "k", "--r-max", "4", "--out", str(tmp_path)]) == 0
    text = (tmp_path / "chi_table.csv").read_text()
    rows = {(p, int(j), int(v)) for p, j, v in list(csv.reader(text.splitlines()))[1:]}
    for r in range(5):
        assert (f"X(0,{r})", 0, 1) in rows
    rows = chi_table(simple_module_function(A), probe_window(A, range(-3, 4), 4))
    assert text == chi_table_csv(rows)


def test_chi_usage_errors(A, write):
    assert main(["chi"]) == 2
    assert main(["chi", str(write("x.json", string_complex(A, 0, 0))), "--module", "k"]) == 2
    assert main(["chi", "--module", "k", "--n-range", "3:1"]) == 2
    assert main(["chi", "--module", "k", "--field", "6"]) == 2


def test_verify_unknown_suite():
    assert main(["verify", "bogus"]) == 2


def test_verify_spectrum(tmp_path, capsys):
    assert main(["verify", "spectrum", "--r-max", "3", "--out", str(tmp_path)]) == 0
    out = capsys.readouterr().out
    assert "4 isolated labels + 1 limit point" in out
    summary = json.loads((tmp_path / "spectrum_r3.json").read_text())
    assert summary["isolated"] == [f"X(0,{r})" for r in range(4)]
    assert summary["limit_points"] == ["k[0]"]


def test_verify_matches_library(tmp_path, capsys):
    assert main(["verify", "ar-exact", "--out", str(tmp_path)]) == 0
    rep = run_suite("ar-exact", RunConfig())
    assert (tmp_path / "report.txt").read_text() == rep.text() + "\n"
    for name, text in rep.artifacts.items():
        assert (tmp_path / name).read_text() == text


def test_verify_deterministic(tmp_path):
    for run in ("a", "b"):
        assert main(["verify", "schanuel", "--seed", "7", "--out", str(tmp_path / run)]) == 0
    a = sorted(p.name for p in (tmp_path / "a").iterdir())
    assert a == sorted(p.name for p in (tmp_path / "b").iterdir())
    for name in a:
        assert (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes()
