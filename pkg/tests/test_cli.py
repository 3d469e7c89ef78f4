import json
import subprocess
import sys

import jsonschema
import pytest

from tits342.cli import read_matrix, run
from tits342.report import RunReport, schema, strip_timing


def run_json(capsys, *argv):
    code = run(list(argv) + ["--json"])
    out = capsys.readouterr()
    obj = json.loads(out.out)
    jsonschema.validate(obj, schema())
    return code, obj


def test_words(capsys):
    code, obj = run_json(capsys, "words", "--k", "1")
    assert code == 0
    assert [r["word"] for r in obj["results"]] == ["xy", "xy2"]


def test_trace(capsys):
    code, obj = run_json(capsys, "trace", "--word", "xy3")
    assert code == 0
    rep = obj["results"][0]
    assert rep["degree"] == 1 and rep["kappa"] == 0


def test_search_k5(capsys):
    code, obj = run_json(capsys, "search", "--k", "5")
    assert code == 0
    assert [r["word"] for r in obj["results"]] == ["xyxyx2y3x2yxy3"]


def test_analyze_xy(capsys):
    code, obj = run_json(capsys, "analyze", "--word", "xy")
    assert code == 0
    assert obj["results"][0]["verdict"] == "VirtuallySoluble(S4)"


def test_verify_exit_codes(capsys):
    code, obj = run_json(capsys, "verify", "--suite", "cells")
    assert code == 0 and obj["summary"]["failed"] == 0
    code, obj = run_json(capsys, "verify", "--suite", "double-root-sqrt2", "--corrupt", "dual-M")
    assert code == 1
    assert obj["summary"]["failed_ids"] == ["double-root-sqrt2: rho((xy)^4) = -I + εM with M as expected"]


@pytest.mark.parametrize(
    "argv",
    [
        ["analyze", "--word", "yx"],
        ["analyze", "--word", "xyxy"],
        ["analyze"],
        ["search", "--k", "4"],
        ["verify", "--suite", "nope"],
        ["snf", "--matrix", "/nonexistent/file"],
        ["cosets", "--presentation", "/nonexistent/file"],
    ],
)
def test_usage_errors(capsys, argv):
    assert run(argv + ["--json"]) == 2
    out = capsys.readouterr()
    assert out.out == ""
    assert "error" in out.err


def test_argparse_usage_error(capsys):
    with pytest.raises(SystemExit) as e:
        run(["frobnicate"])
    assert e.value.code == 2
    assert capsys.readouterr().out == ""


def test_cosets_and_snf(tmp_path, capsys):
    pres = tmp_path / "s4.txt"
    pres.write_text("gens: x, y; rels: x^3, y^4, (x*y)^2\n")
    code, obj = run_json(capsys, "cosets", "--presentation", str(pres))
    assert code == 0 and obj["results"][0]["order"] == 24
    code, obj = run_json(capsys, "cosets", "--presentation", str(pres), "--max-index", "4")
    assert [r["index"] for r in obj["results"]] == [1, 2, 3, 4]
    assert obj["results"][-1]["abelianization"] == {"torsion": [2], "free_rank": 0}

    inf = tmp_path / "free.txt"
    inf.write_text("gens: a, b; rels: a^2")
    assert run(["cosets", "--presentation", str(inf), "--max-cosets", "100"]) == 1
    assert "CosetLimitExceeded" in capsys.readouterr().err

    mat = tmp_path / "m.txt"
    mat.write_text("1 -1 1 0 0 0\n0 0 0 1 -1 1\n")
    code, obj = run_json(capsys, "snf", "--matrix", str(mat))
    assert obj["results"][0]["free_rank"] == 4
    mat.write_text('{"rows": [], "cols": 6}')
    code, obj = run_json(capsys, "snf", "--matrix", str(mat))
    assert obj["results"][0]["free_rank"] == 6


def test_read_matrix_formats():
    assert read_matrix("[[3, 0], [0, 4]]") == ([[3, 0], [0, 4]], 2)
    assert read_matrix("3,0\n0,4") == ([[3, 0], [0, 4]], 2)


def test_human_output(capsys):
    assert run(["verify", "--suite", "k1"]) == 0
    out = capsys.readouterr().out
    assert "PASS k1: k = 1 verdicts" in out


def test_report_schema_rejects_bad_report():
    obj = RunReport("words", {}, []).to_json()
    obj["command"] = "bogus"
    with pytest.raises(jsonschema.ValidationError):
        jsonschema.validate(obj, schema())


def test_reproduce_deterministic(capsys):
    code1, a = run_json(capsys, "reproduce")
    code2, b = run_json(capsys, "reproduce", "--jobs", "2")
    assert code1 == code2
    assert json.dumps(strip_timing(a), sort_keys=True) == json.dumps(strip_timing(b), sort_keys=True)


def test_reproduce_corrupted(capsys):
    code, obj = run_json(capsys, "reproduce", "--corrupt", "dual-M")
    assert code == 1
    assert "double-root-sqrt2: rho((xy)^4) = -I + εM with M as expected" in obj["summary"]["failed_ids"]


def test_module_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "tits342", "analyze", "--word", "xy2", "--json"],
        capture_output=True, text=True, check=False,
    )
    assert out.returncode == 0
    assert json.loads(out.stdout)["results"][0]["verdict"] == "FreeSubgroup(amalgam)"
