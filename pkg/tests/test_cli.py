"""Command-line surface: outputs, JSON schemas and exit codes."""

import json
import subprocess
import sys

import pytest

from tcla.cli import main


def write_weight(tmp_path, doc, name="lambda.json"):
    path = tmp_path / name
    path.write_text(json.dumps(doc), encoding="utf-8")
    return str(path)


SL2_WEIGHT = {"levels": [{"h1": "5"}, {"h1": "3"}]}
VIR_WEIGHT = {"levels": [{}, {}, {"L0": "1", "c": "-8"}]}


def test_algebras_listing(capsys):
    assert main(["algebras"]) == 0
    out = capsys.readouterr().out
    for name in ("sl2", "sl3", "sl4", "virasoro", "oscillator"):
        assert name in out
    assert "rank=2" in out and "roots=infinite" in out


def test_shapovalov_command(tmp_path, capsys):
    lam = write_weight(tmp_path, SL2_WEIGHT)
    code = main(["shapovalov", "--algebra", "sl2", "--nilp", "1", "--lambda", lam, "--chi", "1"])
    assert code == 0
    out = capsys.readouterr().out
    assert "[5, 3]" in out
    assert "[3, 0]" in out
    assert "det = -9" in out


def test_shapovalov_json_export(tmp_path, capsys):
    lam = write_weight(tmp_path, SL2_WEIGHT)
    out_path = tmp_path / "matrix.json"
    code = main(
        ["shapovalov", "--algebra", "sl2", "--nilp", "1", "--lambda", lam,
         "--chi", "1", "--json", str(out_path)]
    )
    assert code == 0
    doc = json.loads(out_path.read_text(encoding="utf-8"))
    assert doc["chi"] == [1]
    assert doc["entries"] == [["5", "3"], ["3", "0"]]
    assert doc["det"] == "-9"
    assert doc["monomials"] == ["f(1)[0]@0", "f(1)[0]@1"]


def test_check_virasoro_reducible(tmp_path, capsys):
    lam = write_weight(tmp_path, VIR_WEIGHT)
    code = main(["check", "--algebra", "virasoro", "--nilp", "2", "--lambda", lam])
    assert code == 0
    assert "REDUCIBLE, witness m=2" in capsys.readouterr().out


def test_check_irreducible(tmp_path, capsys):
    lam = write_weight(tmp_path, SL2_WEIGHT)
    code = main(["check", "--algebra", "sl2", "--nilp", "1", "--lambda", lam])
    assert code == 0
    assert "IRREDUCIBLE" in capsys.readouterr().out


def test_scan_command(tmp_path, capsys):
    lam = write_weight(tmp_path, {"levels": [{"h1": "5"}, {"h1": "0"}]})
    out_json = tmp_path / "scan.json"
    code = main(
        ["scan", "--algebra", "sl2", "--nilp", "1", "--lambda", lam,
         "--max-height", "2", "--json", str(out_json)]
    )
    assert code == 0
    out = capsys.readouterr().out
    assert "zero determinant at: (1)" in out
    doc = json.loads(out_json.read_text(encoding="utf-8"))
    assert doc["zero_found"] is True
    assert doc["zero_chis"][0] == [1]


def test_validate_command(tmp_path, capsys):
    out_json = tmp_path / "report.json"
    args = ["validate", "--algebra", "sl2", "--nilp", "1", "--samples", "8",
            "--seed", "5", "--max-height", "2", "--json", str(out_json)]
    assert main(args) == 0
    first = capsys.readouterr().out
    assert "agreements: 8/8" in first
    doc = json.loads(out_json.read_text(encoding="utf-8"))
    assert set(doc) >= {"samples", "agreements", "disagreements"}
    assert doc["disagreements"] == []
    # byte-determinism of the streamed report
    assert main(args) == 0
    assert capsys.readouterr().out == first


def test_figure_command(tmp_path, capsys):
    assert main(["figure", "--which", "sl3", "--format", "csv", "--out", "-"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines() == ["label,n1,n2", "alpha1,1,0", "alpha2,0,1", "alpha1+alpha2,1,1"]
    svg_path = tmp_path / "fig.svg"
    assert main(["figure", "--which", "virasoro", "--m-max", "3", "--format", "svg",
                 "--out", str(svg_path)]) == 0
    assert svg_path.read_text(encoding="utf-8").startswith("<svg ")


def test_unknown_algebra_exit_code(tmp_path, capsys):
    lam = write_weight(tmp_path, SL2_WEIGHT)
    code = main(["check", "--algebra", "e8", "--nilp", "1", "--lambda", lam])
    assert code == 3
    assert "unknown algebra" in capsys.readouterr().err


def test_bad_nilp_exit_code(tmp_path, capsys):
    lam = write_weight(tmp_path, SL2_WEIGHT)
    code = main(["check", "--algebra", "sl2", "--nilp", "0", "--lambda", lam])
    assert code == 3
    assert "nilp" in capsys.readouterr().err


def test_wrong_level_count_exit_code(tmp_path, capsys):
    lam = write_weight(tmp_path, SL2_WEIGHT)  # two levels
    code = main(["check", "--algebra", "sl2", "--nilp", "2", "--lambda", lam])
    assert code == 3
    assert "levels" in capsys.readouterr().err


def test_bad_rational_exit_code(tmp_path, capsys):
    lam = write_weight(tmp_path, {"levels": [{"h1": "5"}, {"h1": "0.25"}]})
    code = main(["check", "--algebra", "sl2", "--nilp", "1", "--lambda", lam])
    assert code == 3
    assert "rational" in capsys.readouterr().err


def test_unknown_cartan_name_exit_code(tmp_path, capsys):
    lam = write_weight(tmp_path, {"levels": [{"h1": "5"}, {"zz": "1"}]})
    code = main(["check", "--algebra", "sl2", "--nilp", "1", "--lambda", lam])
    assert code == 3
    assert "Cartan name" in capsys.readouterr().err


def test_chi_arity_exit_code(tmp_path, capsys):
    lam = write_weight(tmp_path, SL2_WEIGHT)
    code = main(["shapovalov", "--algebra", "sl2", "--nilp", "1", "--lambda", lam, "--chi", "1,1"])
    assert code == 3
    assert "coordinates" in capsys.readouterr().err


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["check", "--algebra", "sl2"])  # missing required flags
    assert exc.value.code == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "tcla", "algebras"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "sl2" in proc.stdout
