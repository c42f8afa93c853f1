import json
import subprocess
import sys

import pytest

from equichroma.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_formula_helm(capsys):
    code, out, _ = run(capsys, "formula", "--theorem", "thm2_helm", "--n", "8")
    doc = json.loads(out)
    assert code == 0
    assert doc["mean"] == {"num": 41, "den": 17}
    assert doc["variance"] == {"num": 376, "den": 289}


def test_formula_corrected_and_proof_body(capsys):
    _, out, _ = run(capsys, "formula", "--theorem", "thm1_wheel", "--n", "9", "--corrected")
    assert json.loads(out)["variance"] == {"num": 249, "den": 100}
    _, out, _ = run(capsys, "formula", "--theorem", "thm1_wheel", "--n", "9")
    assert json.loads(out)["variance"] == {"num": 93, "den": 40}
    code, out, _ = run(capsys, "formula", "--theorem", "thm1_wheel", "--n", "9", "--proof-body")
    # (9^4 + 76*9^3 + 386*9^2 + 692*9 + 333) / 4800 = 99792/4800
    assert code == 0 and json.loads(out)["variance"] == {"num": 2079, "den": 100}


def test_stats_sizes(capsys):
    code, out, _ = run(capsys, "stats", "--sizes", "1,1,1")
    doc = json.loads(out)
    assert code == 0
    assert doc["mean"] == {"num": 2, "den": 1}
    assert doc["variance"] == {"num": 2, "den": 3}
    assert doc["variance_decimal"] == "0.666667"


def test_stats_table(capsys):
    code, out, _ = run(capsys, "stats", "--sizes", "2,2,2,2,1", "--format", "table")
    assert code == 0 and "25/9" in out and "140/81" in out


def test_color_then_stats_pipeline(capsys, tmp_path):
    code, out, _ = run(capsys, "color", "--family", "wheel", "--n", "8")
    assert code == 0
    path = tmp_path / "w8.json"
    path.write_text(out)
    code, out, _ = run(capsys, "stats", "--coloring", str(path))
    assert code == 0
    assert json.loads(out)["variance"] == {"num": 140, "den": 81}


def test_color_solver_with_k(capsys):
    code, out, _ = run(capsys, "color", "--family", "helm", "--n", "6", "--k", "3")
    doc = json.loads(out)
    assert code == 0 and doc["k"] == 3 and doc["family"] == "helm"
    code, _, err = run(capsys, "color", "--family", "cycle", "--n", "5", "--k", "2")
    assert code == 1 and "no equitable 2-coloring" in err


def test_color_minimum_via_solver(capsys):
    code, out, _ = run(capsys, "color", "--family", "helm", "--n", "8", "--method", "solver")
    assert code == 0 and json.loads(out)["k"] == 3


def test_stats_rejects_improper_coloring_file(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"family": "cycle", "n": 4, "k": 2, "assignment": [1, 1, 2, 2]}))
    code, _, err = run(capsys, "stats", "--coloring", str(path))
    assert code == 1 and "not proper" in err


def test_gen_formats(capsys):
    code, out, _ = run(capsys, "gen", "--family", "wheel", "--n", "4", "--format", "json")
    assert code == 0 and json.loads(out)["n"] == 5
    _, out, _ = run(capsys, "gen", "--family", "blossom", "--n", "9")
    assert out.splitlines()[0] == "p edge 19 54"
    _, out, _ = run(capsys, "gen", "--family", "helm", "--n", "5", "--format", "dot")
    assert out.startswith("graph G {")


def test_chie(capsys):
    assert run(capsys, "chie", "--family", "wheel", "--n", "9")[1].strip() == "6"
    assert run(capsys, "chie", "--family", "wheel", "--n", "9", "--oracle")[1].strip() == "6"
    code, _, err = run(capsys, "chie", "--family", "wheel", "--n", "20", "--oracle")
    assert code == 1 and "budget" in err


def test_verify_erratum_row(capsys):
    code, out, _ = run(capsys, "verify", "--theorems", "thm1_wheel", "--n-min", "9", "--n-max", "9", "--report", "csv")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 2
    row = dict(zip(lines[0].split(","), lines[1].split(",")))
    assert row["var_match"] == "false" and row["corrected_var_match"] == "true"


def test_verify_strict_exit_codes(capsys, tmp_path):
    out_file = tmp_path / "r.json"
    args = ["verify", "--theorems", "thm1_wheel,thm2_helm", "--n-min", "4", "--n-max", "7", "--report", "json",
            "--out", str(out_file), "--strict"]
    code, _, err = run(capsys, *args)
    assert code == 2 and "thm1_wheel n=5" in err
    assert len(json.loads(out_file.read_text())) == 8
    code, _, _ = run(capsys, *args, "--expect-erratum", "wheel-odd-variance")
    assert code == 0


def test_verify_table(capsys):
    code, out, _ = run(capsys, "verify", "--theorems", "all", "--n-min", "4", "--n-max", "4", "--report", "table",
                       "--no-oracle", "--solver-max-n", "0")
    assert code == 0 and len(out.splitlines()) == 9


def test_ecc_command(capsys):
    code, out, _ = run(capsys, "ecc", "--family", "wheel,helm", "--n-min", "3", "--n-max", "6")
    rows = out.splitlines()
    assert code == 0 and len(rows) == 9
    assert "violated" not in out


@pytest.mark.parametrize(
    "argv",
    [
        ["gen", "--family", "spiral", "--n", "5"],
        ["gen", "--family", "wheel", "--n", "2"],
        ["gen", "--family", "wheel", "--n", "5", "--colour"],
        ["formula", "--theorem", "thm9", "--n", "5"],
        ["stats", "--sizes", "2,x"],
        ["stats", "--coloring", "/nonexistent/file.json"],
        ["verify", "--n-min", "5", "--n-max", "4"],
        ["color", "--family", "wheel", "--n", "4", "--k", "9"],
        ["bogus"],
        [],
    ],
)
def test_input_errors_exit_1(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 1
    assert err.startswith("equichroma: error:") and err.count("\n") == 1


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "equichroma", "stats", "--sizes", "2,2,1"],
        capture_output=True, text=True, check=True,
    )
    assert json.loads(proc.stdout)["mean"] == {"num": 9, "den": 5}
