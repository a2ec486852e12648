import json
import subprocess
import sys
from importlib import resources
from pathlib import Path

import jsonschema
import pytest

from kucalc.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run(*args):
    proc = subprocess.run(
        [sys.executable, "-m", "kucalc", *args], capture_output=True, text=True
    )
    return proc.returncode, proc.stdout, proc.stderr


def schema():
    text = resources.files("kucalc").joinpath("data/verify_report.schema.json").read_text()
    return json.loads(text)


@pytest.mark.parametrize(
    "args, golden",
    [
        (["walls", "--target=-8,6,7/4"], "walls_target.txt"),
        (["--json", "walls", "--target=-8,6,7/4"], "walls_target.json"),
        (["walls", "--coords=-1,3,7", "--non-strict", "--decimal"], "walls_coords_non_strict.txt"),
        (["chern", "lambda1"], "chern_lambda1.txt"),
    ],
)
def test_golden_outputs(args, golden):
    code, out, _ = run(*args)
    assert code == 0
    assert out == (GOLDEN / golden).read_text()


@pytest.mark.parametrize(
    "name, expected",
    [
        ("lambda1", "(3, -1, -1/2, 1/6, 3/8)"),
        ("lambda2", "(-3, 2, 0, -1/3, 0)"),
        ("2l1+2l2", "(0, 2, -1, -1/3, 3/4)"),
        ("p_ell", "(0, 1, -1/2, -1/6, 3/8)"),
        ("e_gamma", "(0, 2, -1, -1/3, 3/4)"),
        ("e_c", "(0, 2, -1, -1/3, 3/4)"),
        ("B1", "(4, 1, 1/8)"),
        ("psi:2l1+2l2", "(-8, 6, 7/4)"),
        ("psi:lambda1", "(4, 3, -7/8)"),
    ],
)
def test_chern(name, expected):
    assert main(["chern", name]) == 0
    code, out, _ = run("chern", name)
    assert (code, out.strip()) == (0, expected)


def test_chern_twist_flag():
    assert run("chern", "B1", "--twist=-1")[1].strip() == "(4, 1, 1/8)"
    assert run("chern", "B0", "--twist=0")[1].strip() == "(4, -5, 25/8)"


def test_decimal_flag_marks_approximations():
    out = run("chern", "lambda1", "--decimal")[1].strip()
    assert out == "(3, -1, -1/2 [-0.5~], 1/6 [0.166667~], 3/8 [0.375~])"


@pytest.mark.parametrize(
    "args, code",
    [
        (["chern", "nosuch"], 2),
        (["chern", "l3"], 2),
        (["pairing", "lambda1"], 2),
        (["frobnicate"], 2),
        (["walls"], 2),
        (["walls", "--target=1,2"], 2),
        (["walls", "--target=-8,6,7/4", "--coords=0,1,0"], 2),
        (["verify", "--only=nosuch"], 2),
        (["walls", "--target=1,0,0"], 3),
        (["walls", "--target=-4,-1,-1/8"], 3),
        (["walls", "--coords=1/2,0,0"], 3),
        (["walls", "--target=4,1,1/8"], 0),
        (["verify"], 0),
    ],
)
def test_exit_codes(args, code):
    assert run(*args)[0] == code


def test_integrality_error_detail():
    code, _, err = run("walls", "--target=1,0,0")
    assert code == 3 and "IntegralityError" in err


def test_empty_wall_table():
    code, out, _ = run("walls", "--target=4,1,1/8")
    assert code == 0 and "no walls" in out
    code, out, _ = run("--json", "walls", "--target=4,1,1/8")
    assert json.loads(out)["walls"] == []


def test_pairing():
    code, out, _ = run("pairing", "lambda1", "lambda2")
    assert code == 0 and out == "chi = 1\nmukai = -1\n"
    data = json.loads(run("pairing", "2l1+2l2", "2l1+2l2", "--json")[1])
    assert data["mukai"] == "8"


@pytest.mark.parametrize(
    "args",
    [
        ["--json", "walls", "--target=-8,6,7/4", "--non-strict"],
        ["verify", "--json"],
        ["chern", "lambda1", "--json"],
        ["chern", "B3", "--twist=1/2", "--json"],
        ["pairing", "O(1)", "lambda1", "--json"],
    ],
)
def test_json_round_trip_and_determinism(args):
    _, first, _ = run(*args)
    _, second, _ = run(*args)
    assert first == second
    assert json.dumps(json.loads(first), indent=2) + "\n" == first


def test_global_flags_before_or_after_subcommand():
    assert run("--json", "chern", "lambda1")[1] == run("chern", "lambda1", "--json")[1]


def test_jobs_do_not_change_output():
    base = run("--json", "walls", "--coords=0,5,0")[1]
    assert run("--json", "--jobs=3", "walls", "--coords=0,5,0")[1] == base
    assert run("walls", "--target=-8,6,7/4", "--jobs=0")[0] == 2


def test_walls_json_shape():
    data = json.loads(run("--json", "walls", "--target=-8,6,7/4")[1])
    assert list(data) == ["target", "walls"]
    assert [w["alpha_sq"] for w in data["walls"]] == ["17/16", "5/16", "5/16", "5/16", "1/16"]
    assert data["walls"][0]["coeffs"] == [0, 2, 16]
    assert data["walls"][0]["alpha_approx"] == 1.030776
    data = json.loads(run("--json", "walls", "--target=-8,6,7/4", "--non-strict")[1])
    assert [b["coeffs"] for b in data["boundary"]] == [[-1, 3, 7]]
    assert data["boundary"][0]["alpha_sq"] is None


def test_verify_json_validates_against_schema():
    code, out, _ = run("verify", "--json")
    report = json.loads(out)
    jsonschema.validate(report, schema())
    assert code == 0
    assert len(report["checks"]) >= 25
    assert report["summary"]["fail"] == 0


def test_verify_only_walls():
    report = json.loads(run("verify", "--only=walls", "--json")[1])
    names = {c["name"] for c in report["checks"]}
    assert {"walls_all", "wall_1", "wall_2i", "wall_2ii", "wall_2iii", "wall_3"} <= names
    assert {c["group"] for c in report["checks"]} == {"walls"}


def test_verify_text_summary():
    code, out, _ = run("verify")
    assert code == 0
    assert out.strip().splitlines()[-1] == "pass=42, fail=0, paper_internal_discrepancy=2"
