"""The command-line entry points, driven in-process."""

import json

import pytest

from diffmod.cli import main

OBJ = '{"atoms": ["a"]}'


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip() else None


def test_check_passing_suite(capsys):
    code, data = run(capsys, ["check", "--suite", "coalgebra",
                              "--modality", "bag", "--object", OBJ,
                              "--weight", "3"])
    assert code == 0
    assert data["failed"] == 0
    assert data["passed"] == len(data["reports"])


def test_check_reports_carry_status_lines(capsys):
    code, data = run(capsys, ["check", "--suite", "comonad",
                              "--modality", "points", "--object", OBJ])
    assert code == 0
    for r in data["reports"]:
        assert r["status"] == "pass"
        assert r["suite"] == "comonad"


def test_check_morphism_suite_for_the_unit(capsys):
    code, data = run(capsys, ["check", "--suite", "coalg-morphism",
                              "--modality", "free-diff(points)",
                              "--object", OBJ, "--weight", "3"])
    assert code == 0 and data["failed"] == 0


def test_map_applies_a_column(capsys):
    label = '{"bag": [{"atom": "a"}]}'
    code, data = run(capsys, ["map", "--name", "delta", "--modality", "bag",
                              "--object", OBJ, "--apply", label,
                              "--weight", "4"])
    assert code == 0
    assert data["column"], data


def test_refute_finds_no_survivor(capsys):
    code, data = run(capsys, ["refute"])
    assert code == 0
    assert data["candidatesTested"] == 16 and data["survivors"] == []


def test_compare_against_rel_oracle(capsys):
    code, data = run(capsys, ["compare", "--x", '{"atoms": ["a"]}',
                              "--y", '{"atoms": ["b"]}', "--weight", "2"])
    assert code == 0
    assert all(r["status"] == "pass" for r in data["reports"])


def test_lemma27_witness(capsys):
    code, data = run(capsys, ["lemma27"])
    assert code == 0
    assert all(r["status"] == "pass" for r in data["reports"])


def test_unknown_modality_is_a_usage_error(capsys):
    code = main(["check", "--suite", "comonad", "--modality", "matrix",
                 "--object", OBJ])
    capsys.readouterr()
    assert code == 2


def test_failing_check_exits_one(capsys, tmp_path):
    # the points functor has no deriving transformation, so asking for the
    # differential suite is a usage error, not a failed check
    code = main(["check", "--suite", "differential", "--modality", "points",
                 "--object", OBJ])
    capsys.readouterr()
    assert code == 2


def test_out_flag_writes_a_file(capsys, tmp_path):
    path = tmp_path / "report.json"
    code = main(["refute", "--out", str(path)])
    capsys.readouterr()
    assert code == 0
    assert json.loads(path.read_text())["survivors"] == []
