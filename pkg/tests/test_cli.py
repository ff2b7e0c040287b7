"""CLI: parsing, exit codes, result documents, round trips, determinism."""

import os
import subprocess
import sys

import pytest

from ecpostman.cli import (
    EXIT_ERROR,
    EXIT_INFEASIBLE,
    EXIT_OK,
    ParseError,
    format_result,
    main,
    parse_instance_text,
    parse_tour_text,
)
from ecpostman.solver import solve

TRIANGLE = "ecg 3 3 3\n1 2 1 1\n2 3 2 1\n3 1 3 1\n"
HOUSE = "ecg 4 3 5\n1 2 1 1\n2 3 2 5\n3 1 3 1\n2 4 3 1\n4 3 1 1\n"
SINGLE_COLOR = "ecg 3 1 2\n1 2 1 1\n2 3 1 1\n"


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def run_cli(*argv):
    return main(list(argv))


def test_parse_accepts_comments_and_blanks():
    g = parse_instance_text("# c\n\necg 2 2 2\n# another\n1 2 1 3\n1 2 2 0\n")
    assert g.n == 2 and g.k == 2 and len(g.edges) == 2


@pytest.mark.parametrize(
    "text,fragment",
    [
        ("", "missing header"),
        ("ecg 3 3\n", "header"),
        ("ecg 1 1 1\n", "two vertices"),
        ("ecg 3 3 0\n", "one edge"),
        ("ecg 3 3 1\n1 2 1\n", "expected"),
        ("ecg 3 3 1\n1 4 1 1\n", "1..3"),
        ("ecg 3 3 1\n1 1 1 1\n", "loops"),
        ("ecg 3 3 1\n1 2 9 1\n", "colors"),
        ("ecg 3 3 1\n1 2 1 -2\n", "non-negative"),
        ("ecg 3 3 2\n1 2 1 1\n", "expected 2 edge lines"),
        ("ecg 3 3 1\n1 2 1 1\n2 3 1 1\n", "more than"),
    ],
)
def test_parse_errors_have_line_numbers(text, fragment):
    with pytest.raises(ParseError) as err:
        parse_instance_text(text, "inst.ecg")
    assert "inst.ecg:" in str(err.value)
    assert fragment in str(err.value)


def test_solve_triangle(tmp_path, capsys):
    path = write(tmp_path, "tri.ecg", TRIANGLE)
    assert run_cli("solve", path) == EXIT_OK
    out = capsys.readouterr().out
    assert out.startswith("status optimal\ntotal_weight 3\nmatching_weight 0\n")
    assert "edge 1 2 1 1 1" in out
    assert out.splitlines()[-1].startswith("tour 1 ")


def test_solve_house_total(tmp_path, capsys):
    path = write(tmp_path, "house.ecg", HOUSE)
    assert run_cli("solve", path) == EXIT_OK
    assert "total_weight 11" in capsys.readouterr().out


def test_solve_infeasible_exit_code(tmp_path, capsys):
    path = write(tmp_path, "bad.ecg", SINGLE_COLOR)
    assert run_cli("solve", path) == EXIT_INFEASIBLE
    out = capsys.readouterr().out
    assert out == "status infeasible\nreason single-color-vertex\n"


def test_solve_parse_error_exit_code(tmp_path, capsys):
    path = write(tmp_path, "broken.ecg", "ecg 3 3 1\n1 4 1 1\n")
    assert run_cli("solve", path) == EXIT_ERROR
    captured = capsys.readouterr()
    assert captured.out == ""
    assert "broken.ecg:2:" in captured.err


def test_solve_quiet(tmp_path, capsys):
    path = write(tmp_path, "tri.ecg", TRIANGLE)
    assert run_cli("solve", path, "--quiet") == EXIT_OK
    assert capsys.readouterr().out == ""


def test_solve_dump_aux_sidecar(tmp_path, capsys):
    path = write(tmp_path, "tri.ecg", TRIANGLE)
    assert run_cli("solve", path, "--dump-aux") == EXIT_OK
    capsys.readouterr()
    side = path + ".aux"
    assert os.path.exists(side)
    assert open(side).read().startswith("aux-graph vertices ")
    explicit = str(tmp_path / "h.txt")
    assert run_cli("solve", path, "--dump-aux", explicit) == EXIT_OK
    assert os.path.exists(explicit)


def test_solve_dump_aux_on_unbuildable_instance(tmp_path, capsys):
    # the document and exit code must survive even when there is no
    # auxiliary graph to dump
    path = write(tmp_path, "bad.ecg", SINGLE_COLOR)
    assert run_cli("solve", path, "--dump-aux") == EXIT_INFEASIBLE
    captured = capsys.readouterr()
    assert captured.out.startswith("status infeasible")
    assert "no auxiliary graph" in captured.err
    assert not os.path.exists(path + ".aux")


def test_verify_rejects_tourless_document(tmp_path, capsys):
    inst = write(tmp_path, "bad.ecg", SINGLE_COLOR)
    assert run_cli("solve", inst) == EXIT_INFEASIBLE
    doc = capsys.readouterr().out
    tour = write(tmp_path, "no.tour", doc)
    tri = write(tmp_path, "tri.ecg", TRIANGLE)
    assert run_cli("verify", tri, tour) == EXIT_ERROR
    assert "no tour line" in capsys.readouterr().err


def test_check_house_not_euler_but_solvable(tmp_path, capsys):
    path = write(tmp_path, "house.ecg", HOUSE)
    assert run_cli("check", path) == EXIT_INFEASIBLE
    out = capsys.readouterr().out
    assert "vertex 2 degree 3 even no balanced yes" in out
    assert "connected yes" in out
    assert out.rstrip().endswith("pc-euler no")


def test_check_triangle_euler(tmp_path, capsys):
    path = write(tmp_path, "tri.ecg", TRIANGLE)
    assert run_cli("check", path) == EXIT_OK
    assert "pc-euler yes" in capsys.readouterr().out


def test_check_disconnected(tmp_path, capsys):
    text = "ecg 4 3 2\n1 2 1 1\n3 4 2 1\n"
    path = write(tmp_path, "disc.ecg", text)
    assert run_cli("check", path) == EXIT_INFEASIBLE
    assert "connected no" in capsys.readouterr().out


def test_verify_round_trip(tmp_path, capsys):
    inst = write(tmp_path, "house.ecg", HOUSE)
    assert run_cli("solve", inst) == EXIT_OK
    doc = capsys.readouterr().out
    tour = write(tmp_path, "house.tour", doc)
    assert run_cli("verify", inst, tour) == EXIT_OK
    out = capsys.readouterr().out
    assert "verdict pass" in out and "weight 11" in out


def test_verify_bare_token_tour(tmp_path, capsys):
    inst = write(tmp_path, "tri.ecg", TRIANGLE)
    tour = write(tmp_path, "tri.tour", "1 1 2 2 3 3 1\n")
    assert run_cli("verify", inst, tour) == EXIT_OK
    assert "weight 3" in capsys.readouterr().out


def test_verify_rejects_uncovering_tour(tmp_path, capsys):
    inst = write(tmp_path, "sq.ecg", "ecg 4 2 5\n1 2 1 1\n2 3 2 1\n3 4 1 1\n4 1 2 1\n1 3 1 9\n")
    tour = write(tmp_path, "sq.tour", "1 1 2 2 3 3 4 4 1\n")
    assert run_cli("verify", inst, tour) == EXIT_INFEASIBLE
    out = capsys.readouterr().out
    assert "verdict fail" in out and "traversed" in out


def test_verify_rejects_improper_tour(tmp_path, capsys):
    inst = write(tmp_path, "p.ecg", "ecg 2 2 2\n1 2 1 1\n1 2 1 1\n")
    tour = write(tmp_path, "p.tour", "1 1 2 2 1\n")
    assert run_cli("verify", inst, tour) == EXIT_INFEASIBLE
    assert "color" in capsys.readouterr().out


def test_verify_malformed_tour(tmp_path, capsys):
    inst = write(tmp_path, "tri.ecg", TRIANGLE)
    tour = write(tmp_path, "bad.tour", "1 1\n")
    assert run_cli("verify", inst, tour) == EXIT_ERROR
    assert "tour" in capsys.readouterr().err


def test_oracle_command(tmp_path, capsys):
    inst = write(tmp_path, "house.ecg", HOUSE)
    assert run_cli("oracle", inst, "--bound", "3") == EXIT_OK
    out = capsys.readouterr().out
    assert "total_weight 11" in out
    bad = write(tmp_path, "bad.ecg", SINGLE_COLOR)
    assert run_cli("oracle", bad) == EXIT_INFEASIBLE
    assert "status infeasible" in capsys.readouterr().out


def test_gen_round_trip(tmp_path, capsys):
    assert run_cli("gen", "4", "3", "6", "3", "11") == EXIT_OK
    text = capsys.readouterr().out
    g = parse_instance_text(text)
    assert g.n == 4 and len(g.edges) == 6
    assert run_cli("gen", "4", "3", "6", "3", "11") == EXIT_OK
    assert capsys.readouterr().out == text


def test_gen_impossible_parameters(capsys):
    assert run_cli("gen", "1", "1", "1", "1", "0") == EXIT_ERROR
    assert "error" in capsys.readouterr().err


def test_format_result_consistency():
    g = parse_instance_text(HOUSE)
    sol = solve(g)
    doc = format_result(g, sol)
    walk = parse_tour_text(doc, g)
    assert walk.weight == sol.total_weight
    assert doc.endswith("\n") and "\r" not in doc


def test_byte_identical_across_processes(tmp_path):
    inst = write(tmp_path, "house.ecg", HOUSE)
    outputs = []
    for hashseed in ("0", "1", "31337"):
        env = dict(os.environ, PYTHONHASHSEED=hashseed)
        proc = subprocess.run(
            [sys.executable, "-m", "ecpostman.cli", "solve", inst],
            capture_output=True,
            env=env,
        )
        assert proc.returncode == EXIT_OK
        outputs.append(proc.stdout)
    assert outputs[0] == outputs[1] == outputs[2]
