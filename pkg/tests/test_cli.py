"""End-to-end checks of the command-line front end.

Everything drives ``sylq.cli.main`` in process so exit codes and streams are
observable through capsys; one test shells out to confirm the module and the
console script are wired up.
"""

import io
import json
import subprocess
import sys

import pytest

from sylq.cli import main

from conftest import FIXTURE_DIR

PETS = str(FIXTURE_DIR / "pets_at_home.syl")
COURSE_CRISP = str(FIXTURE_DIR / "course_passrates_crisp.syl")
COURSE_FUZZY = str(FIXTURE_DIR / "course_passrates_fuzzy.syl")
COURSE_PARTIAL = str(FIXTURE_DIR / "course_passrates_nonnormalized.syl")
WAREHOUSE = str(FIXTURE_DIR / "warehouse_sales_mix.syl")

INFEASIBLE_DOC = """\
terms: p, q
universe: 1
premise: abs[2, 3] p -> q
conclude: abs? p -> q
"""

# strict |p & q| > 0 inflated to >= 5 by the epsilon flag, while integer
# populations attain 1; the cross-check must flag that
OVERTIGHT_DOC = """\
terms: p, q
premise: some p -> q
conclude: abs? p & q -> *
"""


def run_cli(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_crisp_text_output(capsys):
    code, out, err = run_cli(capsys, [PETS])
    assert code == 0
    assert err == ""
    lines = out.splitlines()
    assert lines[0] == "mode: crisp"
    assert lines[1] == "conclusion: abs? * -> *"
    assert "lo: 3" in lines
    assert "hi: 3" in lines
    assert "status: bounded" in lines
    assert "epsilon: 1 (count)" in lines


def test_json_key_order_and_values(capsys):
    code, out, _ = run_cli(capsys, [COURSE_CRISP, "--format", "json"])
    assert code == 0
    payload = json.loads(out)
    assert list(payload)[:2] == ["lo", "hi"]
    assert list(payload) == [
        "lo",
        "hi",
        "mode",
        "conclusion",
        "status",
        "levels",
        "fitted",
        "max_feasible_level",
        "epsilon",
    ]
    assert payload["lo"] == pytest.approx(0.2)
    assert payload["hi"] == 1
    assert payload["status"] == "bounded"
    assert payload["epsilon"] == {"kind": "proportion", "value": 1e-06}


def test_json_output_is_deterministic(capsys):
    _, first, _ = run_cli(capsys, [WAREHOUSE, "--format", "json"])
    _, second, _ = run_cli(capsys, [WAREHOUSE, "--format", "json"])
    assert first == second


def test_kersup_json_payload(capsys):
    code, out, _ = run_cli(capsys, [WAREHOUSE, "--format", "json"])
    assert code == 0
    payload = json.loads(out)
    assert payload["mode"] == "kersup"
    assert payload["kernel"] == {"lo": 0.15, "hi": 0.45}
    assert payload["support"] == {"lo": 0.05, "hi": 0.5}
    assert payload["fitted"] == [0.05, 0.15, 0.45, 0.5]


def test_csv_levels(capsys):
    code, out, _ = run_cli(capsys, [COURSE_CRISP, "--format", "csv"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "level,lo,hi"
    assert lines[1] == "0,0.2,1"


def test_csv_unbounded_hi_is_empty_cell(capsys):
    doc = "terms: p, q\npremise: some p -> q\nconclude: abs? p & q -> *\n"
    sys.stdin = io.StringIO(doc)
    code, out, _ = run_cli(capsys, ["-", "--format", "csv"])
    assert code == 0
    assert out.splitlines()[1] == "0,0,"


def test_reads_stdin_when_file_is_dash(capsys):
    sys.stdin = io.StringIO((FIXTURE_DIR / "pets_at_home.syl").read_text())
    code, out, _ = run_cli(capsys, ["-"])
    assert code == 0
    assert "lo: 3" in out


def test_missing_file_is_input_error(capsys):
    code, out, err = run_cli(capsys, [str(FIXTURE_DIR / "no_such_doc.syl")])
    assert code == 1
    assert out == ""
    assert err.startswith("error:")


def test_parse_error_reports_line(capsys):
    sys.stdin = io.StringIO("terms: p, q\npremise: all p q\nconclude: abs? p -> q\n")
    code, _, err = run_cli(capsys, ["-"])
    assert code == 1
    assert "line 2" in err


def test_unit_mixing_is_input_error(capsys):
    doc = (
        "terms: p, q\n"
        "premise: abs[1, 2] p -> q\n"
        "premise: prop[0.5, 1] q -> p\n"
        "conclude: abs? p -> q\n"
    )
    sys.stdin = io.StringIO(doc)
    code, _, err = run_cli(capsys, ["-"])
    assert code == 1
    assert "universe" in err


def test_infeasible_premises_exit_code(capsys):
    sys.stdin = io.StringIO(INFEASIBLE_DOC)
    code, _, err = run_cli(capsys, ["-"])
    assert code == 2
    assert "premises" in err


def test_size_guard_exit_code(capsys):
    code, _, err = run_cli(capsys, ["verify", PETS, "--cap", "60"])
    assert code == 3
    assert "guard" in err


def test_verify_agreement(capsys):
    code, out, err = run_cli(capsys, ["verify", PETS, "--cap", "10"])
    assert code == 0
    assert out == ""
    assert err.strip() == "verify crisp: engine [3, 3]; enumerated [3, 3]: OK"


def test_verify_checks_both_cut_levels(capsys):
    code, _, err = run_cli(capsys, ["verify", WAREHOUSE, "--cap", "20"])
    assert code == 0
    lines = err.strip().splitlines()
    assert len(lines) == 2
    assert lines[0].startswith("verify support:")
    assert lines[1].startswith("verify kernel:")
    assert all(line.endswith("OK") for line in lines)


def test_verify_flags_overtight_epsilon(capsys):
    sys.stdin = io.StringIO(OVERTIGHT_DOC)
    code, _, err = run_cli(
        capsys, ["verify", "-", "--cap", "6", "--epsilon-count", "5"]
    )
    assert code == 3
    assert "DISAGREE" in err


def test_run_with_verify_flag(capsys):
    code, out, err = run_cli(capsys, [PETS, "--verify", "10"])
    assert code == 0
    assert "lo: 3" in out
    assert "verify crisp:" in err and "OK" in err


def test_cli_levels_flag_overrides_document_option(capsys):
    # the document pins levels=21, putting the feasibility threshold at 0.95
    _, out, _ = run_cli(capsys, [COURSE_PARTIAL, "--format", "json"])
    assert len(json.loads(out)["levels"]) == 21
    assert json.loads(out)["max_feasible_level"] == pytest.approx(0.95)
    _, out, _ = run_cli(capsys, [COURSE_PARTIAL, "--levels", "11", "--format", "json"])
    assert len(json.loads(out)["levels"]) == 11
    assert json.loads(out)["max_feasible_level"] == pytest.approx(0.90)


def test_mode_flag_overrides_document_option(capsys):
    code, out, _ = run_cli(capsys, [COURSE_FUZZY, "--mode", "kersup", "--format", "json"])
    assert code == 0
    assert json.loads(out)["mode"] == "kersup"


def test_crisp_mode_rejects_fuzzy_document(capsys):
    code, _, err = run_cli(capsys, [COURSE_FUZZY, "--mode", "crisp"])
    assert code == 1
    assert err.startswith("error:")


def test_epsilon_prop_flag_changes_margin(capsys):
    _, out, _ = run_cli(
        capsys, [COURSE_CRISP, "--epsilon-prop", "0.001", "--format", "json"]
    )
    assert json.loads(out)["epsilon"] == {"kind": "proportion", "value": 0.001}


def test_module_and_console_script_entry_points():
    by_module = subprocess.run(
        [sys.executable, "-m", "sylq.cli", PETS],
        capture_output=True,
        text=True,
    )
    by_script = subprocess.run(["sylq", PETS], capture_output=True, text=True)
    assert by_module.returncode == 0
    assert by_script.returncode == 0
    assert by_module.stdout == by_script.stdout
    assert "lo: 3" in by_module.stdout
