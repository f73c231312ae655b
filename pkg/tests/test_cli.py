import json
import os

import pytest

from qprime.cli import main
from qprime.formspec import parse_form_spec
from qprime.qseries import QExpansion


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_expand_json(capsys):
    code, out, _ = run_cli(capsys, "expand", "D^2 G2", "--precision", "3")
    assert code == 0
    data = json.loads(out)
    assert data["coeffs"] == ["0", "1", "12", "36"]


def test_expand_csv(capsys):
    code, out, _ = run_cli(capsys, "expand", "G4", "--precision", "5", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,coefficient"
    assert lines[1] == "0,-1/240"
    assert [line.split(",")[1] for line in lines[2:]] == ["1", "9", "28", "73", "126"]


def test_expand_round_trip(capsys):
    spec = "3/2 D^2 G4 + DELTA - 2 S16.0"
    code, out, _ = run_cli(capsys, "expand", spec, "--precision", "25")
    assert code == 0
    assert QExpansion.from_json(out) == parse_form_spec(spec).expand(25)


def test_expand_classical_convention(capsys):
    code, out, _ = run_cli(
        capsys, "expand", "G4", "--precision", "2",
        "--eisenstein-constant-sign", "classical",
    )
    assert code == 0
    assert json.loads(out)["coeffs"][0] == "1/240"


def test_expand_from_json_file(capsys, tmp_path):
    form = parse_form_spec("D G2 - 24 DELTA")
    path = tmp_path / "form.json"
    path.write_text(form.to_json())
    code, out, _ = run_cli(capsys, "expand", str(path), "--precision", "4")
    assert code == 0
    assert json.loads(out)["coeffs"] == ["0", "-23", "582", "-6036", "35356"]


def test_output_flag_writes_file(capsys, tmp_path):
    path = tmp_path / "out.json"
    code, out, _ = run_cli(capsys, "expand", "G6", "--precision", "3", "--output", str(path))
    assert code == 0
    assert out == ""
    assert json.loads(path.read_text())["coeffs"] == ["1/504", "1", "33", "244"]


def test_decompose(capsys):
    code, out, _ = run_cli(capsys, "decompose", "H6", "--precision", "40")
    assert code == 0
    data = json.loads(out)
    assert data["certificate_precision"] == 40
    assert data["cusp_part"]["cusp"] == []
    eis_keys = {(k, l) for k, l, _ in data["eis_part"]["eis"]}
    assert eis_keys == {(2, 2), (2, 1), (2, 0), (4, 0)}


def test_decide_member(capsys):
    code, out, _ = run_cli(capsys, "decide", "H8", "--bound", "100")
    assert code == 0
    data = json.loads(out)
    assert data["verdict"]["verdict"] == "InOmegaTilde"
    assert data["scan"]["nonneg_ok"] and data["scan"]["zero_set_equals_primes"]


def test_decide_eisenstein_witness(capsys):
    code, out, _ = run_cli(capsys, "decide", "G4", "--bound", "50")
    assert code == 1
    data = json.loads(out)
    assert data["verdict"]["verdict"] == "Not"
    assert data["verdict"]["witness"]["type"] == "prime"


def test_decide_cusp_witness(capsys):
    code, out, _ = run_cli(capsys, "decide", "DELTA", "--bound", "50")
    assert code == 1
    data = json.loads(out)
    assert data["verdict"]["witness"]["type"] == "cusp"


def test_finite_check_auto_primes(capsys):
    code, out, _ = run_cli(capsys, "finite-check", "H6")
    assert code == 0
    assert json.loads(out)["verdict"] == "VanishesAtAllPrimes"


def test_finite_check_explicit_primes(capsys):
    code, out, _ = run_cli(capsys, "finite-check", "G4", "--primes", "2,3")
    assert code == 1
    data = json.loads(out)
    assert data["verdict"] == "NotAllPrimes"
    assert data["witness"]["p"] == 2


def test_finite_check_insufficient(capsys):
    code, out, _ = run_cli(capsys, "finite-check", "H8", "--first-primes", "3")
    assert code == 1
    data = json.loads(out)
    assert data["verdict"] == "InsufficientPrimes"
    assert data["degree_bound"] == 5
    assert data["needed"] == 6


def test_macmahon_csv(capsys):
    code, out, _ = run_cli(capsys, "macmahon", "--amax", "2", "--bound", "6", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,M_1,M_2,identity_holds"
    assert "5,6,9,1" in lines
    assert "4,7,3,0" in lines


def test_macmahon_json(capsys):
    code, out, _ = run_cli(capsys, "macmahon", "--amax", "1", "--bound", "5")
    assert code == 0
    data = json.loads(out)
    assert data["m"] == [[1, 3, 4, 7, 6]]
    assert "identity_holds" not in data


def test_signstats(capsys):
    code, out, _ = run_cli(capsys, "signstats", "DELTA", "--bound", "10")
    assert code == 0
    data = json.loads(out)
    assert data["sign_changes"] == 2
    assert data["partial_sum"] == [[10, "-11686"]]


def test_signstats_grid_and_plot_data(capsys):
    code, out, _ = run_cli(
        capsys, "signstats", "DELTA", "--bound", "100",
        "--grid", "10,50,100", "--plot-data",
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "x,normalized_sq"
    assert len(lines) == 4
    assert [line.split(",")[0] for line in lines[1:]] == ["10", "50", "100"]


def test_signstats_plot_data_needs_cusp_form(capsys):
    code, _, err = run_cli(capsys, "signstats", "G4", "--bound", "10", "--plot-data")
    assert code == 2
    assert "cusp-only" in err


def test_deligne(capsys):
    code, out, _ = run_cli(capsys, "deligne", "--weight", "12", "--bound", "100")
    assert code == 0
    data = json.loads(out)
    assert data["passed"] is True
    assert data["failures"] == []


def test_deligne_unsupported_weight(capsys):
    code, _, err = run_cli(capsys, "deligne", "--weight", "14")
    assert code == 2
    assert "weight" in err


def test_parse_error_exit_code(capsys):
    code, _, err = run_cli(capsys, "expand", "G4 %% junk")
    assert code == 2
    assert "position" in err


def test_usage_error_exit_code(capsys):
    assert run_cli(capsys, "frobnicate")[0] == 2
    assert run_cli(capsys)[0] == 2


def test_bad_precision_rejected(capsys):
    code, _, err = run_cli(capsys, "expand", "G4", "--precision", "0")
    assert code == 2
    assert "--precision" in err


def test_help_exits_zero(capsys):
    assert run_cli(capsys, "--help")[0] == 0


def test_threads_env_validation(capsys, monkeypatch):
    monkeypatch.setenv("QPRIME_THREADS", "zero")
    code, _, err = run_cli(capsys, "expand", "G4", "--precision", "2")
    assert code == 2
    assert "QPRIME_THREADS" in err
    monkeypatch.setenv("QPRIME_THREADS", "4")
    assert run_cli(capsys, "expand", "G4", "--precision", "2")[0] == 0


def test_bad_json_file_rejected(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{nope")
    assert run_cli(capsys, "expand", str(path))[0] == 2
