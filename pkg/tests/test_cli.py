"""CLI dispatcher: exit-code contract, JSON reports, and stdout formats."""

import json
import subprocess
import sys
from importlib import resources

import pytest

from ginvlab.cli import main

LAW_DIR = resources.files("ginvlab") / "laws"


def _law_path(name):
    return str(LAW_DIR / name)


def _write_matrix(tmp_path, rows, name="m.json"):
    path = tmp_path / name
    path.write_text(json.dumps(rows), encoding="utf-8")
    return str(path)


# -- compute -----------------------------------------------------------------------


def test_compute_mp_frozen_value(tmp_path, capsys):
    path = _write_matrix(tmp_path, [["1", "1"], ["0", "0"]])
    assert main(["compute", path, "--kind", "mp"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["value"]["entries"] == [["1/2", "0"], ["1/2", "0"]]
    assert data["kind"] == "mp" and data["k"] == 1 and data["verified"]
    assert data["version"]


def test_compute_wd_on_identity_is_identity(tmp_path, capsys):
    path = _write_matrix(tmp_path, [["1", "0"], ["0", "1"]])
    assert main(["compute", path, "--kind", "wd"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["value"]["entries"] == [["1", "0"], ["0", "1"]]


def test_compute_group_inverse_exit_3_when_absent(tmp_path, capsys):
    path = _write_matrix(tmp_path, [["0", "1"], ["0", "0"]])
    out_path = tmp_path / "report.json"
    assert main(["compute", path, "--kind", "grp", "--out", str(out_path)]) == 3
    data = json.loads(out_path.read_text())
    assert data["exists"] is False and "index" in data["reason"]


def test_compute_accepts_full_matrix_object_and_gaussians(tmp_path, capsys):
    obj = {"n": 1, "field": "Q(i)", "entries": [["0+1*i"]]}
    path = tmp_path / "z.json"
    path.write_text(json.dumps(obj), encoding="utf-8")
    assert main(["compute", str(path), "--kind", "mp"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["value"]["entries"] == [["0-1*i"]]


def test_compute_wdmp_with_explicit_witness(tmp_path, capsys):
    a_path = _write_matrix(tmp_path, [["0", "1"], ["0", "0"]], "a.json")
    assert main(["compute", a_path, "--kind", "wd"]) == 0
    wd_value = json.loads(capsys.readouterr().out)["value"]
    wit_path = tmp_path / "w.json"
    wit_path.write_text(json.dumps(wd_value), encoding="utf-8")
    assert main(["compute", a_path, "--kind", "wdmp", "--witness", str(wit_path)]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["kind"] == "wdmp" and data["witness_wd"] == wd_value


def test_compute_witness_restricted_to_wdmp(tmp_path, capsys):
    path = _write_matrix(tmp_path, [["1"]])
    assert main(["compute", path, "--kind", "mp", "--witness", path]) == 2


def test_compute_input_errors_exit_2(tmp_path, capsys):
    missing = str(tmp_path / "nope.json")
    assert main(["compute", missing, "--kind", "mp"]) == 2
    bad = tmp_path / "bad.json"
    bad.write_text("not json", encoding="utf-8")
    assert main(["compute", str(bad), "--kind", "mp"]) == 2
    ragged = _write_matrix(tmp_path, [["1", "2"], ["3"]], "ragged.json")
    assert main(["compute", ragged, "--kind", "mp"]) == 2
    err = capsys.readouterr().err
    assert "error" in err


def test_compute_text_format(tmp_path, capsys):
    path = _write_matrix(tmp_path, [["1", "1"], ["0", "0"]])
    assert main(["compute", path, "--kind", "mp", "--format", "text"]) == 0
    out = capsys.readouterr().out
    assert "mp inverse verified (k=1)" in out
    assert "[1/2 0]" in out


def test_unknown_kind_is_an_argparse_error(tmp_path, capsys):
    path = _write_matrix(tmp_path, [["1"]])
    with pytest.raises(SystemExit) as excinfo:
        main(["compute", path, "--kind", "zz"])
    assert excinfo.value.code == 2


# -- oracle ------------------------------------------------------------------------


def test_oracle_frozen_witness_sets(capsys):
    assert main(["oracle", "--ring", "Zn:6", "--element", "2", "--kind", "wd"]) == 0
    assert json.loads(capsys.readouterr().out)["witnesses"] == [2, 5]
    assert main(["oracle", "--ring", "Zn:6", "--element", "1", "--kind", "mp"]) == 0
    assert json.loads(capsys.readouterr().out)["witnesses"] == [1]


def test_oracle_empty_set_exits_3_but_still_writes(tmp_path, capsys):
    out_path = tmp_path / "ws.json"
    code = main(
        ["oracle", "--ring", "Zn:4", "--element", "2", "--kind", "wd",
         "--out", str(out_path)]
    )
    assert code == 3
    data = json.loads(out_path.read_text())
    assert data["witnesses"] == [] and data["ring"] == "Zn:4"
    assert json.loads(capsys.readouterr().out) == data


def test_oracle_input_errors(capsys):
    assert main(["oracle", "--ring", "Zn:x", "--element", "0", "--kind", "wd"]) == 2
    assert main(["oracle", "--ring", "Zn:6", "--element", "9", "--kind", "wd"]) == 2


def test_oracle_text_format(capsys):
    assert (
        main(["oracle", "--ring", "Zn:6", "--element", "2", "--kind", "wd",
              "--format", "text"])
        == 0
    )
    assert "{2, 5}" in capsys.readouterr().out


# -- law ---------------------------------------------------------------------------


def test_law_pass_on_ring(capsys):
    assert main(["law", _law_path("wd_add.law"), "--ring", "Zn:6"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["status"] == "pass" and data["bindings_satisfying"] == 78


def test_law_counterexample_exit_1(capsys):
    code = main(
        ["law", _law_path("wd_add_unhyp.law"), "--ring", "Zn:5", "--budget", "1000"]
    )
    assert code == 1
    data = json.loads(capsys.readouterr().out)
    assert {"a": 1, "b": 1} in [c["variables"] for c in data["counterexamples"]]


def test_law_sampled_on_matrices(capsys):
    code = main(
        ["law", _law_path("wdmp_solve.law"), "--matrices", "2:Q", "--samples", "40"]
    )
    assert code == 0
    data = json.loads(capsys.readouterr().out)
    assert data["mode"] == "sampled" and data["status"] == "pass"
    assert data["carrier"]["dimension"] == 2


def test_law_parse_error_reports_position(tmp_path, capsys):
    bad = tmp_path / "bad.law"
    bad.write_text("a^{foo} in wd(a)", encoding="utf-8")
    assert main(["law", str(bad), "--ring", "Zn:6"]) == 2
    assert "line 1, column 2" in capsys.readouterr().err


def test_law_carrier_flags_are_exclusive(capsys):
    law = _law_path("wd_add.law")
    assert main(["law", law]) == 2
    assert main(["law", law, "--ring", "Zn:6", "--matrices", "2:Q"]) == 2
    assert main(["law", law, "--ring", "Zn:6", "--mode", "sampled"]) == 2


def test_law_probe_modes(capsys):
    law = _law_path("wd_rol_a.law")
    assert main(["law", law, "--ring", "Zn:6", "--mode", "probe"]) == 0
    assert json.loads(capsys.readouterr().out)["status"] == "empty"
    assert main(["law", law, "--ring", "M2:Z2", "--mode", "probe"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["status"] == "nonempty" and data["hits_found"] == 1266


# -- suite -------------------------------------------------------------------------


def test_suite_pass_subset(capsys):
    code = main(["suite", "--rings", "Zn:6", "--ids", "WD-ADD,WD-IDEMP"])
    assert code == 0
    data = json.loads(capsys.readouterr().out)
    assert data["failures"] == 0 and len(data["entries"]) == 2


def test_suite_finds_the_known_counterexample(capsys):
    code = main(["suite", "--rings", "M2:Z2", "--ids", "WDMP-RPC", "--budget", "2"])
    assert code == 1
    data = json.loads(capsys.readouterr().out)
    assert data["entries"][0]["status"] == "fail"


def test_suite_unknown_id_exit_2(capsys):
    assert main(["suite", "--rings", "Zn:6", "--ids", "NOT-A-THEOREM"]) == 2


def test_suite_byte_identical_reports(tmp_path):
    args = ["suite", "--rings", "Zn:6", "--ids", "WD-ADD,WDMP-SOLVE"]
    out1, out2 = tmp_path / "r1.json", tmp_path / "r2.json"
    assert main(args + ["--out", str(out1)]) == 0
    assert main(args + ["--out", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()


def test_suite_text_format(capsys):
    assert main(["suite", "--rings", "Zn:6", "--ids", "WD-ADD", "--format", "text"]) == 0
    out = capsys.readouterr().out
    assert "WD-ADD" in out and "failures: 0" in out


# -- console entry point --------------------------------------------------------------


def test_installed_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "ginvlab.cli", "--version"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.startswith("ginvlab ")
