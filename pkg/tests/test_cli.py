"""The solcob command line: outputs, exit codes and JSON schemas."""

import json
import subprocess
import sys

import jsonschema
import pytest

from solcob import cobordism
from solcob.cli import main
from solcob.schemas import SCHEMAS


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, schema, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    data = json.loads(out)
    jsonschema.validate(data, SCHEMAS[schema])
    return code, data


def test_h1_text(capsys):
    assert run(capsys, "h1", "--sol", "2", "2")[:2] == (0, "Z/4 + Z/4\n")
    assert run(capsys, "h1", "--dihedral", "2", "1")[:2] == (0, "Z/2 + Z/2\n")


def test_h1_degenerate(capsys):
    code, out, _ = run(capsys, "h1", "--sol", "0", "0")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "Z/4 + Z/4"
    assert "degenerate" in lines[1]


def test_h1_general_matrix(capsys):
    code, data = run_json(capsys, "h1", "h1", "--sol", "1", "1", "1", "2")
    assert code == 0 and data["group"]["torsion"] == [2, 2, 4]


def test_h1_bad_determinant(capsys):
    code, out, err = run(capsys, "h1", "--sol", "1", "1", "1", "1")
    assert code == 2 and out == ""
    assert err.startswith("solcob: error:")


def test_dinv_json(capsys):
    code, data = run_json(capsys, "dinv_sol", "dinv", "--sol", "2", "3")
    assert code == 0 and data["q_sum"] == "-1" and data["total"] == "-2"
    code, data = run_json(capsys, "dinv_dihedral", "dinv", "--dihedral", "4")
    assert sorted(data["d"]) == sorted(["0", "0", "3/2", "1/2"])


def test_dinv_parity_error(capsys):
    assert run(capsys, "dinv", "--sol", "1", "2")[0] == 2


def test_lescop_and_cw(capsys):
    assert run(capsys, "lescop", "--dihedral", "8")[1] == "-2\n"
    assert run(capsys, "cw", "--sol", "2", "5")[1] == "3/16\n"
    code, data = run_json(capsys, "cw", "cw", "--dihedral", "8")
    assert data["value"] == "-1/2"
    code, data = run_json(capsys, "lescop", "lescop", "--sol", "2", "5")
    assert data["value"] == "3"


def test_classify_exit_codes(capsys):
    code, out, _ = run(capsys, "classify", "2", "4", "4", "2")
    assert (code, out) == (1, "DISTINGUISHED by total_sum\n")
    code, out, _ = run(capsys, "classify", "3", "5", "-5", "-3")
    assert (code, out) == (0, "HOMEOMORPHIC\n")
    code, data = run_json(capsys, "classify", "classify", "2", "2", "6", "6")
    assert code == 1 and data["verdict"]["witness"] == "block_matching"


def test_census_outputs(capsys):
    code, data = run_json(capsys, "census", "census", "--bound", "2")
    assert code == 0 and data["ok"] and data["parameters"] == 25
    code, out, _ = run(capsys, "--format", "csv", "--bound", "1", "census")
    header = out.splitlines()[0].split(",")
    assert code == 0 and header[0] == "a;b" and len(header) == 10


def test_splice_dot(capsys, caplog):
    caplog.set_level("INFO", logger="solcob")
    code, out, _ = run(capsys, "splice", "1", "2", "1", "3", "--format", "dot")
    assert code == 0 and out.startswith("graph plumbing {")
    assert "holds" in caplog.text


def test_splice_json(capsys):
    code, data = run_json(capsys, "splice", "splice", "2", "3", "1", "7")
    assert code == 0 and data["identity_holds"]
    assert data["A"] == data["signed_formula_A"]


def test_unsupported_format(capsys):
    code, _, err = run(capsys, "h1", "--sol", "2", "2", "--format", "dot")
    assert code == 2 and "does not support" in err


def test_argparse_usage_errors():
    with pytest.raises(SystemExit) as exc:
        main(["classify", "1", "2"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["census", "--bound", "0"])
    assert exc.value.code == 2


def test_bad_enumeration_cap(capsys, monkeypatch):
    monkeypatch.setenv("SOLCOB_ENUM_CAP", "-3")
    assert run(capsys, "h1", "--sol", "2", "2")[0] == 2


def test_enumeration_cap_limits_work(capsys, monkeypatch):
    # cached results need no enumeration, so start from cold caches
    from solcob import abelian, classify, spinc
    for fn in (classify.signature, abelian._isomorphism_list, spinc._restriction_table):
        fn.cache_clear()
    monkeypatch.setenv("SOLCOB_ENUM_CAP", "4")
    code, _, err = run(capsys, "classify", "2", "4", "4", "6")
    assert code == 2 and "enumeration cap" in err


def test_verify_passes(capsys):
    code, data = run_json(capsys, "verify", "verify")
    assert code == 0 and data["passed"]
    assert len(data["items"]) == 10


def test_verify_reports_tampered_constant(capsys, monkeypatch):
    table = {k: {"groups": dict(v["groups"]), "maps": dict(v["maps"])}
             for k, v in cobordism.H2_DIAGRAM_TABLE.items()}
    table[(1, 1)]["maps"]["iota_D_a"] = [[1, -1]]
    monkeypatch.setattr(cobordism, "H2_DIAGRAM_TABLE", table)
    code, out, _ = run(capsys, "verify")
    assert code == 1
    assert "FAIL h2_diagram_table" in out


def test_splice_logs_identity_check():
    proc = subprocess.run([sys.executable, "-m", "solcob.cli", "splice", "1", "2", "1", "3"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "holds" in proc.stderr


def test_console_script():
    proc = subprocess.run([sys.executable, "-m", "solcob.cli", "h1", "--sol", "2", "3"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "Z/4 + Z/4"
