import json

import pytest

from akzeta.cli import main, CliConfig
from akzeta.errors import DomainError


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_config_rejects_low_precision():
    with pytest.raises(DomainError):
        CliConfig(digits=10)


def test_dual_command(capsys):
    code, out, _ = run(capsys, "dual", "1,2")
    assert code == 0
    assert "dual(1,2) = 3" in out


def test_dual_json(capsys):
    code, out, _ = run(capsys, "--json", "dual", "3")
    assert code == 0
    rec = json.loads(out)
    assert rec["dual"] == "1,2"
    assert rec["weight"] == 3


def test_dual_non_admissible_exits_2(capsys):
    code, _, err = run(capsys, "dual", "1,1")
    assert code == 2
    assert "error" in err


def test_eval_zeta(capsys):
    code, out, _ = run(capsys, "eval", "zeta", "2", "--x", "0")
    assert code == 0
    assert "1.644934066848226" in out


def test_eval_t(capsys):
    code, out, _ = run(capsys, "eval", "t", "2")
    assert code == 0
    assert "1.23370055013616" in out


def test_eval_ak_json_roundtrip(capsys):
    code, out, _ = run(capsys, "--json", "eval", "ak", "--v", "1", "--p", "4",
                       "--m", "0", "--x", "-0.5")
    assert code == 0
    rec = json.loads(out)
    assert abs(rec["value"] - 0.5483113556160755) < 1e-12
    assert rec["bound"] > 0
    assert rec["bound_kind"] in ("rigorous", "estimated")


def test_eval_missing_composition_exits_2(capsys):
    code, _, err = run(capsys, "eval", "zeta")
    assert code == 2


def test_eval_divergent_exits_2(capsys):
    code, _, err = run(capsys, "eval", "zeta", "1,1")
    assert code == 2


def test_bpoly(capsys):
    code, out, _ = run(capsys, "bpoly", "--v", "1", "--p", "1", "--m", "1")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].endswith("1")
    assert lines[1].endswith("x - 1/2")


def test_verify_single_id(capsys):
    code, out, _ = run(capsys, "--cutoff", "20000", "verify", "APERY")
    assert code == 0
    assert "pass" in out


def test_verify_json_records(capsys):
    code, out, _ = run(capsys, "--cutoff", "20000", "--json", "verify", "ARCSIN")
    assert code == 0
    recs = [json.loads(line) for line in out.strip().splitlines()]
    assert len(recs) == 5
    assert all(r["pass"] for r in recs)


def test_verify_unknown_exits_2(capsys):
    code, _, err = run(capsys, "verify", "BOGUS")
    assert code == 2


def test_verify_requires_id_or_all(capsys):
    code, _, err = run(capsys, "verify")
    assert code == 2
