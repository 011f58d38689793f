import json

import pytest

from streampace.cli import main
from conftest import FIXTURES, GOLDEN


def run_cli(capsys, *argv):
    try:
        code = main([str(a) for a in argv])
    except SystemExit as exc:
        code = exc.code
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def fx(name):
    return FIXTURES / name


def golden(name):
    return (GOLDEN / name).read_text()


def test_check_invalid_fixture(capsys):
    code, out, err = run_cli(capsys, "check", fx("invalid.spec"))
    assert code == 1
    assert err == golden("check_invalid.txt")
    assert "must" not in err  # human-readable, not a dump
    assert "a does not entail b" in err
    assert "when a arrives without b" in err


def test_check_invalid_json(capsys):
    code, out, err = run_cli(capsys, "check", fx("invalid.spec"), "--json")
    assert code == 1
    assert out == golden("check_invalid.json")
    payload = json.loads(out)
    assert payload["error"]["kind"] == "EntailmentFailure"
    assert payload["error"]["must"] == "a"
    assert payload["error"]["can"] == "b"


def test_check_battery(capsys):
    code, out, err = run_cli(capsys, "check", fx("battery.spec"))
    assert code == 0
    assert out == golden("check_battery.txt")
    assert "drain warning" in out


def test_check_sync_pair(capsys):
    code, out, err = run_cli(capsys, "check", fx("sync_pair.spec"))
    assert code == 1
    assert err == golden("check_sync_pair.txt")


def test_check_hold_fix(capsys):
    code, out, err = run_cli(capsys, "check", fx("hold_fix.spec"))
    assert code == 0
    assert out == golden("check_hold_fix.txt")


def test_check_reorder_flags(capsys):
    code, _, _ = run_cli(capsys, "check", fx("reorder.spec"), "--no-reorder")
    assert code == 1
    code, out, _ = run_cli(capsys, "check", fx("reorder.spec"), "--json")
    assert code == 0
    assert out == golden("check_reorder.json")
    assert json.loads(out)["order"] == ["y", "x"]


def test_check_prev_self_flags(capsys):
    code, _, _ = run_cli(
        capsys, "check", fx("counter.spec"), "--no-prev-self")
    assert code == 1
    code, _, _ = run_cli(capsys, "check", fx("counter.spec"))
    assert code == 0


def test_check_parse_error(capsys):
    code, out, err = run_cli(capsys, "check", fx("truncated.spec"))
    assert code == 2
    assert "truncated.spec:3:1" in err


def test_run_counter(capsys):
    code, out, err = run_cli(
        capsys, "run", fx("counter.spec"), fx("counter_trace.csv"),
        "--verify")
    assert code == 0
    assert out == golden("run_counter.csv")
    assert out.endswith("0,1\n1,2\n2,3\n3,4\n")


def test_run_hold_fix(capsys):
    code, out, err = run_cli(
        capsys, "run", fx("hold_fix.spec"), fx("hold_fix_trace.csv"))
    assert code == 0
    assert out == golden("run_hold_fix.csv")
    assert "1,,1" in out  # y is empty then 1


def test_run_out_file(tmp_path, capsys):
    dest = tmp_path / "out.csv"
    code, out, err = run_cli(
        capsys, "run", fx("counter.spec"), fx("counter_trace.csv"),
        "--out", dest)
    assert code == 0
    assert dest.read_text() == golden("run_counter.csv")


def test_run_rejects_ill_typed_spec(capsys):
    code, _, err = run_cli(
        capsys, "run", fx("invalid.spec"), fx("hold_fix_trace.csv"))
    assert code == 1


def test_run_bad_trace_header(tmp_path, capsys):
    bad = tmp_path / "bad.csv"
    bad.write_text("t,a\n0,1\n")
    code, _, err = run_cli(capsys, "run", fx("counter.spec"), bad)
    assert code == 2
    assert "time" in err


def test_run_missing_column(tmp_path, capsys):
    bad = tmp_path / "bad.csv"
    bad.write_text("time,z\n0,1\n")
    code, _, err = run_cli(capsys, "run", fx("counter.spec"), bad)
    assert code == 2
    assert "missing input column" in err


def test_oracle_counterexample(capsys):
    code, out, err = run_cli(
        capsys, "oracle", fx("sync_pair.spec"), "--horizon", "2",
        "--domain", "0")
    assert code == 1
    assert out == golden("oracle_sync_pair.txt")


def test_oracle_counterexample_json(capsys):
    code, out, err = run_cli(
        capsys, "oracle", fx("sync_pair.spec"), "--horizon", "2",
        "--domain", "0", "--json")
    assert code == 1
    assert out == golden("oracle_sync_pair.json")


def test_oracle_consistent_json(capsys):
    code, out, err = run_cli(
        capsys, "oracle", fx("hold_fix.spec"), "--horizon", "2",
        "--domain", "0", "--json")
    assert code == 0
    assert out == golden("oracle_hold_fix.json")
    assert json.loads(out)["inputs_checked"] == 16


def test_oracle_battery_consistent(capsys):
    code, out, err = run_cli(
        capsys, "oracle", fx("battery.spec"), "--horizon", "2",
        "--domain", "0,1", "--json")
    assert code == 0
    assert out == golden("oracle_battery.json")


def test_oracle_space_too_large(capsys):
    code, out, err = run_cli(
        capsys, "oracle", fx("battery.spec"), "--horizon", "8",
        "--domain", ",".join(str(v) for v in range(20)))
    assert code == 2
    assert "too large" in err


def test_counterexample_replay(tmp_path, capsys):
    # the printed counterexample trace, fed back to `run`, reproduces the
    # inconsistency: the evaluator trips its definedness check
    code, out, err = run_cli(
        capsys, "oracle", fx("sync_pair.spec"), "--horizon", "2",
        "--domain", "0", "--json")
    assert code == 1
    trace = tmp_path / "cex.csv"
    trace.write_text(json.loads(out)["trace_csv"])
    from streampace.parser import parse_spec
    from streampace.evaluator import DefinednessViolation, EvalPlan, run
    from streampace.traces import read_trace
    spec = parse_spec(fx("sync_pair.spec").read_text())
    rho_in = read_trace(trace.read_text())
    with pytest.raises(DefinednessViolation):
        run(EvalPlan(spec, list(spec.outputs)), rho_in, 2)


def test_missing_spec_file(capsys):
    code, out, err = run_cli(capsys, "check", "no_such_file.spec")
    assert code == 2
