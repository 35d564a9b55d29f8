import json

import pytest

from leroy.cli import CSV_HEADER, SCHEMA, conjecture_window, main
from fractions import Fraction


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_eval_e(capsys):
    code, out, _ = run(capsys, "eval", "--alpha", "1", "--beta", "1", "--gamma", "1", "--z-re", "1", "--digits", "30")
    rec = json.loads(out)
    assert code == 0 and rec["schema"] == SCHEMA
    assert rec["value"]["re"].startswith("2.71828182845904523536")
    assert isinstance(rec["abs_err_estimate"], str)


def test_eval_one_over_pi(capsys):
    code, out, _ = run(capsys, "eval", "--beta", "0.5", "--gamma", "2", "--z-re", "0")
    assert json.loads(out)["value"]["re"].startswith("0.318309886183790671")


def test_eval_round_trip_is_bit_identical(capsys):
    argv = ("eval", "--alpha", "0.6", "--beta", "0.8", "--gamma", "3", "--z-re", "-7", "--z-im", "2", "--digits", "25")
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second


def test_eval_methods(capsys):
    code, out, _ = run(capsys, "eval", "--alpha", "0.5", "--beta", "0.75", "--gamma", "4", "--z-re", "-10", "--method", "contour-minus", "--digits", "12")
    assert code == 0 and json.loads(out)["value"]["re"].startswith("0.0526108743")
    code, out, _ = run(capsys, "eval", "--alpha", "0.6", "--beta", "0.8", "--gamma", "3", "--z-re", "-3000", "--method", "asym", "--K", "10")
    rec = json.loads(out)
    assert code == 0 and rec["diagnostics"]["regime"] == "algebraic"


def test_exit_codes(capsys):
    assert run(capsys, "eval", "--alpha", "abc")[0] == 2
    assert run(capsys, "eval", "--alpha", "0")[0] == 2
    assert run(capsys, "eval", "--method", "nope")[0] == 2
    code, out, err = run(capsys, "eval", "--method", "contour-minus", "--z-re", "2")
    assert code == 3 and out == "" and "DomainError" in err
    code, _, err = run(capsys, "eval", "--alpha", "0.3", "--gamma", "1", "--z-re", "-100000", "--digits", "10")
    assert code == 3 and "precision budget" in err


def test_env_digits(capsys, monkeypatch):
    monkeypatch.setenv("LEROY_DIGITS", "50")
    _, out, _ = run(capsys, "eval", "--z-re", "1")
    assert json.loads(out)["input"]["digits"] == 50
    _, out, _ = run(capsys, "eval", "--z-re", "1", "--digits", "12")
    assert json.loads(out)["input"]["digits"] == 12
    monkeypatch.setenv("LEROY_DIGITS", "many")
    assert run(capsys, "eval")[0] == 2


def test_figure_csv(capsys):
    code, out, _ = run(capsys, "figure", "--figure", "1", "--t-min", "5", "--t-max", "100", "--points", "50")
    lines = out.strip().splitlines()
    assert code == 0 and lines[0] == ",".join(CSV_HEADER)
    assert len(lines) == 51
    rel = [float(line.split(",")[3]) for line in lines[1:]]
    assert rel[-1] < rel[len(rel) // 2] < rel[5]
    assert run(capsys, "figure", "--figure", "1", "--t-min", "10", "--t-max", "5")[0] == 2


def test_figure_three_amplitude_grows(capsys):
    _, out, _ = run(capsys, "figure", "--figure", "3", "--t-min", "10", "--t-max", "2000", "--points", "400")
    rows = [line.split(",") for line in out.strip().splitlines()[1:]]
    vals = [abs(float(r[1])) for r in rows]
    first, last = max(vals[:100]), max(vals[-100:])
    assert last > first


def test_order_type(capsys):
    code, out, _ = run(capsys, "order-type", "--alpha", "0.5", "--beta", "1", "--gamma", "4", "--n-max", "2000")
    rec = json.loads(out)
    assert code == 0 and abs(float(rec["rho_est"]) / 0.5 - 1) < 0.05
    assert rec["table"]


def test_selftest_suite_filter(capsys):
    code, out, _ = run(capsys, "selftest", "--suite", "extension")
    rec = json.loads(out)
    assert code == 0 and rec["passed"] and rec["suites"][0]["name"] == "extension"
    assert run(capsys, "selftest", "--suite", "bogus")[0] == 2


def test_laplace_verify_single(capsys):
    code, out, _ = run(capsys, "laplace-verify", "--alpha", "0.6", "--beta", "0.8", "--gamma", "3", "--kind", "wright", "--s", "3")
    rec = json.loads(out)
    assert code == 0 and float(rec["checks"][0]["scaled_residual"]) < 1e-6


def test_conjecture_window():
    assert conjecture_window(Fraction("0.9"), Fraction("1.5"))
    assert not conjecture_window(Fraction(2), Fraction(1))
    assert conjecture_window(Fraction("1.5"), Fraction("0.5"))


def test_conjecture_probe(capsys):
    assert run(capsys, "conjecture-probe", "--beta", "2", "--gamma", "1")[0] == 2
    code, out, _ = run(
        capsys, "conjecture-probe", "--alpha", "0.7", "--beta", "0.9", "--gamma", "1.5", "--t-min", "100", "--t-max", "1000", "--points", "3"
    )
    lines = out.strip().splitlines()
    assert code == 0 and lines[0] == "t,F_neg_t,ratio" and len(lines) == 4
