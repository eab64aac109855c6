import json
import subprocess
import sys

import pytest

from ramsum.cli import CommandRequest, execute, main, parse_args


def run_main(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out.rstrip("\n"), captured.err


def test_parse_args_examples():
    req = parse_args(["T", "--moduli", "6,6", "--a", "0"])
    assert req == CommandRequest(
        subcommand="T", moduli=(6, 6), a=0, strategy="closed", format="plain"
    )
    req = parse_args(["E", "--moduli", "8", "--polys", "x^2-1"])
    assert req.subcommand == "E" and req.moduli == (8,) and req.polys == ("x^2-1",)


def test_parse_args_arity_error():
    with pytest.raises(Exception, match="poly count 1 != moduli count 2"):
        parse_args(["E", "--moduli", "6,6", "--polys", "x"])


def test_scalar_values(capsys):
    assert run_main(capsys, "R", "--moduli", "3,3", "--shifts", "1,1")[:2] == (0, "5")
    assert run_main(capsys, "T", "--moduli", "2,3", "--a", "7")[:2] == (0, "0")
    assert run_main(capsys, "c", "--moduli", "4", "--a", "2")[:2] == (0, "-2")
    assert run_main(capsys, "E", "--moduli", "8", "--polys", "x^2-1")[:2] == (0, "2")
    assert run_main(capsys, "E", "--moduli", "6,6", "--shifts", "0,1")[:2] == (0, "1")


def test_roots_output(capsys):
    code, out, _ = run_main(capsys, "roots", "--moduli", "12", "--polys", "x^2-1")
    assert code == 0
    assert out == "N=4 eta=4 (mod 12)"
    code, out, _ = run_main(
        capsys, "roots", "--moduli", "12", "--polys", "x^2-1", "--format", "json"
    )
    payload = json.loads(out)
    assert payload["N"] == 4 and payload["eta"] == 4 and payload["modulus"] == 12


def test_strategy_differential(capsys):
    cases = [
        ["E", "--moduli", "12,18", "--polys", "x^2-1;2x-1"],
        ["R", "--moduli", "9,15", "--polys", "x-1;x-1"],
        ["E", "--moduli", "10,12", "--shifts", "3,-2"],
        ["R", "--moduli", "8,6", "--shifts", "1,2"],
    ]
    for argv in cases:
        _, fast, _ = run_main(capsys, *argv)
        _, direct, _ = run_main(capsys, *argv, "--strategy", "direct")
        assert fast == direct, argv
    for strategy in ("spectral", "direct"):
        _, closed, _ = run_main(capsys, "T", "--moduli", "6,6", "--a", "2")
        _, other, _ = run_main(capsys, "T", "--moduli", "6,6", "--a", "2", "--strategy", strategy)
        assert closed == other


def test_json_round_trip(capsys):
    _, out, _ = run_main(
        capsys, "R", "--moduli", "3,3", "--shifts", "1,1", "--format", "json"
    )
    payload = json.loads(out)
    assert payload["value"] == 5
    shifts = payload["inputs"]["shifts"]
    moduli = [payload["inputs"]["m_1"], payload["inputs"]["m_2"]]
    argv = ["R", "--moduli", ",".join(map(str, moduli)), "--shifts", shifts, "--format", "json"]
    _, again, _ = run_main(capsys, *argv)
    assert again == out


def test_csv_output(capsys):
    _, out, _ = run_main(
        capsys, "E", "--moduli", "8", "--polys", "x^2-1", "--format", "csv"
    )
    assert out.splitlines() == ["m_1,polys,value", "8,x^2-1,2"]


def test_range_table(capsys):
    code, out, _ = run_main(capsys, "c", "--range", "6", "--a", "0", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,a,value"
    assert lines[1] == "1,0,1"
    assert lines[6] == "6,0,2"
    code, out, _ = run_main(
        capsys, "T", "--range", "3", "--r", "2", "--a", "0", "--format", "csv"
    )
    rows = out.splitlines()
    assert rows[0] == "m_1,m_2,a,value"
    assert len(rows) == 1 + 9


def test_usage_errors_exit_1(capsys):
    for argv in (
        ["E", "--moduli", "6,6", "--polys", "x"],
        ["E", "--moduli", "6"],
        ["E", "--moduli", "abc", "--polys", "x"],
        ["E", "--moduli", "6", "--polys", "x^", ],
        ["c", "--moduli", "4,5", "--a", "0"],
        ["c", "--a", "0"],
        ["nonsense"],
        ["E", "--moduli", "6", "--polys", "x", "--a", "3"],
        ["R", "--moduli", "6", "--polys", "x", "--shifts", "1"],
    ):
        code, _, err = run_main(capsys, *argv)
        assert code == 1, argv
        assert err, argv


def test_poly_syntax_error_reports_position(capsys):
    code, _, err = run_main(capsys, "E", "--moduli", "6", "--polys", "x^")
    assert code == 1
    assert "position 2" in err


def test_domain_error_exit_2(capsys):
    code, _, err = run_main(capsys, "c", "--moduli", "0", "--a", "1")
    assert code == 2
    assert "domain error" in err


def test_scale_error_exit_3(capsys):
    code, _, err = run_main(
        capsys, "E", "--moduli", "1000003,999937", "--polys", "x;x", "--strategy", "direct"
    )
    assert code == 3
    assert "scale error" in err


def test_json_error_object(capsys):
    code = main(["c", "--moduli", "0", "--a", "1", "--format", "json"])
    out = capsys.readouterr().out
    assert code == 2
    payload = json.loads(out)
    assert payload["error"]["type"] == "domain"


def test_verify_suite_passes(capsys):
    code, out, _ = run_main(capsys, "verify", "--suite", "orthogonality", "--max", "12")
    assert code == 0
    lines = out.splitlines()
    assert all(line.startswith("PASS") for line in lines[:-1])
    assert lines[-1].endswith("checks passed")


def test_verify_unknown_suite(capsys):
    code, _, err = run_main(capsys, "verify", "--suite", "bogus")
    assert code == 2
    assert "unknown suite" in err


def test_verify_output_is_byte_deterministic():
    argv = [sys.executable, "-m", "ramsum", "verify", "--suite", "multiplicativity", "--max", "40"]
    first = subprocess.run(argv, capture_output=True)
    second = subprocess.run(argv, capture_output=True)
    assert first.returncode == 0 and second.returncode == 0
    assert first.stdout == second.stdout


def test_thread_cap_respected(monkeypatch, capsys):
    monkeypatch.setenv("RAMSUM_THREADS", "1")
    code, out, _ = run_main(capsys, "verify", "--suite", "dirichlet", "--max", "60")
    assert code == 0 and "3/3" in out
    monkeypatch.setenv("RAMSUM_THREADS", "2")
    code, out2, _ = run_main(capsys, "verify", "--suite", "dirichlet", "--max", "60")
    assert code == 0 and out2 == out
    monkeypatch.setenv("RAMSUM_THREADS", "zebra")
    code, _, err = run_main(capsys, "verify", "--suite", "dirichlet", "--max", "60")
    assert code == 2


def test_execute_returns_status_and_text():
    code, out = execute(parse_args(["alpha", "--r", "2", "--prime-bound", "2"]))
    assert code == 0 and out == "0.6875"


def test_asymptotic_formats(capsys):
    code, out, _ = run_main(capsys, "asymptotic", "--r", "2", "--x", "50", "--format", "csv")
    assert code == 0
    header, row = out.splitlines()
    assert header == "r,x,prime_bound,empirical,predicted,ratio"
    assert row.startswith("2,50,100000,")
    code, out, _ = run_main(capsys, "asymptotic", "--r", "2", "--x", "50", "--format", "json")
    payload = json.loads(out)
    assert set(payload) == {"subcommand", "r", "x", "prime_bound", "empirical", "predicted", "ratio"}
    num, den = payload["empirical"].split("/")
    from fractions import Fraction

    from ramsum import g_r_partial_sum

    assert Fraction(int(num), int(den)) == g_r_partial_sum(2, 50)
