import numpy as np
import pytest

from eigenkit.cli import (
    ENV_BENCH_SEED,
    EXIT_INPUT,
    EXIT_NOCONV,
    EXIT_NUMERIC,
    EXIT_OK,
    EXIT_USAGE,
    main,
)
from eigenkit.matio import write_matrix


@pytest.fixture
def symmetric_file(tmp_path):
    path = tmp_path / "sym.mtx"
    write_matrix(np.array([[2.0, 1.0], [1.0, 2.0]]), path)
    return str(path)


@pytest.fixture
def rotation_file(tmp_path):
    path = tmp_path / "rot.csv"
    write_matrix(np.array([[0.0, -1.0], [1.0, 0.0]]), path)
    return str(path)


def test_no_arguments_is_usage_error():
    assert main([]) == EXIT_USAGE


def test_unknown_subcommand_is_usage_error():
    assert main(["frobnicate"]) == EXIT_USAGE


def test_factor_runs(symmetric_file, capsys):
    assert main(["factor", symmetric_file]) == EXIT_OK
    out = capsys.readouterr().out
    assert "||QR - A||_F" in out
    assert "householder" in out


def test_factor_method_choices(symmetric_file):
    for method in ("householder", "givens", "cgs", "mgs"):
        assert main(["factor", symmetric_file, "--method", method]) == EXIT_OK
    assert main(["factor", symmetric_file, "--method", "qr"]) == EXIT_USAGE


def test_factor_rank_deficient_cgs_is_numeric_error(tmp_path, capsys):
    path = tmp_path / "sing.csv"
    write_matrix(np.ones((3, 3)), path)
    assert main(["factor", str(path), "--method", "cgs"]) == EXIT_NUMERIC
    assert "pivot" in capsys.readouterr().err


def test_eig_summary(symmetric_file, capsys):
    assert main(["eig", symmetric_file]) == EXIT_OK
    out = capsys.readouterr().out
    assert "eigenvalues:" in out
    assert "converged: yes" in out
    assert "solver: enhanced" in out


def test_eig_missing_file_is_input_error(capsys):
    assert main(["eig", "/no/such/file.mtx"]) == EXIT_INPUT
    assert "file" in capsys.readouterr().err


def test_eig_malformed_file_is_input_error(tmp_path, capsys):
    path = tmp_path / "bad.mtx"
    path.write_text("not a header\n")
    assert main(["eig", str(path)]) == EXIT_INPUT
    assert "line 1" in capsys.readouterr().err


def test_eig_nonsquare_is_input_error(tmp_path):
    path = tmp_path / "rect.csv"
    path.write_text("1,2,3\n4,5,6\n")
    assert main(["eig", str(path)]) == EXIT_INPUT


def test_eig_strict_nonconvergence(rotation_file):
    args = ["eig", rotation_file, "--no-deflate", "--shift", "none", "--kmax", "50"]
    assert main(args) == EXIT_OK  # partial results are not an error
    assert main(args + ["--strict"]) == EXIT_NOCONV


def test_eig_flag_plumbing(symmetric_file, capsys):
    assert (
        main(
            [
                "eig", symmetric_file,
                "--shift", "rayleigh",
                "--no-deflate", "--no-balance",
                "--eps", "1e-8", "--dtol", "1e-9",
                "--kmax", "17", "--mode", "trailing",
            ]
        )
        == EXIT_OK
    )
    assert "solver: rayleigh" in capsys.readouterr().out


def test_eig_bad_tolerances_are_usage_errors(symmetric_file):
    assert main(["eig", symmetric_file, "--eps", "-1"]) == EXIT_USAGE
    assert main(["eig", symmetric_file, "--kmax", "0"]) == EXIT_USAGE
    # dtol must not exceed eps
    assert main(["eig", symmetric_file, "--eps", "1e-12", "--dtol", "1e-8"]) == EXIT_USAGE


def test_eig_trace_output(symmetric_file, tmp_path):
    trace = tmp_path / "trace.csv"
    assert main(["eig", symmetric_file, "--trace", str(trace)]) == EXIT_OK
    lines = trace.read_text().splitlines()
    assert lines[0].startswith("matrix_index,solver,iteration")
    assert len(lines) >= 2
    assert ",enhanced," in lines[1]


def test_oracle_command(symmetric_file, capsys):
    assert main(["oracle", symmetric_file]) == EXIT_OK
    out = capsys.readouterr().out
    assert "oracle eigenvalues" in out
    assert "max match distance" in out


def test_oracle_dimension_cap_is_input_error(tmp_path, capsys):
    path = tmp_path / "big.mtx"
    write_matrix(np.eye(13), path)
    assert main(["oracle", str(path)]) == EXIT_INPUT
    assert "12" in capsys.readouterr().err


def test_bench_writes_outputs(tmp_path, capsys):
    out = tmp_path / "report.csv"
    svg = tmp_path / "plot.svg"
    rc = main(
        [
            "bench", "--dim", "3", "--count", "2", "--seed", "11",
            "--solvers", "enhanced,plain", "--out", str(out), "--svg", str(svg),
        ]
    )
    assert rc == EXIT_OK
    assert out.exists() and svg.exists()
    stdout = capsys.readouterr().out
    assert "enhanced" in stdout and "plain" in stdout


def test_bench_requires_solvers(tmp_path):
    rc = main(["bench", "--dim", "3", "--count", "1", "--out", str(tmp_path / "x.csv")])
    assert rc == EXIT_USAGE


def test_bench_rejects_unknown_solver(tmp_path):
    rc = main(
        [
            "bench", "--dim", "3", "--count", "1",
            "--solvers", "quantum", "--out", str(tmp_path / "x.csv"),
        ]
    )
    assert rc == EXIT_USAGE


def test_bench_rejects_bad_dimension(tmp_path):
    rc = main(
        [
            "bench", "--dim", "1", "--count", "1",
            "--solvers", "enhanced", "--out", str(tmp_path / "x.csv"),
        ]
    )
    assert rc == EXIT_USAGE


def test_bench_seed_env_fallback(tmp_path, monkeypatch, capsys):
    out = tmp_path / "r.csv"
    args = ["bench", "--dim", "2", "--count", "1", "--solvers", "enhanced", "--out", str(out)]

    monkeypatch.delenv(ENV_BENCH_SEED, raising=False)
    assert main(args) == EXIT_OK
    assert "seed=0" in capsys.readouterr().out

    monkeypatch.setenv(ENV_BENCH_SEED, "99")
    assert main(args) == EXIT_OK
    assert "seed=99" in capsys.readouterr().out

    # Explicit flag beats the environment.
    assert main(args + ["--seed", "5"]) == EXIT_OK
    assert "seed=5" in capsys.readouterr().out

    monkeypatch.setenv(ENV_BENCH_SEED, "not-a-number")
    assert main(args) == EXIT_USAGE


def test_bench_deterministic_csv(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    args = ["bench", "--dim", "3", "--count", "2", "--seed", "4", "--solvers", "enhanced,rayleigh"]
    assert main(args + ["--out", str(a)]) == EXIT_OK
    assert main(args + ["--out", str(b)]) == EXIT_OK
    assert a.read_bytes() == b.read_bytes()


def test_bench_dist_choices(tmp_path):
    out = tmp_path / "c.csv"
    base = ["bench", "--dim", "2", "--count", "1", "--solvers", "enhanced", "--out", str(out)]
    assert main(base + ["--dist", "complex"]) == EXIT_OK
    assert main(base + ["--dist", "cauchy"]) == EXIT_USAGE


def test_help_exits_zero():
    assert main(["--help"]) == 0
    assert main(["eig", "--help"]) == 0
