"""
INSTRUCTION HEADER
What this file does: Tests the command-line front end: subcommands, flag/plan precedence, output streams and exit codes.
Where it runs: pytest.
How to run: `pytest tests/test_cli.py`
"""

from __future__ import annotations

import pytest

from fourtangle.numkernel import NumericalError
from fourtangle.sweep import cli, read_csv, read_plan


def test_factorizing(capsys):
    assert cli.cli_main(["factorizing", "--gamma", "0.6"]) == 0
    assert capsys.readouterr().out.strip() == "1.25"


def test_factorizing_ising_is_infinite(capsys):
    assert cli.cli_main(["factorizing", "--gamma", "1"]) == 0
    assert capsys.readouterr().out.strip() == "inf"


def test_measure_mixture(capsys):
    assert cli.cli_main(["measure", "c4", "--family", "ghz-w", "--p", "0.3"]) == 0
    assert float(capsys.readouterr().out) == pytest.approx(0.3, abs=1e-10)


def test_measure_rank3_product(capsys):
    assert cli.cli_main(["measure", "c2-product", "--family", "w-bell-bell", "--p", "0", "--q", "0"]) == 0
    assert float(capsys.readouterr().out) == pytest.approx(1.0, abs=1e-10)


def test_measure_chain_points(capsys):
    assert cli.cli_main(["measure", "tau1", "--lambda", "0", "--n", "20"]) == 0
    assert float(capsys.readouterr().out) == pytest.approx(0.0, abs=1e-12)
    assert cli.cli_main(["measure", "c2", "--lambda", "0.8", "--n", "10", "--backend", "ed"]) == 0
    ed = float(capsys.readouterr().out)
    assert cli.cli_main(["measure", "c2", "--lambda", "0.8", "--n", "10"]) == 0
    ff = float(capsys.readouterr().out)
    assert ed > 0.0
    assert ff == pytest.approx(ed, abs=1e-8)


def test_validate(capsys):
    code = cli.cli_main(["--quiet", "validate", "--gamma", "1", "--lambda", "0.5", "--n", "10", "--quad", "1,1,1"])
    assert code == 0
    out = capsys.readouterr().out.split()
    assert out[0] == "max_deviation"
    assert float(out[1]) <= 1e-8


def test_scan_to_stdout(capsys):
    code = cli.cli_main(
        ["--quiet", "scan", "--mode", "mixture-rank2", "--family", "ghz-w", "--p-step", "0.5"]
    )
    assert code == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].startswith("# plan: ")
    assert lines[1] == "p,c4,c2_12_c2_34,c2_13_c2_24,c2_14_c2_23"
    assert len(lines) == 5


def test_scan_plan_file_and_flag_precedence(tmp_path):
    plan = tmp_path / "plan.txt"
    plan.write_text("mode = mixture-rank2\nfamily = bell-w\np_step = 0.5\n", encoding="utf-8")
    out = tmp_path / "scan.csv"
    code = cli.cli_main(["--quiet", "scan", "--plan", str(plan), "--p-step", "0.25", "--output", str(out)])
    assert code == 0
    assert len(read_csv(out)) == 5
    echoed = read_plan(out)
    assert echoed["family"] == "bell-w"
    assert echoed["p_step"] == 0.25


def test_scan_is_deterministic(tmp_path):
    outputs = []
    for name in ("a.csv", "b.csv"):
        path = tmp_path / name
        args = ["--quiet", "scan", "--mode", "mixture-rank3", "--family", "ghz-bell-bell",
                "--p-step", "0.5", "--q-step", "0.5", "--output", str(path)]
        assert cli.cli_main(args) == 0
        outputs.append(path.read_bytes())
    assert outputs[0] == outputs[1]


def test_residual_subcommand(tmp_path):
    out = tmp_path / "res.csv"
    code = cli.cli_main(
        ["--quiet", "residual", "--lambda", "0.3", "--n", "40", "--oracle-sites", "8",
         "--max-distance", "8", "--output", str(out)]
    )
    assert code == 0
    frame = read_csv(out)
    assert list(frame["N"]) == [40]
    assert frame["residual"].iloc[0] >= -1e-9


@pytest.mark.parametrize(
    "argv",
    [
        ["scan", "--bogus"],
        ["factorizing"],
        ["measure", "c4"],
        ["measure", "tau1", "--family", "ghz-w", "--p", "0.2"],
        ["scan", "--mode", "mixture-rank2", "--family", "w-bell-bell"],
        ["scan", "--plan", "does/not/exist.txt"],
        [],
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    assert cli.cli_main(argv) == 2
    assert capsys.readouterr().err


def test_numerical_failure_exits_1(monkeypatch, capsys):
    def fail(plan, progress=False):
        raise NumericalError("oracle gate failed: test")

    monkeypatch.setattr(cli, "run_sweep", fail)
    assert cli.cli_main(["--quiet", "scan", "--lambda", "0.5"]) == 1
    assert "ERROR: oracle gate failed" in capsys.readouterr().err


def test_help_exits_0(capsys):
    assert cli.cli_main(["scan", "--help"]) == 0
    text = capsys.readouterr().out
    for flag in ("--lambda-step", "--use-cache", "--oracle-sites", "--quad", "--plan"):
        assert flag in text
