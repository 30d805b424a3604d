"""
INSTRUCTION HEADER
What this file does: Tests sweep plans, the sweep runner and its gates, CSV output and the figure registry.
Where it runs: pytest.
How to run: `pytest tests/test_sweep.py`
"""

from __future__ import annotations

import numpy as np
import pytest

from fourtangle.config.schema import CSV_COLUMNS
from fourtangle.numkernel import NumericalError
from fourtangle.sweep import (
    FIGURES,
    Grid,
    SweepPlan,
    SweepRow,
    emit_csv,
    figure_plan,
    read_csv,
    read_plan,
    render_csv,
    run_sweep,
)
from fourtangle.sweep.runner import build_tasks, convergence_indices, gate_lambdas


def _chain_plan(**overrides) -> SweepPlan:
    values = {
        "mode": "chain-c4",
        "gamma": 1.0,
        "lambda_start": 0.1,
        "lambda_stop": 0.3,
        "lambda_step": 0.1,
        "n_sites": 60,
        "oracle_sites": 8,
    }
    values.update(overrides)
    return SweepPlan.from_dict(values)


# ---------------------------------------------------------------------------
# Plans and rows
# ---------------------------------------------------------------------------

def test_grid_is_inclusive():
    assert list(Grid(0.0, 1.0, 0.1).values()) == pytest.approx([0.1 * k for k in range(11)])
    assert Grid(0.0, 0.3, 0.1).values()[-1] == 0.3
    assert len(Grid(0.5, 0.5, 0.01).values()) == 1


def test_grid_errors():
    with pytest.raises(ValueError, match="step must be > 0"):
        Grid(0.0, 1.0, 0.0)
    with pytest.raises(ValueError, match="below start"):
        Grid(1.0, 0.0, 0.1)


@pytest.mark.parametrize(
    "values, message",
    [
        ({"mode": "mixture-rank2", "family": "w-bell-bell"}, "needs rank 2"),
        ({"mode": "mixture-rank3", "family": "ghz-w"}, "needs rank 3"),
        ({"mode": "mixture-rank2", "p_stop": 1.5}, r"\[0, 1\]"),
        ({"mode": "chain-c4", "backend": "ed", "n_sites": 20}, "N <= 14"),
        ({"mode": "chain-c4", "n_sites": 4, "quads": "2,2,2"}, "does not fit"),
        ({"mode": "validate", "oracle_sites": 16}, "N <= 14"),
        ({"mode": "chain-c4", "gamma": 1.2}, "gamma"),
        ({"mode": "chain-c4", "workers": 0}, "workers"),
        ({"mode": "sideways"}, "Unknown mode"),
    ],
)
def test_plan_validation(values, message):
    with pytest.raises(ValueError, match=message):
        SweepPlan.from_dict(values)


def test_validate_mode_uses_oracle_chain():
    plan = SweepPlan.from_dict({"mode": "validate", "oracle_sites": 8})
    assert plan.chain_sites == 8
    assert plan.is_chain


def test_sweep_row_checks():
    with pytest.raises(NumericalError, match="outside"):
        SweepRow("mixture-rank2", (0.5, 1.2, 0.0, 0.0, 0.0))
    with pytest.raises(ValueError, match="need 5 values"):
        SweepRow("mixture-rank2", (0.5, 0.2))
    row = SweepRow("mixture-rank2", (0.5, 0.5, 0.0, 0.0, 0.0))
    assert row["c4"] == 0.5


def test_all_figures_build_valid_plans():
    for name in FIGURES:
        plan = figure_plan(name)
        assert len(build_tasks(plan)) > 0
    assert figure_plan("c4-1n1-ising").quads[-1].distances == (1, 9, 1)
    with pytest.raises(ValueError, match="Unknown figure"):
        figure_plan("fig99")


# ---------------------------------------------------------------------------
# Runner
# ---------------------------------------------------------------------------

def test_mixture_rank2_sweep():
    rows = run_sweep(SweepPlan.from_dict({"mode": "mixture-rank2", "family": "ghz-w", "p_step": 0.25}))
    assert [r["p"] for r in rows] == [0.0, 0.25, 0.5, 0.75, 1.0]
    for r in rows:
        assert r["c4"] == pytest.approx(r["p"], abs=1e-8)


def test_mixture_rank3_sweep_is_p_major():
    plan = SweepPlan.from_dict(
        {"mode": "mixture-rank3", "family": "w-bell-bell", "p_step": 0.5, "q_step": 0.5}
    )
    rows = run_sweep(plan)
    assert [(r["p"], r["q"]) for r in rows] == [(p, q) for p in (0.0, 0.5, 1.0) for q in (0.0, 0.5, 1.0)]
    for r in rows:
        assert r["c4"] == pytest.approx((1.0 - r["p"]) * abs(2.0 * r["q"] - 1.0), abs=1e-8)


def test_workers_do_not_change_rows():
    base = {"mode": "mixture-rank2", "family": "bell-w", "p_step": 0.1}
    serial = run_sweep(SweepPlan.from_dict(base))
    parallel = run_sweep(SweepPlan.from_dict({**base, "workers": 2}))
    assert [r.values for r in serial] == [r.values for r in parallel]


def test_chain_c4_sweep_rows():
    plan = _chain_plan(quads="1,1,1; 1,2,1")
    rows = run_sweep(plan)
    assert len(rows) == 6
    assert [(r["lambda"], r["n2"]) for r in rows[:2]] == [(0.1, 1), (0.1, 2)]
    for r in rows:
        assert r["N"] == 60
        assert r["bound"] == pytest.approx(r["c2_first"] * r["c2_last"])
        assert r["bound_gap"] == pytest.approx(r["bound"] - r["c4"])


def test_cache_on_and_off_agree():
    cached = run_sweep(_chain_plan(quads="1,1,1; 2,1,2", convergence_check=False, oracle_check=False))
    uncached = run_sweep(
        _chain_plan(quads="1,1,1; 2,1,2", convergence_check=False, oracle_check=False, use_cache=False)
    )
    assert np.allclose([r.values for r in cached], [r.values for r in uncached], atol=1e-12, rtol=0.0)


def test_residual_sweep():
    plan = _chain_plan(mode="chain-residual", lambda_start=0.2, lambda_stop=0.4, max_distance=10)
    rows = run_sweep(plan)
    assert len(rows) == 3
    for r in rows:
        assert r["residual"] >= -1e-9
        assert r["residual"] == pytest.approx(r["tau1"] - r["sum_c2sq"])
        assert 1 <= r["d_max"] <= 10


def test_validate_sweep():
    plan = SweepPlan.from_dict(
        {"mode": "validate", "lambda_start": 0.5, "lambda_stop": 0.5, "oracle_sites": 8, "quads": "1,1,1"}
    )
    rows = run_sweep(plan)
    assert len(rows) == 1
    assert rows[0]["max_deviation"] <= 1e-8


def test_convergence_gate_rejects_short_chain():
    plan = _chain_plan(lambda_start=0.9, lambda_stop=0.9, n_sites=10, oracle_check=False)
    with pytest.raises(NumericalError, match="convergence gate"):
        run_sweep(plan)


def test_convergence_samples_avoid_critical_point():
    lambdas = [float(x) for x in Grid(0.0, 2.0, 0.01).values()]
    assert convergence_indices(lambdas, 3) == [0, 98, 200]
    assert convergence_indices([1.0], 3) == [0]


def test_gate_lambdas():
    assert gate_lambdas(_chain_plan()) == [0.1, 0.2, 0.3]
    assert gate_lambdas(_chain_plan(lambda_start=0.5, lambda_stop=0.5)) == [0.5]


# ---------------------------------------------------------------------------
# CSV
# ---------------------------------------------------------------------------

def test_empty_rows_give_header_only():
    assert render_csv([], "mixture-rank2") == ",".join(CSV_COLUMNS["mixture-rank2"]) + "\n"


def test_csv_round_trip(tmp_path):
    plan = SweepPlan.from_dict({"mode": "mixture-rank2", "family": "bell-w", "p_step": 0.1})
    rows = run_sweep(plan)
    path = tmp_path / "out" / "bell_w.csv"
    emit_csv(rows, path, plan.mode, "# plan: {}")
    frame = read_csv(path)
    assert list(frame.columns) == CSV_COLUMNS["mixture-rank2"]
    assert [tuple(v) for v in frame.itertuples(index=False)] == [r.values for r in rows]
    assert read_plan(path) == {}
    assert b"\r\n" not in path.read_bytes()


def test_csv_is_byte_identical_on_rerun():
    plan = SweepPlan.from_dict({"mode": "mixture-rank2", "family": "ghz-bell", "p_step": 0.05})
    first = render_csv(run_sweep(plan), plan.mode, "x")
    second = render_csv(run_sweep(plan), plan.mode, "x")
    assert first == second
    assert first.startswith("# plan: x\n")


def test_emit_csv_to_stdout(capsys):
    emit_csv([SweepRow("mixture-rank2", (0.5, 0.5, 0.0, 0.0, 0.0))], "-", "mixture-rank2")
    out = capsys.readouterr().out.splitlines()
    assert out == ["p,c4,c2_12_c2_34,c2_13_c2_24,c2_14_c2_23", "0.5,0.5,0,0,0"]
