"""
INSTRUCTION HEADER
What this file does: Tests plan-file parsing, value casting, precedence and the plan echo line.
Where it runs: pytest.
How to run: `pytest tests/test_config.py`
"""

from __future__ import annotations

import math

import pytest

from fourtangle.config import (
    CSV_COLUMNS,
    MODES,
    PLAN_KEYS,
    cast_value,
    echo_line,
    load_plan_file,
    merge_plan,
    parse_echo_line,
    parse_plan_text,
    parse_quads,
    plan_echo,
)


def test_every_mode_has_columns():
    assert set(CSV_COLUMNS) == set(MODES)
    assert PLAN_KEYS["mode"].default in MODES


def test_parse_quads():
    assert parse_quads("1,1,1; 1,2,1") == ((1, 1, 1), (1, 2, 1))
    assert parse_quads(((2, 1, 2),)) == ((2, 1, 2),)
    with pytest.raises(ValueError, match="three distances"):
        parse_quads("1,2")
    with pytest.raises(ValueError, match="positive"):
        parse_quads("0,1,1")
    with pytest.raises(ValueError, match="At least one"):
        parse_quads(" ; ")


@pytest.mark.parametrize(
    "key, raw, expected",
    [
        ("gamma", "0.5", 0.5),
        ("n_sites", "400", 400),
        ("n_sites", 1e3, 1000),
        ("use_cache", "off", False),
        ("oracle_check", "Yes", True),
        ("family", " ghz-w ", "ghz-w"),
    ],
)
def test_cast_value(key, raw, expected):
    assert cast_value(key, raw) == expected


def test_cast_value_errors():
    with pytest.raises(ValueError, match="as int"):
        cast_value("n_sites", "12.5")
    with pytest.raises(ValueError, match="as bool"):
        cast_value("use_cache", "maybe")
    with pytest.raises(ValueError, match="Unknown plan key"):
        cast_value("lambda", "1")


def test_parse_plan_text_reports_line_numbers():
    text = "# comment\nmode = chain-c4\n\ngamma = 0.5  # trailing\nquads = 1,1,1; 1,2,1\n"
    values = parse_plan_text(text)
    assert values == {"mode": "chain-c4", "gamma": 0.5, "quads": ((1, 1, 1), (1, 2, 1))}
    with pytest.raises(ValueError, match=r"plan.txt:2: unknown key 'lamda_step'"):
        parse_plan_text("mode = validate\nlamda_step = 0.1\n", source="plan.txt")
    with pytest.raises(ValueError, match=r":1: expected 'key = value'"):
        parse_plan_text("gamma 0.5")


def test_merge_precedence(tmp_path):
    path = tmp_path / "plan.txt"
    path.write_text("gamma = 0.5\nn_sites = 200\n", encoding="utf-8")
    merged = merge_plan(load_plan_file(path), {"n_sites": 300, "gamma": None})
    assert merged["gamma"] == 0.5
    assert merged["n_sites"] == 300
    assert merged["lambda_step"] == PLAN_KEYS["lambda_step"].default
    assert list(merged) == list(PLAN_KEYS)


def test_missing_plan_file(tmp_path):
    with pytest.raises(FileNotFoundError, match="Plan file not found"):
        load_plan_file(tmp_path / "nope.txt")


def test_plan_echo_is_deterministic_and_skips_output():
    plan = merge_plan(None, {"output": "a.csv", "workers": 4})
    other = merge_plan(None, {"output": "b.csv", "workers": 1})
    assert plan_echo(plan) == plan_echo(other)
    assert "output" not in plan_echo(plan)
    echoed = parse_echo_line(echo_line(plan))
    assert echoed["quads"] == [[1, 1, 1]]
    assert math.isclose(echoed["phi"], math.pi / 2)
    with pytest.raises(ValueError, match="Not a plan echo"):
        parse_echo_line("p,c4")
