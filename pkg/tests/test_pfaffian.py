"""
INSTRUCTION HEADER
What this file does: Tests the Pfaffian against closed forms, perfect-matching expansion, a Schur-form reference and Pf^2 = det.
Where it runs: pytest.
How to run: `pytest tests/test_pfaffian.py`
"""

from __future__ import annotations

import numpy as np
import pytest
from scipy.linalg import schur

from fourtangle.numkernel import pfaffian


def _random_antisymmetric(rng: np.random.Generator, n: int) -> np.ndarray:
    a = rng.normal(size=(n, n))
    return a - a.T


def pfaffian_schur(matrix: np.ndarray) -> float:
    blocks, o = schur(matrix)
    return float(np.prod(np.diag(blocks, 1)[::2]) * np.linalg.det(o))


def pfaffian_matchings(matrix: np.ndarray) -> float:
    n = matrix.shape[0]
    if n == 0:
        return 1.0
    total = 0.0
    rest = list(range(1, n))
    for pos, j in enumerate(rest):
        others = rest[:pos] + rest[pos + 1:]
        sub = matrix[np.ix_(others, others)]
        total += (-1) ** pos * matrix[0, j] * pfaffian_matchings(sub)
    return total


def test_pfaffian_empty():
    assert pfaffian(np.array([[]], dtype=float)) == 1.0


def test_pfaffian_2_by_2():
    assert pfaffian(np.array([[0.0, 1.7], [-1.7, 0.0]])) == pytest.approx(1.7)


def test_pfaffian_4_by_4_closed_form(rng):
    a = _random_antisymmetric(rng, 4)
    expected = a[0, 1] * a[2, 3] - a[0, 2] * a[1, 3] + a[0, 3] * a[1, 2]
    assert pfaffian(a) == pytest.approx(expected, rel=1e-12, abs=1e-12)


def test_pfaffian_block_diagonal():
    a = np.zeros((6, 6))
    for k, value in enumerate([2.0, -3.0, 0.5]):
        a[2 * k, 2 * k + 1] = value
        a[2 * k + 1, 2 * k] = -value
    assert pfaffian(a) == pytest.approx(-3.0)


def test_pfaffian_zero_matrix():
    assert pfaffian(np.zeros((4, 4))) == 0.0


@pytest.mark.parametrize("n", [2, 4, 6, 8])
def test_pfaffian_matches_matching_expansion(rng, n):
    a = _random_antisymmetric(rng, n)
    assert pfaffian(a) == pytest.approx(pfaffian_matchings(a), rel=1e-10)


@pytest.mark.parametrize("n", [4, 10, 16])
def test_pfaffian_matches_schur_reference(rng, n):
    a = _random_antisymmetric(rng, n)
    assert pfaffian(a) == pytest.approx(pfaffian_schur(a), rel=1e-8)


def test_pfaffian_congruence(rng):
    a = _random_antisymmetric(rng, 8)
    b = rng.normal(size=(8, 8))
    assert pfaffian(b @ a @ b.T) == pytest.approx(np.linalg.det(b) * pfaffian(a), rel=1e-9)


def test_pfaffian_squared_is_determinant(rng):
    for _ in range(100):
        a = _random_antisymmetric(rng, 2 * int(rng.integers(1, 7)))
        assert pfaffian(a) ** 2 == pytest.approx(np.linalg.det(a), rel=1e-8)


@pytest.mark.slow
def test_pfaffian_squared_is_determinant_suite(rng):
    for _ in range(1000):
        a = _random_antisymmetric(rng, 2 * int(rng.integers(1, 7)))
        assert pfaffian(a) ** 2 == pytest.approx(np.linalg.det(a), rel=1e-8)


def test_pfaffian_accepts_real_complex_dtype():
    a = np.array([[0.0, 2.0], [-2.0, 0.0]], dtype=complex)
    assert pfaffian(a) == pytest.approx(2.0)


@pytest.mark.parametrize(
    "matrix, message",
    [
        (np.zeros((3, 3)), "odd size"),
        (np.zeros((2, 3)), "square"),
        (np.array([[0.0, 1.0], [1.0, 0.0]]), "not antisymmetric"),
        (np.array([[0.0, 1j], [-1j, 0.0]]), "imaginary"),
    ],
)
def test_pfaffian_rejects_bad_input(matrix, message):
    with pytest.raises(ValueError, match=message):
        pfaffian(matrix)
