"""The two echelon backends must be interchangeable."""

import random
from fractions import Fraction

import pytest

from picalb._echelon import echelon_leads as pure_leads
from picalb.kernels import BACKEND, clear_denominators, integer_rank, rational_rank

try:
    from picalb._echelon_c import echelon_leads as compiled_leads
except ImportError:  # pure-Python install
    compiled_leads = None

needs_compiled = pytest.mark.skipif(compiled_leads is None, reason="compiled kernel not built")


def random_matrix(rng, nrows, ncols, density=0.6, bound=9):
    return [
        [rng.randint(-bound, bound) if rng.random() < density else 0 for _ in range(ncols)]
        for _ in range(nrows)
    ]


def test_backend_is_reported():
    assert BACKEND in ("pure", "compiled")


def test_known_ranks_pure():
    assert pure_leads([[1, 0], [0, 1]], 2) == [0, 1]
    assert pure_leads([[2, 4], [1, 2], [0, 0]], 2) == [0]
    assert pure_leads([], 3) == []
    assert pure_leads([[0, 0, 0]], 3) == []


def test_duplicate_rows_collapse():
    rows = [[3, 6, 9], [1, 2, 3], [-2, -4, -6]]
    assert len(pure_leads(rows, 3)) == 1


@needs_compiled
def test_backends_agree_on_random_matrices():
    rng = random.Random(1105)
    for _ in range(60):
        nrows = rng.randint(0, 10)
        ncols = rng.randint(1, 10)
        rows = random_matrix(rng, nrows, ncols)
        assert pure_leads(rows, ncols) == compiled_leads(rows, ncols)


@needs_compiled
def test_backends_agree_on_big_entries():
    rng = random.Random(7)
    rows = random_matrix(rng, 12, 12, density=1.0, bound=10**12)
    assert pure_leads(rows, 12) == compiled_leads(rows, 12)


def test_kernel_does_not_mutate_input():
    rows = [[2, 4], [1, 3]]
    pure_leads(rows, 2)
    assert rows == [[2, 4], [1, 3]]


def test_clear_denominators():
    row = [Fraction(1, 2), Fraction(2, 3), Fraction(0)]
    assert clear_denominators(row) == [3, 4, 0]


def test_rational_rank_matches_integer_rank_after_scaling():
    rng = random.Random(42)
    for _ in range(25):
        nrows, ncols = rng.randint(1, 6), rng.randint(1, 6)
        rows = [
            [Fraction(rng.randint(-6, 6), rng.randint(1, 6)) for _ in range(ncols)]
            for _ in range(nrows)
        ]
        scaled = [[c * 720 for c in row] for row in rows]
        int_rows = [[int(c) for c in row] for row in scaled]
        assert rational_rank(rows, ncols) == integer_rank(int_rows, ncols)


def test_hilbert_matrix_full_rank():
    n = 7
    rows = [[Fraction(1, i + j + 1) for j in range(n)] for i in range(n)]
    assert rational_rank(rows, n) == n
