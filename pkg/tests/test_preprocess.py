import numpy as np
import pytest

from lpgen import exact_rank, rank_product
from pathlp.errors import InfeasibleRow
from pathlp.linalg import full_row_rank_check
from pathlp.model import GeneralProblem, to_standard
from pathlp.preprocess import reduce_problem, row_reduce


def test_drops_multiple_row():
    red = row_reduce([[1, 1], [2, 2]], [1, 2])
    np.testing.assert_array_equal(red.A, [[1, 1]])
    np.testing.assert_array_equal(red.b, [1])
    assert red.dropped == [1]


def test_inconsistent_multiple_row():
    with pytest.raises(InfeasibleRow) as info:
        row_reduce([[1, 1], [2, 2]], [1, 3])
    assert info.value.row == 1


def test_zero_diagonal_forces_column_interchange():
    red = row_reduce([[0, 1], [1, 0]], [1, 2])
    np.testing.assert_array_equal(red.col_perm, [1, 0])
    np.testing.assert_array_equal(red.A, [[1, 0], [0, 1]])
    np.testing.assert_array_equal(red.b, [1, 2])
    assert red.dropped == []


def test_all_zero_system():
    red = row_reduce([[0, 0, 0]], [0])
    assert red.A.shape == (0, 3)
    assert red.dropped == [0]


def _same_solutions(A, b, red):
    # a particular solution of the reduced system solves the original one
    z, *_ = np.linalg.lstsq(red.A, red.b, rcond=None)
    x = np.empty_like(z)
    x[red.col_perm] = z
    np.testing.assert_allclose(A @ x, b, atol=1e-8 * (1 + np.abs(b).max()))
    # the original rows lie in the row space of the reduced rows
    Ap = A[:, red.col_perm]
    coef, *_ = np.linalg.lstsq(red.A.T, Ap.T, rcond=None)
    np.testing.assert_allclose(red.A.T @ coef, Ap.T, atol=1e-8 * (1 + np.abs(A).max()))


def test_random_known_rank():
    rng = np.random.default_rng(7)
    for _ in range(150):
        n, m = int(rng.integers(1, 6)), int(rng.integers(2, 8))
        r = int(rng.integers(1, min(n, m) + 1))
        A = rank_product(rng, n, m, r).astype(float)
        true_rank = exact_rank(A.astype(int).tolist())
        b = A @ rng.integers(0, 4, size=m)
        red = row_reduce(A, b)
        assert red.A.shape[0] == true_rank
        assert len(red.dropped) == n - true_rank
        assert full_row_rank_check(red.A)
        if true_rank:
            _same_solutions(A, b, red)


def test_reduce_problem_keeps_costs_aligned():
    p = GeneralProblem.build("min", [3, 5], [([0, 1], "=", 1), ([1, 0], "=", 2), ([1, 1], "=", 3)])
    sp = reduce_problem(to_standard(p))
    assert sp.n == 2
    for j in range(sp.m):
        orig = sp.var_map[sp.col_perm[j]].index
        assert sp.c[j] == [3, 5][orig]
