import itertools
import math
from fractions import Fraction

import numpy as np
import pytest

from lpgen import exact_det
from pathlp.bounds import (big_m, exp_checked, is_integral, min_nonzero_coordinate,
                           vertex_bound)
from pathlp.errors import BoundOverflow


@pytest.mark.parametrize("n, U, W", [(2, 3, 18), (3, 2, 48), (1, 1, 1)])
def test_vertex_bound_examples(n, U, W):
    assert exp_checked(vertex_bound(n, U)) == pytest.approx(W, rel=1e-12)
    assert exp_checked(min_nonzero_coordinate(n, U)) == pytest.approx(1 / W, rel=1e-12)


def test_vertex_bound_below_nu_power():
    assert exp_checked(vertex_bound(3, 2)) < 6**3
    for n in range(1, 30):
        for U in (1, 1.5, 2, 5, 100):
            assert vertex_bound(n, U) <= n * (math.log(n) + math.log(U)) + 1e-12
            if n > 1:
                assert vertex_bound(n, U) < n * (math.log(n) + math.log(U))


def test_overflow_is_signalled():
    with pytest.raises(BoundOverflow):
        exp_checked(vertex_bound(200, 50))
    with pytest.raises(BoundOverflow):
        exp_checked(min_nonzero_coordinate(200, 50))
    with pytest.raises(BoundOverflow):
        big_m(10, 1e308, [5])


def test_big_m_examples():
    assert big_m(4, 18, [2, -1]) == 288 > 4 * 18 * 2
    assert big_m(3, 7, [0, 0]) == 2 * 3 * 7
    assert big_m(2, 1, [1]) == 4


def test_integrality_detection():
    assert is_integral([[1, -2], [3, 4]], [5])
    assert not is_integral([[1, 0.5]])
    assert not is_integral([[2e6]])


def test_determinant_bound_exhaustive_small():
    for U in (1, 2):
        for entries in itertools.product(range(-U, U + 1), repeat=4):
            rows = [entries[:2], entries[2:]]
            assert abs(exact_det(rows)) <= math.factorial(2) * U**2


def _exact_solve(rows, rhs):
    det = exact_det(rows)
    if det == 0:
        return 0, None
    out = []
    for i in range(len(rows)):
        swapped = [list(r) for r in rows]
        for r, v in zip(swapped, rhs):
            r[i] = v
        out.append(Fraction(exact_det(swapped), det))
    return det, out


def test_cramer_matches_elimination():
    rng = np.random.default_rng(5)
    checked = 0
    while checked < 200:
        n = int(rng.integers(1, 5))
        A = rng.integers(-4, 5, size=(n, n))
        b = rng.integers(-4, 5, size=n)
        det, x_exact = _exact_solve(A.tolist(), b.tolist())
        if det == 0:
            continue
        x = np.linalg.solve(A.astype(float), b.astype(float))
        np.testing.assert_allclose(x, [float(v) for v in x_exact], rtol=1e-10, atol=1e-12)
        # integral data: nonzero coordinates are bounded by the vertex bound both ways
        U = max(1, int(np.abs(A).max()), int(np.abs(b).max()))
        W = math.factorial(n) * U**n
        for v in x_exact:
            assert abs(v) <= W
            assert v == 0 or abs(v) >= Fraction(1, W)
        checked += 1
