"""Ground truth for small LPs by trying every basis.

Works directly on ``A x = b``: dependent rows are removed with a rank test
of its own (not :mod:`pathlp.preprocess`), then every ``r``-subset of columns
with a nonsingular square block is solved.  Feasible basic solutions are
vertices; the best one wins, ties going to the lexicographically first
column subset.  A basis also yields one edge direction per nonbasic column;
a nonnegative direction with negative cost proves unboundedness.
"""
from __future__ import annotations

import itertools
import math
from typing import NamedTuple

import numpy as np

from .errors import TooLarge

MAX_COLUMNS = 24
MAX_SUBSETS = 500_000
FEAS_TOL = 1e-9


class OracleResult(NamedTuple):
    status: str  # "Optimal", "Infeasible" or "Unbounded"
    obj: float
    x: np.ndarray


def _independent_rows(A, b):
    rows = []
    for i in range(A.shape[0]):
        if np.linalg.matrix_rank(A[rows + [i]]) == len(rows) + 1:
            rows.append(i)
    return rows


def enumerate_vertices(sp) -> OracleResult:
    """Brute-force solve of ``min c.x, A x = b, x >= 0`` (``sp`` needs ``A, b, c``)."""
    A = np.atleast_2d(np.asarray(sp.A, dtype=float))
    b = np.asarray(sp.b, dtype=float)
    c = np.asarray(sp.c, dtype=float)
    n, m = A.shape
    if m > MAX_COLUMNS:
        raise TooLarge(f"{m} columns exceeds the enumeration limit of {MAX_COLUMNS}")

    rows = _independent_rows(A, b)
    r = len(rows)
    nan_x = np.full(m, np.nan)
    if r == 0:
        if np.abs(b).max(initial=0.0) > FEAS_TOL:
            return OracleResult("Infeasible", math.nan, nan_x)
        if np.any(c < 0):
            return OracleResult("Unbounded", -math.inf, nan_x)
        return OracleResult("Optimal", 0.0, np.zeros(m))
    if math.comb(m, r) > MAX_SUBSETS:
        raise TooLarge(f"C({m}, {r}) bases exceeds {MAX_SUBSETS}")

    # the dropped rows must be implied by the kept ones, otherwise Ax = b has no solution
    Ar, br = A[rows], b[rows]
    coef, *_ = np.linalg.lstsq(Ar.T, A.T, rcond=None)
    if np.abs(coef.T @ br - b).max(initial=0.0) > 1e-8 * (1 + np.abs(b).max()):
        return OracleResult("Infeasible", math.nan, nan_x)

    best_obj, best_x = math.inf, None
    rays = []
    for basis in itertools.combinations(range(m), r):
        B = Ar[:, basis]
        if abs(np.linalg.det(B)) < 1e-9:
            continue
        xb = np.linalg.solve(B, br)
        feasible = bool(np.all(xb >= -FEAS_TOL))
        if feasible:
            x = np.zeros(m)
            x[list(basis)] = np.maximum(xb, 0.0)
            obj = float(c @ x)
            if obj < best_obj - 1e-12 * (1 + abs(obj)):
                best_obj, best_x = obj, x
        # edge directions d: d_j = 1, d_B = -B^-1 A_j
        inv_cols = np.linalg.solve(B, Ar)
        for j in range(m):
            if j in basis:
                continue
            d = np.zeros(m)
            d[j] = 1.0
            d[list(basis)] = -inv_cols[:, j]
            if np.all(d >= -FEAS_TOL) and c @ d < -1e-9:
                rays.append(d)

    if best_x is None:
        return OracleResult("Infeasible", math.nan, nan_x)
    if rays:
        return OracleResult("Unbounded", -math.inf, best_x)
    return OracleResult("Optimal", best_obj, best_x)
