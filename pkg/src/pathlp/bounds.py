"""Size bounds for integer LP data, kept in log space.

For integer ``A`` and ``b`` with entries bounded by ``U`` every basic solution
of an ``n``-row system is a ratio of determinants, so its coordinates lie in
``[1 / (n! U^n), n! U^n]`` (or are zero).
"""
from __future__ import annotations

import math

import numpy as np

from .errors import BoundOverflow, ContractViolation

_LOG_MAX = math.log(np.finfo(float).max)
_LOG_TINY = math.log(np.finfo(float).tiny)


def exp_checked(log_value: float) -> float:
    """``exp(log_value)``, raising :class:`BoundOverflow` outside the double range."""
    if not math.isfinite(log_value) or not _LOG_TINY < log_value < _LOG_MAX:
        raise BoundOverflow(f"exp({log_value:.6g}) does not fit in a double; pass an explicit W")
    return math.exp(log_value)


def vertex_bound(n: int, U: float) -> float:
    """``ln(n! * U**n)``."""
    if n < 1:
        raise ContractViolation("n must be at least 1")
    if not U >= 1:
        raise ContractViolation("U must be at least 1")
    return math.lgamma(n + 1) + n * math.log(U)


def min_nonzero_coordinate(n: int, U: float) -> float:
    """``ln(1 / (n! * U**n))``: smallest nonzero vertex coordinate, log space."""
    return -vertex_bound(n, U)


def big_m(m: int, W: float, c) -> float:
    """Artificial cost ``2 m W max(1, max|c|)``, twice the sufficient threshold."""
    if not W > 0:
        raise ContractViolation("W must be positive")
    cmax = max(1.0, float(np.max(np.abs(c), initial=0.0)))
    value = 2.0 * m * W * cmax
    if not math.isfinite(value):
        raise BoundOverflow("big-M overflows; pass an explicit value")
    return value


def data_bound(A, b) -> float:
    """``U = max(1, max |A_ij|, max |b_i|)``."""
    return max(1.0, float(np.abs(A).max(initial=0.0)), float(np.abs(b).max(initial=0.0)))


def is_integral(*arrays, tol: float = 1e-12, limit: float = 1e6) -> bool:
    for arr in arrays:
        arr = np.asarray(arr, dtype=float)
        if arr.size == 0:
            continue
        if np.abs(arr).max() > limit or np.abs(arr - np.round(arr)).max() > tol:
            return False
    return True
