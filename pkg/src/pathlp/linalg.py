"""Dense kernels for the normal equations ``A diag(x/s) A^T k = r``.

Pivot tests are made on the diagonally equilibrated matrix
``E M E`` with ``E = diag(M)^-1/2``; that rescaling does not change the
solution but stops one heavy row (the budget row of the big-M problem, say)
from masking how well-determined the others are.
"""
from __future__ import annotations

import numpy as np
from scipy.linalg import cho_solve, solve_triangular

from .errors import ContractViolation, IllConditioned, NonPositiveScaling

EPS_CHOL = 1e-13


def _check_scaling(A, x, s):
    A = np.atleast_2d(np.asarray(A, dtype=float))
    x = np.asarray(x, dtype=float)
    s = np.asarray(s, dtype=float)
    if x.shape != (A.shape[1],) or s.shape != x.shape:
        raise ContractViolation("x and s must have one entry per column of A")
    if not (np.all(x > 0) and np.all(s > 0)):
        raise NonPositiveScaling("need x > 0 and s > 0")
    return A, x, s


def normal_matrix(A, x, s) -> np.ndarray:
    """Return ``A D A^T`` with ``D = diag(x / s)``.

    Raises :class:`NonPositiveScaling` unless ``x`` and ``s`` are strictly
    positive.
    """
    A, x, s = _check_scaling(A, x, s)
    M = (A * (x / s)) @ A.T
    return 0.5 * (M + M.T)


def cholesky(M, eps: float = EPS_CHOL):
    """Factor ``E M E = L L^T`` with ``E`` the diagonal equilibration.

    Returns ``(L, e)`` where ``e`` holds the diagonal of ``E``.  A pivot of
    the equilibrated matrix at or below ``eps`` (its diagonal is all ones)
    raises :class:`IllConditioned`.
    """
    M = np.atleast_2d(np.asarray(M, dtype=float))
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ContractViolation("matrix must be square")
    if not np.all(np.isfinite(M)):
        raise IllConditioned("matrix has non-finite entries")
    scale = float(np.abs(M).max(initial=0.0))
    if np.abs(M - M.T).max(initial=0.0) > 1e-12 * scale:
        raise ContractViolation("matrix is not symmetric")
    diag = np.diag(M)
    if not np.all(diag > 0):
        raise IllConditioned("matrix has a nonpositive diagonal entry")
    e = 1.0 / np.sqrt(diag)
    try:
        L = np.linalg.cholesky(M * np.outer(e, e))
    except np.linalg.LinAlgError as exc:
        raise IllConditioned("matrix is not numerically positive definite") from exc
    pivots = np.diag(L) ** 2
    worst = int(np.argmin(pivots))
    if not pivots[worst] > eps:
        raise IllConditioned(f"relative pivot {worst} = {pivots[worst]:.3e} is below {eps:g}")
    return L, e


def spd_solve(M, rhs, eps: float = EPS_CHOL) -> np.ndarray:
    """Solve ``M k = rhs`` for symmetric positive definite ``M``."""
    L, e = cholesky(M, eps)
    rhs = np.asarray(rhs, dtype=float)
    if rhs.shape[0] != L.shape[0]:
        raise ContractViolation("rhs length must match the matrix")
    return e * cho_solve((L, True), e * rhs)


def full_row_rank_check(A, eps: float = EPS_CHOL) -> bool:
    A = np.atleast_2d(np.asarray(A, dtype=float))
    if A.shape[0] == 0:
        return True
    try:
        cholesky(A @ A.T, eps)
    except (IllConditioned, ContractViolation):
        return False
    return True


def normal_solver_qr(A, x, s, eps: float = EPS_CHOL):
    """Solver for ``A D A^T k = r`` built from a QR factorization of ``D^1/2 A^T``.

    ``R^T R = A D A^T`` up to the row equilibration, so ``R`` is the Cholesky
    factor, computed without squaring the condition number.  Used when the
    normal matrix itself fails the pivot test (primal-degenerate problems
    close to the optimum).  Only a numerically singular ``R`` raises
    :class:`IllConditioned`.
    """
    A, x, s = _check_scaling(A, x, s)
    B = (A * np.sqrt(x / s)).T
    norms = np.linalg.norm(B, axis=0)
    if not np.all(norms > 0):
        raise IllConditioned("a constraint row vanishes under the scaling")
    R = np.linalg.qr(B / norms, mode="r")
    r_diag = np.abs(np.diag(R))
    if not r_diag.min() > eps:
        raise IllConditioned(f"triangular factor pivot {r_diag.min():.3e} is below {eps:g}")

    def solve(rhs):
        z = solve_triangular(R, np.asarray(rhs, dtype=float) / norms, trans="T")
        return solve_triangular(R, z) / norms

    return solve


def normal_solver(A, x, s, eps: float = EPS_CHOL):
    """Solver for ``A D A^T k = r``: Cholesky of the normal matrix when it
    passes the pivot test, otherwise the QR route of :func:`normal_solver_qr`."""
    try:
        L, e = cholesky(normal_matrix(A, x, s), eps)
    except IllConditioned:
        return normal_solver_qr(A, x, s, eps)
    return lambda r: e * cho_solve((L, True), e * np.asarray(r, dtype=float))
