"""Big-M start: an artificial LP with a known, well-centred interior point.

With a bound ``W`` on the coordinates of some optimal solution the variables
are rescaled by ``mW / (m + 2)`` so that ``e.x' <= m + 2``.  A slack
``x_{m+1}`` closes that budget row and an artificial column ``x_{m+2}``
carrying ``rho = d - A e`` makes ``x = e`` feasible::

    min  c.x + M x_{m+2}
    s.t. A x + rho x_{m+2}     = d
         e.x + x_{m+1} + x_{m+2} = m + 2
         x >= 0

Column order in the augmented matrix is ``[x_1..x_m | x_{m+1} | x_{m+2}]``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from .bounds import big_m
from .central import Iterate, SolveReport, Status, centrality
from .errors import BadMu, ContractViolation
from .linalg import full_row_rank_check
from .model import StandardProblem, VarRef


@dataclass
class ArtificialProblem:
    inner: StandardProblem
    d: np.ndarray
    M: float
    rho: np.ndarray
    scale: float
    base_m: int
    W: float

    @property
    def costs(self) -> np.ndarray:
        """Objective entries that enter the start-point centrality (all but ``M``)."""
        return self.inner.c[: self.base_m + 1]


def build_artificial(sp: StandardProblem, W: float, M: Optional[float] = None) -> ArtificialProblem:
    if not W > 0:
        raise ContractViolation("W must be positive")
    n, m = sp.A.shape
    scale = m * W / (m + 2)
    if M is None:
        M = big_m(m, W, sp.c)
    elif not M > 0:
        raise ContractViolation("M must be positive")
    d = sp.b / scale
    rho = d - sp.A.sum(axis=1)

    A = np.zeros((n + 1, m + 2))
    A[:n, :m] = sp.A
    A[:n, m + 1] = rho
    A[n, :] = 1.0
    b = np.append(d, m + 2.0)
    c = np.concatenate([sp.c, [0.0, M]])
    var_map = [VarRef("orig", j) for j in range(m)] + [VarRef("slack", n), VarRef("artificial", n)]
    inner = StandardProblem(A, b, c, var_map, num_orig=m)
    if not full_row_rank_check(A):
        raise ContractViolation("augmented constraint matrix lost full row rank")
    return ArtificialProblem(inner, d, float(M), rho, scale, m, float(W))


def default_mu0(ap: ArtificialProblem) -> float:
    """``2 sqrt(sum c_i^2 + M^2)``: the smallest ``mu`` giving centrality 1/2.

    With integral costs the value is rounded up to an integer so that
    ``s = c + mu0`` is exact and the start is dual feasible to the last bit.
    """
    norm = math.sqrt(float(ap.costs @ ap.costs) + ap.M**2)
    if norm == 0:
        return 1.0
    mu0 = 2.0 * norm
    c = ap.inner.c
    if mu0 < 2**52 and np.all(c == np.round(c)):
        mu0 = float(math.ceil(mu0))
    return mu0


def initial_iterate(ap: ArtificialProblem, mu0: Optional[float] = None) -> Iterate:
    """Interior start ``x = e``, ``y = (0, .., 0, -mu0)``, ``s = c + mu0 e``.

    Raises :class:`BadMu` if some slack would not be positive or the
    resulting centrality could exceed 1/2.
    """
    if mu0 is None:
        mu0 = default_mu0(ap)
    costs = ap.costs
    if not mu0 > max(0.0, float(np.max(-costs, initial=0.0)), -ap.M):
        raise BadMu(f"mu0 = {mu0} leaves a nonpositive dual slack")
    need = 4.0 * (float(costs @ costs) + ap.M**2)
    if mu0 * mu0 < need * (1.0 - 1e-12):
        raise BadMu(f"mu0^2 = {mu0 * mu0:.6g} is below 4 (sum c^2 + M^2) = {need:.6g}")

    n1, m2 = ap.inner.A.shape
    x = np.ones(m2)
    y = np.zeros(n1)
    y[-1] = -mu0
    s = ap.inner.c + mu0
    return Iterate(x, y, s, float(mu0), centrality(x, s, mu0))


def artificial_zero_tol(ap: ArtificialProblem, mu_final: float) -> float:
    return max(1e-9, 10.0 * ap.inner.m * mu_final)


def extract_original(ap: ArtificialProblem, rep: SolveReport, zero_tol: float) -> Tuple[Status, np.ndarray]:
    """Undo the scaling, or report that the artificial column stayed positive."""
    if rep.status is not Status.OPTIMAL:
        raise ContractViolation(f"expected an Optimal report, got {rep.status.value}")
    m = ap.base_m
    x = np.asarray(rep.x, dtype=float)
    if x[m + 1] > zero_tol:
        return Status.BIG_M_INSUFFICIENT_OR_INFEASIBLE, x[:m] * ap.scale
    return Status.OPTIMAL, x[:m] * ap.scale
