"""End-to-end solve of a :class:`~pathlp.model.GeneralProblem`.

to_standard -> row_reduce -> W -> big M -> artificial problem -> start point
-> path following -> extraction -> original variables.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Callable, List, Optional

import numpy as np

from . import bounds
from .artificial import (ArtificialProblem, artificial_zero_tol, build_artificial,
                         extract_original, initial_iterate)
from .central import Iterate, NewtonStep, SolveReport, Status, solve_path
from .errors import ContractViolation, InfeasibleRow
from .model import GeneralProblem, Sense, StandardProblem, recover_solution, to_standard
from .preprocess import reduce_problem

log = logging.getLogger(__name__)

DEFAULT_MU_FINAL = 1e-9
UNBOUNDED_FRACTION = 0.99


class MissingBound(ContractViolation):
    """Non-integral data and no explicit ``W``."""


@dataclass
class Solution:
    status: Status
    x: Optional[np.ndarray] = None
    objective: float = math.nan
    report: Optional[SolveReport] = None
    standard: Optional[StandardProblem] = None
    artificial: Optional[ArtificialProblem] = None
    W: float = math.nan
    path_mu_final: float = math.nan
    warnings: List[str] = field(default_factory=list)
    message: str = ""


def choose_w(p: GeneralProblem, sp_raw: StandardProblem, rank: int) -> float:
    """Vertex bound ``n! U^n`` for integral data; :class:`MissingBound` otherwise."""
    if not bounds.is_integral(sp_raw.A, sp_raw.b):
        raise MissingBound("constraint data is not integral; supply W (--w)")
    U = bounds.data_bound(sp_raw.A, sp_raw.b)
    n = max(rank, 1)
    bounds.exp_checked(bounds.vertex_bound(n, U))
    return float(math.factorial(n) * round(U) ** n)


@dataclass
class Prepared:
    """Everything needed to run the path-following loop on a problem."""

    standard: StandardProblem
    artificial: ArtificialProblem
    start: Iterate
    W: float
    path_mu_final: float


def prepare(
    p: GeneralProblem,
    mu_final: float = DEFAULT_MU_FINAL,
    W: Optional[float] = None,
    M: Optional[float] = None,
) -> Prepared:
    """Standard form, rank reduction, bounds and big-M start for ``p``.

    Raises :class:`~pathlp.errors.InfeasibleRow` for inconsistent equality
    rows and :class:`MissingBound` for non-integral data without ``W``.
    """
    if not mu_final > 0:
        raise ContractViolation("mu_final must be positive")
    sp_raw = to_standard(p)
    sp = reduce_problem(sp_raw)
    if W is None:
        W = choose_w(p, sp_raw, sp.n)
    elif not W > 0:
        raise ContractViolation("W must be positive")
    ap = build_artificial(sp, W, M)
    start = initial_iterate(ap)
    return Prepared(sp, ap, start, W, mu_final / ap.scale)


def solve(
    p: GeneralProblem,
    mu_final: float = DEFAULT_MU_FINAL,
    W: Optional[float] = None,
    M: Optional[float] = None,
    max_iters: Optional[int] = None,
    on_step: Optional[Callable[[Iterate, NewtonStep, Iterate], None]] = None,
) -> Solution:
    """Solve ``p`` with the big-M interior-point scheme.

    ``mu_final`` is expressed in units of the original objective: the path
    is followed down to ``mu_final / scale`` in the rescaled artificial
    problem, so the final duality gap in original units is at most
    ``(5/3) (m + 2) mu_final``.
    """
    try:
        prep = prepare(p, mu_final, W, M)
    except InfeasibleRow as exc:
        return Solution(Status.INFEASIBLE, message=str(exc))
    sp, ap = prep.standard, prep.artificial
    log.debug("n=%d m=%d W=%g M=%g mu0=%g mu_final=%g",
              sp.n, sp.m, prep.W, ap.M, prep.start.mu, prep.path_mu_final)

    rep = solve_path(ap.inner, prep.start, prep.path_mu_final, max_iters=max_iters, on_step=on_step)
    return finish(p, prep, rep)


def finish(p: GeneralProblem, prep: Prepared, rep: SolveReport) -> Solution:
    """Turn the artificial problem's report into a solution of ``p``."""
    sp, ap, W = prep.standard, prep.artificial, prep.W
    out = Solution(rep.status, report=rep, standard=sp, artificial=ap, W=W,
                   path_mu_final=prep.path_mu_final, message=rep.message)
    if rep.status is not Status.OPTIMAL:
        return out

    status, x_std = extract_original(ap, rep, artificial_zero_tol(ap, prep.path_mu_final))
    out.status = status
    if status is not Status.OPTIMAL:
        out.message = (f"artificial variable stays at {rep.x[ap.base_m + 1]:.3e}: "
                       "the problem is infeasible or M is too small")
        return out
    if np.max(x_std, initial=0.0) > UNBOUNDED_FRACTION * W:
        out.warnings.append(
            f"a coordinate reached {np.max(x_std):.6g} >= {UNBOUNDED_FRACTION} W: "
            "the problem may be unbounded or W too small"
        )
    out.x = recover_solution(sp, x_std)
    obj = float(sp.c @ x_std)
    out.objective = -obj if p.sense is Sense.MAXIMIZE else obj
    return out
