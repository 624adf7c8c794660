"""Full-step primal-dual path following.

Each iteration takes one Newton step towards the point with ``x_i s_i = mu``
for the current ``mu`` and then shrinks ``mu`` by the factor ``1 - delta`` with
``delta = 1 / (4 sqrt(m))``.  Starting from an iterate whose centrality
measure is at most 2/3 this keeps ``x, s > 0`` and the centrality at most 2/3
without any line search, so the iteration count is fixed in advance by
:func:`iteration_bound`.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Callable, List, Optional

import numpy as np

from .errors import ContractViolation, IllConditioned, InvariantViolation, NonPositiveMu
from .linalg import normal_solver
from .model import StandardProblem

SIGMA_MAX = 2.0 / 3.0
SIGMA_SLACK = 1e-9


class Status(str, enum.Enum):
    OPTIMAL = "Optimal"
    INFEASIBLE = "Infeasible"
    BIG_M_INSUFFICIENT_OR_INFEASIBLE = "BigMInsufficientOrInfeasible"
    ILL_CONDITIONED = "IllConditioned"
    ITERATION_LIMIT = "IterationLimit"


@dataclass(frozen=True)
class Iterate:
    x: np.ndarray
    y: np.ndarray
    s: np.ndarray
    mu: float
    sigma: float

    @classmethod
    def at(cls, x, y, s, mu: float) -> "Iterate":
        x = np.asarray(x, dtype=float)
        s = np.asarray(s, dtype=float)
        return cls(x, np.asarray(y, dtype=float), s, float(mu), centrality(x, s, mu))


@dataclass(frozen=True)
class NewtonStep:
    h: np.ndarray
    k: np.ndarray
    f: np.ndarray


@dataclass(frozen=True)
class TraceRecord:
    iter: int
    mu: float
    sigma: float
    primal_obj: float
    dual_obj: float
    gap: float
    primal_res: float
    dual_res: float

    FIELDS = ("iter", "mu", "sigma", "primal_obj", "dual_obj", "gap", "primal_res", "dual_res")


@dataclass
class SolveReport:
    status: Status
    x: np.ndarray
    y: np.ndarray
    s: np.ndarray
    primal_obj: float
    dual_obj: float
    gap: float
    iterations: int
    mu: float = math.nan
    sigma: float = math.nan
    gap_tol: float = math.inf
    trace: List[TraceRecord] = field(default_factory=list)
    message: str = ""


def centrality(x, s, mu: float) -> float:
    """``sqrt(sum((x_i s_i / mu - 1)**2))``."""
    if not mu > 0:
        raise NonPositiveMu(f"mu must be positive, got {mu}")
    r = np.asarray(x, dtype=float) * np.asarray(s, dtype=float) / mu - 1.0
    return float(np.sqrt(np.dot(r, r)))


def shrink_factor(m: int) -> float:
    """``delta = 1 / (4 sqrt(m))``."""
    return 1.0 / (4.0 * math.sqrt(m))


def iteration_bound(m: int, mu0: float, mu_final: float) -> int:
    """A-priori iteration cap ``ceil(4 sqrt(m) ln(mu0 / mu_final)) + 2``."""
    if not mu0 > mu_final > 0:
        raise ContractViolation("need mu0 > mu_final > 0")
    value = 4.0 * math.sqrt(m) * math.log(mu0 / mu_final)
    nearest = round(value)
    # absorb rounding in the logarithm so exact integers do not round up
    if nearest >= 1 and abs(value - nearest) <= 1e-9 * value:
        return nearest + 2
    return math.ceil(value) + 2


def residual_tolerance(sp: StandardProblem) -> float:
    return 1e-8 * (1.0 + float(np.abs(sp.b).max(initial=0.0)) + float(np.abs(sp.c).max(initial=0.0)))


# residual corrections of k; they also pull A x back onto b
REFINE_STEPS = 2


def newton_step(sp: StandardProblem, it: Iterate, mu_target: float) -> NewtonStep:
    """Solve ``A h = 0``, ``A^T k + f = 0``, ``h_i s_i + f_i x_i = mu - x_i s_i``.

    ``k`` comes from the normal equations
    ``(A S^-1 X A^T) k = b - mu A S^-1 e``; then ``f = -A^T k`` and
    ``h = -X S^-1 f + mu S^-1 e - x``.
    """
    if not mu_target > 0:
        raise NonPositiveMu(f"mu_target must be positive, got {mu_target}")
    A, x, s = sp.A, it.x, it.s
    inv_s = 1.0 / s
    d = x * inv_s
    target = mu_target * inv_s - x
    solve = normal_solver(A, x, s)
    k = solve(sp.b - mu_target * (A @ inv_s))
    drift = sp.b - A @ x
    for _ in range(REFINE_STEPS):
        k = k + solve(drift - A @ (d * (A.T @ k) + target))
    f = -(A.T @ k)
    h = -d * f + target
    return NewtonStep(h, k, f)


@dataclass(frozen=True)
class StepCheck:
    """Residuals and centrality values around one Newton step.

    ``sigma_prime`` is measured at ``(x + h, s + f)`` with the old ``mu``;
    ``sigma_double`` after the shrink to ``(1 - delta) mu``.
    """

    eq1: float
    eq2: float
    eq3: float
    hf: float
    hf_scale: float
    obs1: float
    sigma: float
    sigma_prime: float
    sigma_prime_bound: float
    sigma_double: float
    sigma_double_formula: float
    x_min: float
    s_min: float


def check_step(sp: StandardProblem, it: Iterate, step: NewtonStep, delta: Optional[float] = None) -> StepCheck:
    x, s, mu = it.x, it.s, it.mu
    h, k, f = step.h, step.k, step.f
    if delta is None:
        delta = shrink_factor(sp.m)
    x1, s1 = x + h, s + f
    hf_terms = h * f

    sigma = it.sigma
    sigma_prime = centrality(x1, s1, mu)
    bound = 0.5 * sigma**2 / (1.0 - sigma) if sigma < 1 else math.inf
    cross = 2.0 * delta * hf_terms.sum() / mu
    formula = math.sqrt(max(sigma_prime**2 + sp.m * delta**2 + cross, 0.0)) / (1.0 - delta)
    return StepCheck(
        eq1=float(np.abs(sp.A @ h).max(initial=0.0)),
        eq2=float(np.abs(sp.A.T @ k + f).max(initial=0.0)),
        eq3=float(np.abs(h * s + f * x - (mu - x * s)).max(initial=0.0)),
        hf=abs(float(h @ f)),
        hf_scale=1.0 + float(np.linalg.norm(h) * np.linalg.norm(f)),
        obs1=float(np.abs(x1 * s1 - (mu + hf_terms)).max(initial=0.0)),
        sigma=sigma,
        sigma_prime=sigma_prime,
        sigma_prime_bound=bound,
        sigma_double=centrality(x1, s1, mu * (1.0 - delta)),
        sigma_double_formula=formula,
        x_min=float(x1.min()),
        s_min=float(s1.min()),
    )


def advance(
    sp: StandardProblem,
    it: Iterate,
    on_step: Optional[Callable[[Iterate, NewtonStep, Iterate], None]] = None,
) -> Iterate:
    """One Newton step at the current ``mu`` followed by ``mu <- (1 - delta) mu``."""
    step = newton_step(sp, it, it.mu)
    x1, y1, s1 = it.x + step.h, it.y + step.k, it.s + step.f
    if not (np.all(x1 > 0) and np.all(s1 > 0)):
        raise InvariantViolation(
            f"positivity lost: min x = {x1.min():.3e}, min s = {s1.min():.3e} (sigma = {it.sigma:.4f})"
        )
    mu1 = (1.0 - shrink_factor(sp.m)) * it.mu
    nxt = Iterate.at(x1, y1, s1, mu1)
    if nxt.sigma > SIGMA_MAX + SIGMA_SLACK:
        raise InvariantViolation(f"centrality {nxt.sigma:.6f} exceeds 2/3 at mu = {mu1:.3e}")
    if on_step is not None:
        on_step(it, step, nxt)
    return nxt


def trace_record(sp: StandardProblem, it: Iterate, index: int) -> TraceRecord:
    return TraceRecord(
        iter=index,
        mu=it.mu,
        sigma=it.sigma,
        primal_obj=float(sp.c @ it.x),
        dual_obj=float(sp.b @ it.y),
        gap=float(it.x @ it.s),
        primal_res=float(np.abs(sp.A @ it.x - sp.b).max(initial=0.0)),
        dual_res=float(np.abs(sp.A.T @ it.y + it.s - sp.c).max(initial=0.0)),
    )


def _report(sp, it, status, iterations, trace, gap_tol, message=""):
    rec = trace[-1] if trace else trace_record(sp, it, iterations)
    return SolveReport(
        status=status,
        x=it.x,
        y=it.y,
        s=it.s,
        primal_obj=rec.primal_obj,
        dual_obj=rec.dual_obj,
        gap=rec.gap,
        iterations=iterations,
        mu=it.mu,
        sigma=it.sigma,
        gap_tol=gap_tol,
        trace=trace,
        message=message,
    )


def solve_path(
    sp: StandardProblem,
    start: Iterate,
    mu_final: float,
    max_iters: Optional[int] = None,
    on_step: Optional[Callable[[Iterate, NewtonStep, Iterate], None]] = None,
) -> SolveReport:
    """Follow the central path from ``start`` until ``mu <= mu_final``.

    The returned trace holds the start point plus one record per iteration.
    A singular normal matrix ends the run with status ``IllConditioned``;
    loss of positivity or centrality raises :class:`InvariantViolation`.
    """
    if not mu_final > 0:
        raise NonPositiveMu("mu_final must be positive")
    if not (np.all(start.x > 0) and np.all(start.s > 0)):
        raise ContractViolation("start point must be strictly positive")
    if start.sigma > SIGMA_MAX + SIGMA_SLACK:
        raise ContractViolation(f"start centrality {start.sigma:.4f} exceeds 2/3")

    gap_tol = (1.0 + SIGMA_MAX) * sp.m * mu_final
    trace = [trace_record(sp, start, 0)]
    if mu_final >= start.mu:
        if trace[0].gap > gap_tol:
            raise ContractViolation("mu_final >= start.mu but the start gap exceeds the tolerance")
        return _report(sp, start, Status.OPTIMAL, 0, trace, gap_tol)
    if max_iters is None:
        max_iters = iteration_bound(sp.m, start.mu, mu_final)

    it = start
    iterations = 0
    while it.mu > mu_final:
        if iterations >= max_iters:
            return _report(sp, it, Status.ITERATION_LIMIT, iterations, trace, gap_tol,
                           f"stopped after {iterations} iterations at mu = {it.mu:.3e}")
        try:
            it = advance(sp, it, on_step)
        except IllConditioned as exc:
            return _report(sp, it, Status.ILL_CONDITIONED, iterations, trace, gap_tol, str(exc))
        iterations += 1
        trace.append(trace_record(sp, it, iterations))
    return _report(sp, it, Status.OPTIMAL, iterations, trace, gap_tol)
