"""Dense primal-dual path-following interior-point LP solver."""
from .central import Iterate, NewtonStep, SolveReport, Status, TraceRecord
from .model import GeneralProblem, Relation, Sense, StandardProblem, to_standard, recover_solution
from .pipeline import Solution, solve

__all__ = [
    "GeneralProblem", "Relation", "Sense", "StandardProblem", "to_standard", "recover_solution",
    "Iterate", "NewtonStep", "SolveReport", "Status", "TraceRecord", "Solution", "solve",
]
