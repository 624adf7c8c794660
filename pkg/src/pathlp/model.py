"""User-facing LP description and its reduction to equality form.

A :class:`GeneralProblem` holds ``<=``, ``=`` and ``>=`` rows over
nonnegative variables.  :func:`to_standard` turns it into
``min c.x  s.t.  A x = b, x >= 0`` by negating a maximisation objective and
appending one slack (``<=``) or surplus (``>=``) column per inequality.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import List, Sequence, Tuple

import numpy as np

from .errors import ContractViolation


class Sense(str, enum.Enum):
    MINIMIZE = "min"
    MAXIMIZE = "max"


class Relation(str, enum.Enum):
    LE = "<="
    EQ = "="
    GE = ">="


@dataclass(frozen=True)
class Row:
    coeffs: Tuple[float, ...]
    relation: Relation
    rhs: float


@dataclass(frozen=True)
class GeneralProblem:
    sense: Sense
    objective: Tuple[float, ...]
    rows: Tuple[Row, ...]

    def __post_init__(self):
        v = len(self.objective)
        if v < 1:
            raise ContractViolation("objective needs at least one variable")
        if not self.rows:
            raise ContractViolation("problem needs at least one constraint row")
        for i, row in enumerate(self.rows):
            if len(row.coeffs) != v:
                raise ContractViolation(
                    f"row {i} has {len(row.coeffs)} coefficients, objective has {v}"
                )

    @property
    def num_vars(self) -> int:
        return len(self.objective)

    @classmethod
    def build(cls, sense, objective, rows):
        """Convenience constructor taking plain lists/tuples.

        ``rows`` is an iterable of ``(coeffs, relation, rhs)`` where
        ``relation`` is a :class:`Relation` or one of ``"<=", "=", ">="``.
        """
        return cls(
            Sense(sense),
            tuple(float(c) for c in objective),
            tuple(
                Row(tuple(float(a) for a in coeffs), Relation(rel), float(rhs))
                for coeffs, rel, rhs in rows
            ),
        )


@dataclass(frozen=True)
class VarRef:
    """Origin of one standard-form column."""

    kind: str  # "orig", "slack" or "surplus"
    index: int  # original variable index, or row index for slack/surplus


@dataclass
class StandardProblem:
    """``min c.x  s.t.  A x = b, x >= 0``.

    ``var_map`` describes the columns in *pre-permutation* order; column ``j``
    of ``A`` corresponds to pre-permutation column ``col_perm[j]``.
    """

    A: np.ndarray
    b: np.ndarray
    c: np.ndarray
    var_map: List[VarRef]
    col_perm: np.ndarray = field(default=None)
    num_orig: int = 0

    def __post_init__(self):
        self.A = np.atleast_2d(np.asarray(self.A, dtype=float))
        self.b = np.asarray(self.b, dtype=float).reshape(-1)
        self.c = np.asarray(self.c, dtype=float).reshape(-1)
        n, m = self.A.shape
        if self.b.shape != (n,) or self.c.shape != (m,):
            raise ContractViolation(
                f"shape mismatch: A {self.A.shape}, b {self.b.shape}, c {self.c.shape}"
            )
        if len(self.var_map) != m:
            raise ContractViolation("var_map must describe every column")
        if self.col_perm is None:
            self.col_perm = np.arange(m)
        else:
            self.col_perm = np.asarray(self.col_perm, dtype=int)
        if sorted(self.col_perm.tolist()) != list(range(m)):
            raise ContractViolation("col_perm is not a permutation")
        if not self.num_orig:
            self.num_orig = sum(1 for ref in self.var_map if ref.kind == "orig")

    @property
    def n(self) -> int:
        return self.A.shape[0]

    @property
    def m(self) -> int:
        return self.A.shape[1]


def to_standard(p: GeneralProblem) -> StandardProblem:
    """Convert ``p`` to equality form (no rank reduction)."""
    v = p.num_vars
    extra = [i for i, row in enumerate(p.rows) if row.relation is not Relation.EQ]
    n, m = len(p.rows), v + len(extra)

    A = np.zeros((n, m))
    b = np.empty(n)
    c = np.zeros(m)
    c[:v] = p.objective
    if p.sense is Sense.MAXIMIZE:
        c[:v] = -c[:v]

    var_map = [VarRef("orig", j) for j in range(v)]
    col = v
    for i, row in enumerate(p.rows):
        A[i, :v] = row.coeffs
        b[i] = row.rhs
        if row.relation is Relation.LE:
            A[i, col] = 1.0
            var_map.append(VarRef("slack", i))
            col += 1
        elif row.relation is Relation.GE:
            A[i, col] = -1.0
            var_map.append(VarRef("surplus", i))
            col += 1
    return StandardProblem(A, b, c, var_map, num_orig=v)


def recover_solution(sp: StandardProblem, x_std: Sequence[float]) -> np.ndarray:
    """Map a standard-form point back to the original variables."""
    x_std = np.asarray(x_std, dtype=float).reshape(-1)
    if x_std.shape != (sp.m,):
        raise ContractViolation(f"expected {sp.m} values, got {x_std.shape[0]}")
    if not np.all(np.isfinite(x_std)):
        raise ContractViolation("x_std must be finite")
    unpermuted = np.empty(sp.m)
    unpermuted[sp.col_perm] = x_std
    out = np.zeros(sp.num_orig)
    for value, ref in zip(unpermuted, sp.var_map):
        if ref.kind == "orig":
            out[ref.index] = value
    return out


def objective_value(p: GeneralProblem, x: Sequence[float]) -> float:
    """Objective of ``p`` at ``x`` in the user's own sense."""
    return float(np.dot(p.objective, x))
