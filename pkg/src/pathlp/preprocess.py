"""Reduce ``A x = b`` to full row rank by Gaussian elimination.

Rows are processed in order.  Each working row picks its largest remaining
entry as pivot, swapping that column into the diagonal position when needed.
A row whose remaining entries all vanish is dependent on the rows above it and
is dropped, unless its right-hand side survives, in which case the system is
inconsistent.

The rows that survive are returned *as given* (with columns permuted), not in
their eliminated form: they span the same row space and keep integral data
integral.
"""
from __future__ import annotations

from typing import List, NamedTuple

import numpy as np

from .errors import ContractViolation, InfeasibleRow
from .model import StandardProblem

EPS_RANK = 1e-10


class Reduced(NamedTuple):
    A: np.ndarray
    b: np.ndarray
    col_perm: np.ndarray
    dropped: List[int]


def row_reduce(A, b, eps: float = EPS_RANK) -> Reduced:
    A = np.atleast_2d(np.asarray(A, dtype=float))
    b = np.asarray(b, dtype=float).reshape(-1)
    n, m = A.shape
    if n < 1 or m < 1:
        raise ContractViolation("row_reduce needs a non-empty matrix")
    if b.shape != (n,):
        raise ContractViolation("b length must match the row count of A")

    scale = max(1.0, float(np.abs(A).sum(axis=1).max()))
    tol = eps * scale
    rhs_tol = eps * max(scale, float(np.abs(b).max(initial=0.0)))

    work = np.hstack([A, b[:, None]])
    perm = np.arange(m)
    kept, dropped = [], []
    rank = 0
    for i in range(n):
        row = work[i]
        if rank < m:
            j = rank + int(np.argmax(np.abs(row[rank:m])))
            pivot = row[j]
        else:
            pivot = 0.0
        if abs(pivot) <= tol:
            if abs(row[m]) > rhs_tol:
                raise InfeasibleRow(i, row[m])
            dropped.append(i)
            continue
        if j != rank:
            work[:, [rank, j]] = work[:, [j, rank]]
            perm[[rank, j]] = perm[[j, rank]]
        below = work[i + 1:]
        below -= np.outer(below[:, rank] / work[i, rank], work[i])
        below[:, rank] = 0.0
        kept.append(i)
        rank += 1

    return Reduced(A[kept][:, perm], b[kept], perm, dropped)


def reduce_problem(sp: StandardProblem, eps: float = EPS_RANK) -> StandardProblem:
    """Apply :func:`row_reduce` to ``sp`` and return the permuted, reduced problem."""
    red = row_reduce(sp.A, sp.b, eps)
    return StandardProblem(
        red.A,
        red.b,
        sp.c[red.col_perm],
        list(sp.var_map),
        col_perm=sp.col_perm[red.col_perm],
        num_orig=sp.num_orig,
    )
