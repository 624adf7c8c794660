"""Random LP instances and exact-arithmetic helpers shared by the tests."""
from fractions import Fraction
import itertools

import numpy as np

from pathlp.model import GeneralProblem, Relation, Sense


def exact_det(rows):
    """Integer determinant by the permutation expansion (small n only)."""
    n = len(rows)
    total = 0
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        prod = 1
        for i, j in enumerate(perm):
            prod *= rows[i][j]
        total += -prod if inversions % 2 else prod
    return total


def exact_rank(rows):
    """Rank by fraction-exact Gaussian elimination."""
    work = [[Fraction(v) for v in row] for row in rows]
    rank, cols = 0, len(work[0]) if work else 0
    for col in range(cols):
        pivot = next((r for r in range(rank, len(work)) if work[r][col] != 0), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        for r in range(len(work)):
            if r != rank and work[r][col] != 0:
                factor = work[r][col] / work[rank][col]
                work[r] = [a - factor * b for a, b in zip(work[r], work[rank])]
        rank += 1
    return rank


def rank_product(rng, n, m, r, lo=-3, hi=3):
    """Integer ``n x m`` matrix built as a product of ``n x r`` and ``r x m`` factors."""
    return rng.integers(lo, hi + 1, size=(n, r)) @ rng.integers(lo, hi + 1, size=(r, m))


def random_feasible_lp(rng, limit=5):
    """Feasible, bounded LP with integer data in ``[-limit, limit]``.

    Feasibility comes from a planted nonnegative point, boundedness from a
    planted dual-feasible pair (sign-constrained on slack/surplus columns).
    Standard-form sizes satisfy ``1 <= n <= 4`` and ``n + 1 <= m <= 8``.
    """
    while True:
        n = int(rng.integers(1, 5))
        m = int(rng.integers(n + 1, 9))
        rels = [Relation.EQ] * n
        if rng.random() < 0.5:
            n_ineq = int(rng.integers(0, min(n, m - 1) + 1))
            for i in rng.choice(n, size=n_ineq, replace=False):
                rels[i] = Relation.LE if rng.random() < 0.5 else Relation.GE
        v = m - sum(r is not Relation.EQ for r in rels)
        if v < 1:
            continue
        A = rng.integers(-limit, limit + 1, size=(n, v))
        x0 = rng.integers(0, 3, size=v)
        slack0 = rng.integers(0, 3, size=n)
        b = A @ x0
        for i, rel in enumerate(rels):
            if rel is Relation.LE:
                b[i] += slack0[i]
            elif rel is Relation.GE:
                b[i] -= slack0[i]
        y0 = rng.integers(-2, 3, size=n)
        for i, rel in enumerate(rels):
            if rel is Relation.LE:
                y0[i] = -abs(y0[i])
            elif rel is Relation.GE:
                y0[i] = abs(y0[i])
        c = A.T @ y0 + rng.integers(0, 4, size=v)
        if np.abs(b).max() > limit or np.abs(c).max() > limit:
            continue
        sense = Sense.MINIMIZE
        if rng.random() < 0.25:
            sense, c = Sense.MAXIMIZE, -c
        return GeneralProblem.build(sense, c, [(A[i], rels[i], b[i]) for i in range(n)])


def random_infeasible_lps():
    """Twenty infeasible problems of several kinds (deterministic)."""
    rng = np.random.default_rng(2024)
    out = []
    for a in range(1, 6):
        # inconsistent copies of one equality
        out.append(GeneralProblem.build("min", [1, 1], [([1, 1], "=", a), ([2, 2], "=", 2 * a + 1)]))
    for a in range(1, 6):
        # x1 + x2 <= a together with x1 + x2 >= a + 1
        out.append(GeneralProblem.build("min", [1, -1, 2], [([1, 1, 0], "<=", a), ([1, 1, 0], ">=", a + 1)]))
    for _ in range(5):
        # positive row, negative right-hand side
        v = int(rng.integers(2, 5))
        row = rng.integers(1, 6, size=v)
        other = rng.integers(-5, 6, size=v)
        out.append(GeneralProblem.build(
            "max", rng.integers(-5, 6, size=v),
            [(row, "=", -int(rng.integers(1, 6))), (other, "<=", 5)]))
    for _ in range(5):
        # a sum of nonnegative variables forced both above and below
        v = int(rng.integers(2, 4))
        w = rng.integers(1, 4, size=v)
        lo = int(rng.integers(2, 6))
        out.append(GeneralProblem.build(
            "min", rng.integers(-5, 6, size=v),
            [(w, ">=", lo), (w, "<=", lo - 1), (rng.integers(-3, 4, size=v), "<=", 5)]))
    return out
