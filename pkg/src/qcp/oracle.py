"""Ground-truth brute-force counting and randomized central-case scans.

The counter enumerates all of (Z/q)^m and tests every hyperplane, so it is
independent of the divisor formula and serves as its oracle.  Work is
budgeted in point-hyperplane tests (q^m * n per call) so failure behavior is
deterministic, not time-based.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

import numpy as np

from .arrangement import ArrangementInput, central_period_summary, collapse_report
from .errors import BudgetExceededError, InternalConsistencyError, ValidationError
from .intlinalg import IntMatrix

__all__ = [
    "DEFAULT_BUDGET",
    "brute_force_count",
    "generate_central_inputs",
    "central_scan",
    "ScanReport",
]

DEFAULT_BUDGET = 10**8

# Above this many grid cells the vectorized path would allocate too much.
_NUMPY_CELL_CAP = 1 << 26

# Scans re-derive small-period trials through the full constituent pipeline
# as a self-check of the fast summary.
_CROSS_CHECK_PERIOD_CAP = 60

_GENERATOR_NAME = "python-random-mt19937"


def _int64_bound_ok(arr: ArrangementInput, q: int) -> bool:
    for j in range(arr.n):
        bound = sum(abs(c) for c in arr.cmatrix.column(j)) * (q - 1) + abs(arr.offsets[j])
        if bound >= 1 << 62:
            return False
    return True


def _count_vectorized(arr: ArrangementInput, q: int) -> int:
    grid = np.indices((q,) * arr.m, dtype=np.int64).reshape(arr.m, -1)
    alive = np.ones(grid.shape[1], dtype=bool)
    for j in range(arr.n):
        col = np.array(arr.cmatrix.column(j), dtype=np.int64)
        vals = (col @ grid) % q
        alive &= vals != (arr.offsets[j] % q)
    return int(alive.sum())


def _count_scalar(arr: ArrangementInput, q: int) -> int:
    cols = [arr.cmatrix.column(j) for j in range(arr.n)]
    targets = [b % q for b in arr.offsets]
    count = 0
    for z in itertools.product(range(q), repeat=arr.m):
        for col, b in zip(cols, targets):
            acc = 0
            for zi, ci in zip(z, col):
                acc += zi * ci
            if acc % q == b:
                break
        else:
            count += 1
    return count


def brute_force_count(arr: ArrangementInput, q: int, budget: int = DEFAULT_BUDGET) -> int:
    """Cardinality of the points of (Z/q)^m avoiding every hyperplane.

    Cost is charged as q^m * n point tests against ``budget`` before any
    enumeration starts.  Uses int64 vectorized counting when the dot products
    provably fit, otherwise exact big-integer enumeration.
    """
    if q < 1:
        raise ValidationError("q must be a positive integer")
    cost = q**arr.m * arr.n
    if cost > budget:
        raise BudgetExceededError(
            f"counting at q={q} needs {cost} point tests, over the budget of {budget}"
        )
    if q**arr.m <= _NUMPY_CELL_CAP and _int64_bound_ok(arr, q):
        return _count_vectorized(arr, q)
    return _count_scalar(arr, q)


@dataclass(frozen=True)
class ScanReport:
    """Outcome of a randomized central scan; empty violations means every
    sampled arrangement had minimum period equal to lcm period."""

    trials: int
    violations: tuple[tuple[ArrangementInput, int, int], ...]
    seed: int
    generator: str = field(default=_GENERATOR_NAME)

    def to_json_dict(self) -> dict:
        return {
            "trials": self.trials,
            "seed": self.seed,
            "generator": self.generator,
            "violations": [
                {
                    "arrangement": arr.to_json_dict(),
                    "lcm_period": lcm,
                    "minimum_period": minp,
                }
                for arr, lcm, minp in self.violations
            ],
        }


def generate_central_inputs(
    m: int, n: int, entry_bound: int, trials: int, seed: int
) -> list[ArrangementInput]:
    """Deterministic sample of random central arrangements.

    Column entries are uniform in [-entry_bound, entry_bound]; zero columns
    are rejected and redrawn.  Same seed, same sample.
    """
    if m < 1 or n < 1 or entry_bound < 1:
        raise ValidationError("m, n, and entry_bound must be positive")
    if trials < 0:
        raise ValidationError("trials must be nonnegative")
    rng = random.Random(seed)
    out = []
    for _ in range(trials):
        cols = []
        for _ in range(n):
            while True:
                col = [rng.randint(-entry_bound, entry_bound) for _ in range(m)]
                if any(col):
                    break
            cols.append(col)
        out.append(ArrangementInput(IntMatrix.from_columns(cols), (0,) * n))
    return out


def central_scan(
    m: int,
    n: int,
    entry_bound: int,
    trials: int,
    seed: int,
    budget: int = DEFAULT_BUDGET,
) -> ScanReport:
    """Check minimum period == lcm period on random central arrangements.

    Periods are computed by the exact divisor-indicator summary, which
    handles the huge lcm periods random matrices routinely produce; trials
    with a small period are re-run through the full constituent pipeline and
    must agree.  Any violating arrangement is recorded with both periods.
    """
    if trials * (1 << n) * 2 > budget:
        raise BudgetExceededError(
            f"scan needs up to {trials * (1 << n) * 2} subset reductions, "
            f"over the budget of {budget}"
        )
    violations = []
    for arr in generate_central_inputs(m, n, entry_bound, trials, seed):
        rho, minp = central_period_summary(arr)
        if rho <= _CROSS_CHECK_PERIOD_CAP:
            report = collapse_report(arr)
            if report.lcm_period != rho or report.minimum_period != minp:
                raise InternalConsistencyError(
                    "fast central period summary disagrees with the "
                    f"constituent pipeline on {arr.to_json_dict()}"
                )
        if minp != rho:
            violations.append((arr, rho, minp))
    return ScanReport(trials=trials, violations=tuple(violations), seed=seed)
