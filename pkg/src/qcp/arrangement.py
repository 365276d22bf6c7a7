"""Counting the complement of an integral hyperplane arrangement modulo q.

An arrangement is given by an integer matrix C (one column per hyperplane)
and an integer offset vector b; hyperplane j consists of the points z in
(Z/q)^m with z . c_j ≡ b_j.  For q above a computable threshold q0, the
number of points avoiding every hyperplane is a quasi-polynomial in q whose
period divides the lcm period of C.  Both the counting formula and the
period analysis are derived from elementary divisors of column submatrices:

    count(q) = q^m + sum over column subsets J with rank(A_J) = rank(C_J) of
               (-1)^{|J|} * d_J(q) * q^{m - rank(C_J)},

where A_J stacks the offsets under C_J, and d_J(q) is the product of
gcd(e, q) over the divisor chain e of C_J provided each gcd agrees with the
corresponding gcd for A_J's chain, else 0.

The enumeration groups equal coefficient columns: a subset containing one
coefficient column with two different offsets always has a rank jump and
contributes nothing, so only one offset per column class is ever chosen.
Identical stacked columns are deduplicated first; summing the sign over all
ways to pick at least one copy of a repeated column collapses to a single
signed pick, so deduplication is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .errors import BudgetExceededError, InternalConsistencyError, ValidationError
from .intlinalg import (
    IntMatrix,
    _smith_divisors,
    divisors_of,
    euler_phi,
    gcd_all,
)
from .quasipoly import (
    Polynomial,
    QuasiPolynomial,
    has_gcd_property,
    interpolate_constituents,
    minimum_period,
)

__all__ = [
    "ArrangementInput",
    "CollapseReport",
    "lcm_period",
    "q_zero",
    "divisor_formula_count",
    "divisor_formula_count_naive",
    "characteristic_quasi_polynomial",
    "characteristic_polynomial",
    "collapse_report",
    "central_period_summary",
    "CONSTITUENT_BUDGET",
]

# Largest lcm period for which constituents are materialized one by one.
CONSTITUENT_BUDGET = 100_000

# Naive subset enumeration is quadratic-exponential; refuse past this width.
NAIVE_COLUMN_LIMIT = 20


@dataclass(frozen=True)
class ArrangementInput:
    """An integral arrangement: coefficient matrix plus offset vector.

    ``cmatrix`` is m x n with no zero column; ``offsets`` has one entry per
    column.  The central case is ``offsets == 0``.
    """

    cmatrix: IntMatrix
    offsets: tuple[int, ...]

    def __post_init__(self):
        for b in self.offsets:
            if not isinstance(b, int) or isinstance(b, bool):
                raise ValidationError(f"offsets must be integers, got {b!r}")
        object.__setattr__(self, "offsets", tuple(self.offsets))
        if len(self.offsets) != self.cmatrix.cols:
            raise ValidationError(
                f"offset vector has {len(self.offsets)} entries for {self.cmatrix.cols} hyperplanes"
            )
        for j in range(self.cmatrix.cols):
            if not any(self.cmatrix.column(j)):
                raise ValidationError(f"coefficient column {j} is zero")

    @property
    def m(self) -> int:
        """Ambient dimension."""
        return self.cmatrix.rows

    @property
    def n(self) -> int:
        """Number of hyperplanes."""
        return self.cmatrix.cols

    @property
    def is_central(self) -> bool:
        return not any(self.offsets)

    def stacked(self) -> IntMatrix:
        """The (m+1) x n matrix with the offsets appended as a last row."""
        return self.cmatrix.with_extra_row(self.offsets)

    def to_json_dict(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "C": [list(self.cmatrix.row(i)) for i in range(self.m)],
            "b": list(self.offsets),
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "ArrangementInput":
        try:
            m = int(data["m"])
            n = int(data["n"])
            crows = data["C"]
            b = data["b"]
        except (KeyError, TypeError) as exc:
            raise ValidationError(f"malformed arrangement object: {exc}") from exc
        matrix = IntMatrix.from_rows([[int(v) for v in row] for row in crows])
        if matrix.rows != m or matrix.cols != n:
            raise ValidationError(
                f"declared shape {m}x{n} does not match C ({matrix.rows}x{matrix.cols})"
            )
        return cls(cmatrix=matrix, offsets=tuple(int(v) for v in b))


@dataclass(frozen=True)
class CollapseReport:
    """Periods, collapse flag, threshold, and the quasi-polynomial itself."""

    lcm_period: int
    minimum_period: int
    collapse: bool
    q0: int
    gcd_property: bool
    quasi_polynomial: QuasiPolynomial

    def __post_init__(self):
        if self.lcm_period % self.minimum_period:
            raise ValidationError("minimum period must divide the lcm period")
        if self.collapse != (self.minimum_period < self.lcm_period):
            raise ValidationError("collapse flag inconsistent with the periods")

    def to_json_dict(self) -> dict:
        return {
            "lcm_period": self.lcm_period,
            "minimum_period": self.minimum_period,
            "collapse": self.collapse,
            "q0": self.q0,
            "gcd_property": self.gcd_property,
            "quasi_polynomial": self.quasi_polynomial.to_json_dict(),
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "CollapseReport":
        return cls(
            lcm_period=int(data["lcm_period"]),
            minimum_period=int(data["minimum_period"]),
            collapse=bool(data["collapse"]),
            q0=int(data["q0"]),
            gcd_property=bool(data["gcd_property"]),
            quasi_polynomial=QuasiPolynomial.from_json_dict(data["quasi_polynomial"]),
        )


def _reduce_against(basis, vec):
    """Eliminate ``vec`` against an integer echelon basis.

    ``basis`` is a list of (pivot index, row) pairs.  Returns the reduced
    (pivot, row) for an independent vector, or None for a dependent one.
    Rows are gcd-normalized to keep entries small.
    """
    v = list(vec)
    for piv, row in basis:
        if v[piv]:
            a, b = row[piv], v[piv]
            g = gcd(a, b)
            fa, fb = a // g, b // g
            v = [fa * x - fb * y for x, y in zip(v, row)]
    for idx, val in enumerate(v):
        if val:
            g = gcd_all(v)
            if g > 1:
                v = [x // g for x in v]
            if v[idx] < 0:
                v = [-x for x in v]
            return idx, tuple(v)
    return None


def lcm_period(cmatrix: IntMatrix) -> int:
    """lcm of the largest elementary divisor over all column subsets.

    Every subset's largest divisor divides the largest divisor of some
    linearly independent subset spanning the same columns (dropping a
    dependent column can only grow invariant factors), so only independent
    subsets of distinct columns are enumerated.
    """
    for j in range(cmatrix.cols):
        if not any(cmatrix.column(j)):
            raise ValidationError(f"coefficient column {j} is zero")
    cols: list[tuple[int, ...]] = []
    seen = set()
    for c in cmatrix.columns():
        if c not in seen:
            seen.add(c)
            cols.append(c)
    nrows = cmatrix.rows
    acc = 1
    chosen: list[tuple[int, ...]] = []

    def rec(start: int, basis) -> None:
        nonlocal acc
        for idx in range(start, len(cols)):
            red = _reduce_against(basis, cols[idx])
            if red is None:
                continue
            chosen.append(cols[idx])
            rows = [[c[i] for c in chosen] for i in range(nrows)]
            divs = _smith_divisors(rows)
            top = divs[-1]
            acc = acc // gcd(acc, top) * top
            rec(idx + 1, basis + [red])
            chosen.pop()

    rec(0, [])
    return acc


def q_zero(arr: ArrangementInput) -> int:
    """Validity threshold: the counting formula equals the true count for q > q0.

    q0 is the largest elementary divisor of a stacked submatrix A_J over the
    subsets J whose stacked rank exceeds the coefficient rank by one.  The
    maximum is attained on subsets with independent stacked columns (again by
    invariant-factor monotonicity under column deletion), so the search walks
    independent subsets only; their size is at most m + 1.
    """
    if arr.is_central:
        return 0
    m = arr.m
    stacked_cols: list[tuple[int, ...]] = []
    seen = set()
    for j in range(arr.n):
        col = arr.cmatrix.column(j) + (arr.offsets[j],)
        if col not in seen:
            seen.add(col)
            stacked_cols.append(col)
    best = 0
    chosen: list[tuple[int, ...]] = []

    def rec(start: int, a_basis, c_basis, jumped: bool) -> None:
        nonlocal best
        for idx in range(start, len(stacked_cols)):
            col = stacked_cols[idx]
            a_red = _reduce_against(a_basis, col)
            if a_red is None:
                continue
            c_red = _reduce_against(c_basis, col[:m])
            if c_red is None and jumped:
                # dropping one row of an independent set loses rank at most 1
                raise InternalConsistencyError(
                    "two coefficient-rank drops inside an independent stacked subset"
                )
            now_jumped = jumped or c_red is None
            chosen.append(col)
            if now_jumped:
                rows = [[c[i] for c in chosen] for i in range(m + 1)]
                top = _smith_divisors(rows)[-1]
                if top > best:
                    best = top
            rec(
                idx + 1,
                a_basis + [a_red],
                c_basis if c_red is None else c_basis + [c_red],
                now_jumped,
            )
            chosen.pop()

    rec(0, [], [], False)
    return best


def _build_term_table(arr: ArrangementInput) -> dict:
    """Aggregate subset contributions of the counting formula.

    Key: (coefficient rank, tuple of (e, e') divisor pairs with (1, 1)
    dropped); value: signed number of subsets with that data.  Grouped by
    equal coefficient columns, one offset choice per class, identical stacked
    columns deduplicated.
    """
    m = arr.m
    classes: list[tuple[tuple[int, ...], list[int]]] = []
    index: dict[tuple[int, ...], int] = {}
    seen = set()
    for j in range(arr.n):
        c = arr.cmatrix.column(j)
        b = arr.offsets[j]
        if (c, b) in seen:
            continue
        seen.add((c, b))
        if c in index:
            classes[index[c]][1].append(b)
        else:
            index[c] = len(classes)
            classes.append((c, [b]))

    terms: dict = {}
    chosen: list[tuple[tuple[int, ...], int]] = []

    def visit() -> None:
        crows = [[c[i] for c, _ in chosen] for i in range(m)]
        arows = [list(r) for r in crows] + [[b for _, b in chosen]]
        es = _smith_divisors(crows)
        eps = _smith_divisors(arows)
        if len(eps) != len(es):
            return  # rank jump: contributes nothing
        pairs = tuple(p for p in zip(es, eps) if p != (1, 1))
        key = (len(es), pairs)
        sign = -1 if len(chosen) % 2 else 1
        terms[key] = terms.get(key, 0) + sign

    def rec(start: int) -> None:
        for idx in range(start, len(classes)):
            cvec, bs = classes[idx]
            for b in bs:
                chosen.append((cvec, b))
                visit()
                rec(idx + 1)
                chosen.pop()

    rec(0)
    return {key: coef for key, coef in terms.items() if coef}


_term_table = lru_cache(maxsize=128)(_build_term_table)


def _evaluate_terms(terms: dict, m: int, q: int) -> int:
    powers = [1] * (m + 1)
    for i in range(1, m + 1):
        powers[i] = powers[i - 1] * q
    total = powers[m]
    for (ell, pairs), coef in terms.items():
        prod = 1
        for e, ep in pairs:
            g = gcd(e, q)
            if g != gcd(ep, q):
                prod = 0
                break
            prod *= g
        if prod:
            total += coef * prod * powers[m - ell]
    return total


def divisor_formula_count(arr: ArrangementInput, q: int) -> int:
    """Exact evaluation of the divisor counting formula at q >= 1.

    Equals the true complement cardinality for every q > q_zero(arr); below
    the threshold the two may differ and no agreement is claimed.
    """
    if q < 1:
        raise ValidationError("q must be a positive integer")
    return _evaluate_terms(_term_table(arr), arr.m, q)


def divisor_formula_count_naive(arr: ArrangementInput, q: int) -> int:
    """Reference evaluation over all 2^n - 1 column subsets, no grouping.

    Kept as an independent cross-check of the grouped enumerator; refuses
    inputs wider than NAIVE_COLUMN_LIMIT columns.
    """
    if q < 1:
        raise ValidationError("q must be a positive integer")
    n = arr.n
    if n > NAIVE_COLUMN_LIMIT:
        raise BudgetExceededError(
            f"naive enumeration over 2^{n} subsets exceeds the limit of "
            f"{NAIVE_COLUMN_LIMIT} columns"
        )
    m = arr.m
    cols = [(arr.cmatrix.column(j), arr.offsets[j]) for j in range(n)]
    total = q**m
    for mask in range(1, 1 << n):
        sub = [cols[j] for j in range(n) if mask >> j & 1]
        crows = [[c[i] for c, _ in sub] for i in range(m)]
        arows = [list(r) for r in crows] + [[b for _, b in sub]]
        es = _smith_divisors(crows)
        eps = _smith_divisors(arows)
        if len(es) != len(eps):
            continue
        prod = 1
        for e, ep in zip(es, eps):
            g = gcd(e, q)
            if g != gcd(ep, q):
                prod = 0
                break
            prod *= g
        if prod:
            sign = -1 if bin(mask).count("1") % 2 else 1
            total += sign * prod * q ** (m - len(es))
    return total


def _check_divisor_chains(terms: dict, rho: int) -> None:
    """Structural sanity: every term divisor divides the lcm period.

    This is what makes every constituent depend on its class only through
    the gcd with the period; a violation would mean a bug in the period or
    term computation.
    """
    for (_, pairs), _ in terms.items():
        for e, ep in pairs:
            if rho % e or rho % ep:
                raise InternalConsistencyError(
                    f"term divisor pair ({e}, {ep}) does not divide the lcm period {rho}"
                )


def characteristic_quasi_polynomial(arr: ArrangementInput) -> QuasiPolynomial:
    """The counting quasi-polynomial, one exact constituent per residue class.

    Each class k is sampled at the m + 2 smallest admissible points
    q > q0 with q ≡ k mod period; m + 1 points determine the constituent by
    exact interpolation and the extra point is a holdout that must match.
    Constituents are monic of degree m with integer coefficients; any
    violation raises InternalConsistencyError.
    """
    rho = lcm_period(arr.cmatrix)
    if rho > CONSTITUENT_BUDGET:
        raise BudgetExceededError(
            f"lcm period {rho} exceeds the constituent materialization budget "
            f"{CONSTITUENT_BUDGET}"
        )
    q0 = q_zero(arr)
    terms = _term_table(arr)
    _check_divisor_chains(terms, rho)
    m = arr.m
    samples = {}
    for k in range(1, rho + 1):
        first = q0 + 1 + ((k - (q0 + 1)) % rho)
        pts = []
        for i in range(m + 2):
            q = first + i * rho
            pts.append((q, _evaluate_terms(terms, m, q)))
        samples[k] = pts
    return interpolate_constituents(samples, expected_degree=m)


def characteristic_polynomial(arr: ArrangementInput) -> Polynomial:
    """The class-1 constituent (the characteristic polynomial of the arrangement)."""
    return characteristic_quasi_polynomial(arr).constituent_for_class(1)


def collapse_report(arr: ArrangementInput) -> CollapseReport:
    """Full period analysis: lcm period, minimum period, collapse flag, q0."""
    qp = characteristic_quasi_polynomial(arr)
    minp = minimum_period(qp)
    return CollapseReport(
        lcm_period=qp.period,
        minimum_period=minp,
        collapse=minp < qp.period,
        q0=q_zero(arr),
        gcd_property=has_gcd_property(qp),
        quasi_polynomial=qp,
    )


def central_period_summary(arr: ArrangementInput) -> tuple[int, int]:
    """(lcm period, minimum period) of a central arrangement, without
    materializing any constituent.

    For central input the offset row is zero, so every subset keeps its rank
    and its two divisor chains coincide; each coefficient of the counting
    quasi-polynomial is then a signed sum of products gcd(e, q).  Expanding
    gcd(e, q) = sum of phi(d) over d dividing both e and q turns every
    coefficient into an integer combination of divisibility indicators
    [D | q], and the minimum period of such a combination is the lcm of the
    moduli D that survive with a nonzero weight.  The overall minimum period
    is the lcm over the coefficients.  Cost scales with the number of
    divisors involved, not with the period, so periods far beyond the
    materialization budget remain exact.
    """
    if not arr.is_central:
        raise ValidationError("central_period_summary requires a central arrangement")
    rho = lcm_period(arr.cmatrix)
    terms = _term_table(arr)
    weights: dict[int, dict[int, int]] = {}
    for (ell, pairs), coef in terms.items():
        for e, ep in pairs:
            if e != ep:
                raise InternalConsistencyError(
                    "central arrangement produced unequal divisor chains"
                )
            if rho % e:
                raise InternalConsistencyError(
                    f"term divisor {e} does not divide the lcm period {rho}"
                )
        expansion = {1: coef}
        for e, _ in pairs:
            nxt: dict[int, int] = {}
            for d in divisors_of(e):
                f = euler_phi(d)
                for dd, w in expansion.items():
                    key = dd // gcd(dd, d) * d
                    nxt[key] = nxt.get(key, 0) + w * f
            expansion = nxt
        dest = weights.setdefault(ell, {})
        for dmod, w in expansion.items():
            dest[dmod] = dest.get(dmod, 0) + w
    minp = 1
    for dest in weights.values():
        for dmod, w in dest.items():
            if w:
                minp = minp // gcd(minp, dmod) * dmod
    if rho % minp:
        raise InternalConsistencyError(
            f"minimum period {minp} does not divide the lcm period {rho}"
        )
    return rho, minp
