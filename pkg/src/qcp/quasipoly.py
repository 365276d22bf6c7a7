"""Quasi-polynomials with exact integer constituents.

A quasi-polynomial of period ``rho`` is a list of ``rho`` polynomials
f^1, ..., f^rho; its value at a positive integer q is f^k(q) where k is the
residue class of q, with classes numbered 1..rho and class rho standing for
q divisible by rho.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import InternalConsistencyError, ValidationError
from .intlinalg import divisors_of

__all__ = [
    "Polynomial",
    "QuasiPolynomial",
    "interpolate_constituents",
    "minimum_period",
    "has_gcd_property",
]


@dataclass(frozen=True)
class Polynomial:
    """Integer polynomial, coefficients constant-term first, trailing zeros stripped."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        coeffs = list(self.coeffs)
        for c in coeffs:
            if not isinstance(c, int) or isinstance(c, bool):
                raise ValidationError(f"polynomial coefficients must be integers, got {c!r}")
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def evaluate(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for d in range(self.degree, -1, -1):
            c = self.coeffs[d]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if d == 0:
                body = str(mag)
            else:
                var = "t" if d == 1 else f"t^{d}"
                body = var if mag == 1 else f"{mag}{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)

    def to_json_list(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json_list(cls, data) -> "Polynomial":
        return cls(tuple(int(c) for c in data))


@dataclass(frozen=True)
class QuasiPolynomial:
    """Periodic family of monic integer polynomials of a common degree.

    ``constituents[k - 1]`` is the polynomial governing residue class k for
    k in 1..period; class ``period`` covers arguments divisible by the period.
    """

    period: int
    constituents: tuple[Polynomial, ...]

    def __post_init__(self):
        object.__setattr__(self, "constituents", tuple(self.constituents))
        if self.period < 1:
            raise ValidationError("period must be a positive integer")
        if len(self.constituents) != self.period:
            raise ValidationError("need exactly one constituent per residue class")
        for p in self.constituents:
            if not isinstance(p, Polynomial):
                raise ValidationError(f"constituents must be Polynomial values, got {p!r}")
        degrees = {p.degree for p in self.constituents}
        if len(degrees) != 1:
            raise ValidationError(f"constituents must share one degree, got {sorted(degrees)}")
        if not all(p.is_monic for p in self.constituents):
            raise ValidationError("every constituent must be monic")

    @property
    def degree(self) -> int:
        return self.constituents[0].degree

    def constituent_for_class(self, k: int) -> Polynomial:
        if not 1 <= k <= self.period:
            raise ValidationError(f"residue class {k} out of range 1..{self.period}")
        return self.constituents[k - 1]

    def evaluate(self, q: int) -> int:
        """Value at a positive integer q, using the constituent of q's class."""
        if q < 1:
            raise ValidationError("evaluation point must be a positive integer")
        return self.constituents[(q - 1) % self.period].evaluate(q)

    def with_period(self, new_period: int) -> "QuasiPolynomial":
        """Re-express with a period that is a multiple of the current one."""
        if new_period % self.period:
            raise ValidationError("new period must be a multiple of the current period")
        reps = tuple(
            self.constituents[k % self.period] for k in range(new_period)
        )
        return QuasiPolynomial(period=new_period, constituents=reps)

    def to_json_dict(self) -> dict:
        return {
            "period": self.period,
            "constituents": [
                {"k": k + 1, "coeffs": poly.to_json_list()}
                for k, poly in enumerate(self.constituents)
            ],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "QuasiPolynomial":
        period = int(data["period"])
        by_class = {int(item["k"]): item["coeffs"] for item in data["constituents"]}
        if sorted(by_class) != list(range(1, period + 1)):
            raise ValidationError("constituent classes must be exactly 1..period")
        return cls(
            period=period,
            constituents=tuple(
                Polynomial.from_json_list(by_class[k]) for k in range(1, period + 1)
            ),
        )


def _lagrange_coeffs(points: list[tuple[int, int]]) -> list[Fraction]:
    """Exact coefficients (constant first) of the interpolating polynomial."""
    n = len(points)
    acc = [Fraction(0)] * n
    for i, (qi, vi) in enumerate(points):
        basis = [Fraction(1)]
        denom = 1
        for j, (qj, _) in enumerate(points):
            if j == i:
                continue
            shifted = [Fraction(0)] * (len(basis) + 1)
            for d, c in enumerate(basis):
                shifted[d] -= c * qj
                shifted[d + 1] += c
            basis = shifted
            denom *= qi - qj
        scale = Fraction(vi, denom)
        for d, c in enumerate(basis):
            acc[d] += c * scale
    return acc


def interpolate_constituents(samples, expected_degree: int) -> QuasiPolynomial:
    """Reconstruct a quasi-polynomial from per-class samples.

    ``samples`` maps each residue class k in 1..rho (rho = number of keys) to
    at least ``expected_degree + 1`` pairs (q, value) with q ≡ k mod rho and
    pairwise distinct q.  The first ``expected_degree + 1`` points of each
    class (in increasing q) determine the constituent; any further points act
    as holdouts and must match it exactly.

    Raises
    ------
    InternalConsistencyError
        If a constituent is not integral or a holdout sample disagrees.
    ValidationError
        If the sample map is malformed or underdetermined.
    """
    if expected_degree < 0:
        raise ValidationError("expected_degree must be nonnegative")
    rho = len(samples)
    if rho < 1:
        raise ValidationError("need samples for at least one residue class")
    if sorted(samples) != list(range(1, rho + 1)):
        raise ValidationError("sample classes must be exactly 1..rho")

    constituents = []
    for k in range(1, rho + 1):
        pts = sorted((int(q), int(v)) for q, v in samples[k])
        if len(pts) < expected_degree + 1:
            raise ValidationError(
                f"class {k}: need at least {expected_degree + 1} samples, got {len(pts)}"
            )
        qs = [q for q, _ in pts]
        if len(set(qs)) != len(qs):
            raise ValidationError(f"class {k}: sample points must be pairwise distinct")
        for q in qs:
            if q < 1 or q % rho != k % rho:
                raise ValidationError(f"class {k}: sample point {q} not in the class")
        base = pts[: expected_degree + 1]
        frac = _lagrange_coeffs(base)
        ints = []
        for c in frac:
            if c.denominator != 1:
                raise InternalConsistencyError(
                    f"constituent not integral: class {k} yields coefficient {c}"
                )
            ints.append(int(c))
        poly = Polynomial(tuple(ints))
        for q, v in pts[expected_degree + 1 :]:
            got = poly.evaluate(q)
            if got != v:
                raise InternalConsistencyError(
                    f"holdout sample mismatch: class {k} at q={q}: "
                    f"interpolant gives {got}, sample says {v}"
                )
        constituents.append(poly)
    return QuasiPolynomial(period=rho, constituents=tuple(constituents))


def minimum_period(qp: QuasiPolynomial) -> int:
    """Smallest divisor s of the period with f^k = f^k' whenever k ≡ k' mod s."""
    rho = qp.period
    cons = qp.constituents
    for s in divisors_of(rho):
        if all(cons[i] == cons[i % s] for i in range(rho)):
            return s
    return rho  # unreachable: s = rho always matches


def has_gcd_property(qp: QuasiPolynomial) -> bool:
    """Whether constituents depend on the class k only through gcd(k, period)."""
    rho = qp.period
    rep: dict[int, Polynomial] = {}
    for k in range(1, rho + 1):
        g = gcd(k, rho)
        if g in rep:
            if rep[g] != qp.constituents[k - 1]:
                return False
        else:
            rep[g] = qp.constituents[k - 1]
    return True
