"""Explicit arrangement families with known period behavior.

Four kinds of (m+1) x (p+m) matrices, used as high-value fixtures: the first
m-1 columns are standard basis columns with offset 0, column m is s times
the last basis vector with offset 0, and the final p columns share the
coefficient part (1, ..., 1, mid) while their offsets walk an arithmetic
staircase:

    kind A:      mid = p, offsets 1..p    (lcm period p, minimum period s)
    kind B:      mid = p, offsets 0..p-1  (same periods, m >= 2 only)
    kind Aprime: mid = a, offsets 1..p    (lcm period lcm(s, a))
    kind D:      Aprime with s = 1

Kind A additionally has a closed-form quasi-polynomial, an equivalent
product form built from open-cube lattice counts, and a reciprocity
identity; kind D satisfies a product formula plus an explicitly enumerable
correction term for q > p.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, gcd

from .arrangement import ArrangementInput
from .errors import ValidationError
from .intlinalg import IntMatrix
from .quasipoly import Polynomial, QuasiPolynomial

__all__ = [
    "FAMILY_KINDS",
    "FamilyParams",
    "family_matrix",
    "closed_form_A",
    "ehrhart_form_A",
    "reciprocity_A",
    "correction_term",
]

FAMILY_KINDS = ("A", "B", "Aprime", "D")


@dataclass(frozen=True)
class FamilyParams:
    """Validated parameters selecting one member of one family kind."""

    kind: str
    m: int
    p: int
    s: int = 1
    a: int = 1

    def __post_init__(self):
        if self.kind not in FAMILY_KINDS:
            raise ValidationError(f"kind must be one of {FAMILY_KINDS}, got {self.kind!r}")
        for name in ("m", "p", "s", "a"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool) or v < 1:
                raise ValidationError(f"{name} must be a positive integer, got {v!r}")
        if self.kind in ("A", "B"):
            if self.p % self.s:
                raise ValidationError(f"kind {self.kind} requires s | p, got s={self.s}, p={self.p}")
            if self.a != 1:
                raise ValidationError(f"kind {self.kind} does not use the parameter a")
        if self.kind == "B":
            if self.m < 2:
                raise ValidationError("kind B requires m >= 2 (m = 1 degenerates)")
            if self.p < 2:
                raise ValidationError("kind B requires p >= 2 (p = 1 is central)")
        if self.kind == "D" and self.s != 1:
            raise ValidationError("kind D fixes s = 1")


def family_matrix(params: FamilyParams) -> ArrangementInput:
    """Build the arrangement for the given family parameters."""
    m, p, s = params.m, params.p, params.s
    mid = params.a if params.kind in ("Aprime", "D") else p
    columns: list[list[int]] = []
    offsets: list[int] = []
    for i in range(m - 1):
        col = [0] * m
        col[i] = 1
        columns.append(col)
        offsets.append(0)
    col = [0] * m
    col[m - 1] = s
    columns.append(col)
    offsets.append(0)
    start = 0 if params.kind == "B" else 1
    for r in range(p):
        columns.append([1] * (m - 1) + [mid])
        offsets.append(start + r)
    return ArrangementInput(IntMatrix.from_columns(columns), tuple(offsets))


def _binom(n: int, k: int) -> int:
    """Binomial coefficient, zero outside 0 <= k <= n."""
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def closed_form_A(m: int, p: int, s: int) -> QuasiPolynomial:
    """Exact quasi-polynomial of the kind-A arrangement, period s.

    The class-k constituent has coefficient of t^(m-j), for j = 0..m,

        (-1)^j * [ (p*C(m-1, j-2) + C(m-1, j-1)) * gcd(k, s)
                   + p*C(m-1, j-1) + C(m-1, j) ].
    """
    FamilyParams(kind="A", m=m, p=p, s=s)
    constituents = []
    for k in range(1, s + 1):
        g = gcd(k, s)
        coeffs = [0] * (m + 1)
        for j in range(m + 1):
            value = (p * _binom(m - 1, j - 2) + _binom(m - 1, j - 1)) * g
            value += p * _binom(m - 1, j - 1) + _binom(m - 1, j)
            coeffs[m - j] = -value if j % 2 else value
        constituents.append(Polynomial(tuple(coeffs)))
    return QuasiPolynomial(period=s, constituents=tuple(constituents))


def _open_cube_count(d: int, q: int) -> int:
    """Lattice points of q times the open unit d-cube: (q-1)^d, with the
    empty product equal to 1."""
    return (q - 1) ** d if d >= 1 else 1


def _closed_cube_count(d: int, q: int) -> int:
    """Lattice points of q times the closed unit d-cube: (q+1)^d."""
    return (q + 1) ** d


def ehrhart_form_A(m: int, p: int, s: int, q: int) -> int:
    """Product form of the kind-A count via open-cube lattice counts:

        (q - gcd(q, s)) * ( (q-1)^(m-1) + p * sum_{k=1}^{m-1} (-1)^k (q-1)^(m-1-k) )
        + (-1)^m * p.
    """
    FamilyParams(kind="A", m=m, p=p, s=s)
    if q < 1:
        raise ValidationError("q must be a positive integer")
    inner = _open_cube_count(m - 1, q)
    for k in range(1, m):
        term = p * _open_cube_count(m - 1 - k, q)
        inner += -term if k % 2 else term
    tail = p if m % 2 == 0 else -p
    return (q - gcd(q, s)) * inner + tail


def reciprocity_A(m: int, p: int, s: int, q: int) -> int:
    """Closed-cube mirror of ehrhart_form_A:

        (q + gcd(q, s)) * ( (q+1)^(m-1) + p * sum_{k=1}^{m-1} (q+1)^(m-1-k) ) + p.

    Equals (-1)^m times the kind-A constituent of q's class evaluated at -q,
    with gcd taken at |q|.
    """
    FamilyParams(kind="A", m=m, p=p, s=s)
    if q < 1:
        raise ValidationError("q must be a positive integer")
    inner = _closed_cube_count(m - 1, q)
    for k in range(1, m):
        inner += p * _closed_cube_count(m - 1 - k, q)
    return (q + gcd(q, s)) * inner + p


def correction_term(a: int, p: int, q: int) -> int:
    """Number of pairs (l, r) in [1, a] x [1, p] with a | (l*q - r) and
    q - (l*q - r)/a in [1, q-1].  Requires q > p.

    Equals p when a = 1, and when a = p with q >= 2p; no closed form is
    claimed for other parameters, the count is enumerated directly.
    """
    if a < 1 or p < 1:
        raise ValidationError("a and p must be positive integers")
    if q <= p:
        raise ValidationError(f"correction term requires q > p, got q={q}, p={p}")
    count = 0
    for r in range(1, p + 1):
        for ell in range(1, a + 1):
            num = ell * q - r
            if num % a:
                continue
            x = q - num // a
            if 1 <= x <= q - 1:
                count += 1
    return count
