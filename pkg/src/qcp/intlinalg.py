"""Exact integer linear algebra: dense matrices, Smith normal form, rank.

Everything runs on Python's arbitrary-precision integers, so intermediate
growth can never overflow and every result is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import ValidationError

__all__ = [
    "IntMatrix",
    "SmithForm",
    "smith_normal_form",
    "integer_rank",
    "gcd_all",
    "lcm_all",
    "divisors_of",
    "euler_phi",
]


def gcd_all(values) -> int:
    """Nonnegative gcd of an iterable of integers (0 for an empty/all-zero one)."""
    g = 0
    for v in values:
        g = gcd(g, v)
    return g


def lcm_all(values) -> int:
    """Positive lcm of an iterable of integers, ignoring zeros; 1 if empty."""
    out = 1
    for v in values:
        v = abs(v)
        if v:
            out = out // gcd(out, v) * v
    return out


def divisors_of(n: int) -> list[int]:
    """Sorted positive divisors of a positive integer."""
    if n < 1:
        raise ValidationError("divisors_of expects a positive integer")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def euler_phi(n: int) -> int:
    """Euler totient of a positive integer, by trial-division factorization."""
    if n < 1:
        raise ValidationError("euler_phi expects a positive integer")
    out = n
    p = 2
    while p * p <= n:
        if n % p == 0:
            out -= out // p
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out -= out // n
    return out


@dataclass(frozen=True)
class IntMatrix:
    """Immutable dense integer matrix, entries stored row-major.

    Attributes
    ----------
    rows, cols : int
        Shape; both must be at least 1.
    entries : tuple[int, ...]
        Row-major entries, length rows * cols.
    """

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        if self.rows < 1 or self.cols < 1:
            raise ValidationError("matrix must have at least one row and one column")
        if len(self.entries) != self.rows * self.cols:
            raise ValidationError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )
        for e in self.entries:
            if not isinstance(e, int) or isinstance(e, bool):
                raise ValidationError(f"matrix entries must be integers, got {e!r}")

    @classmethod
    def from_rows(cls, rows) -> "IntMatrix":
        rows = [list(r) for r in rows]
        if not rows or not rows[0]:
            raise ValidationError("matrix must have at least one row and one column")
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ValidationError("all rows must have equal length")
        flat = tuple(int(v) for row in rows for v in row)
        return cls(rows=len(rows), cols=ncols, entries=flat)

    @classmethod
    def from_columns(cls, columns) -> "IntMatrix":
        columns = [tuple(c) for c in columns]
        if not columns:
            raise ValidationError("matrix must have at least one column")
        return cls.from_rows(
            [[c[i] for c in columns] for i in range(len(columns[0]))]
        )

    def entry(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> tuple[int, ...]:
        return self.entries[j :: self.cols]

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(self.cols)]

    def to_rows(self) -> list[list[int]]:
        """Fresh mutable row-of-lists copy."""
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix.from_rows(
            [[self.entry(i, j) for i in range(self.rows)] for j in range(self.cols)]
        )

    def with_extra_row(self, extra) -> "IntMatrix":
        extra = [int(v) for v in extra]
        if len(extra) != self.cols:
            raise ValidationError("extra row length must match column count")
        return IntMatrix(
            rows=self.rows + 1, cols=self.cols, entries=self.entries + tuple(extra)
        )


@dataclass(frozen=True)
class SmithForm:
    """Rank and elementary divisor chain d_1 | d_2 | ... | d_rank of a matrix."""

    rank: int
    divisors: tuple[int, ...]

    def __post_init__(self):
        if self.rank != len(self.divisors):
            raise ValidationError("rank must equal the number of divisors")
        for d in self.divisors:
            if d <= 0:
                raise ValidationError("elementary divisors must be positive")
        for a, b in zip(self.divisors, self.divisors[1:]):
            if b % a:
                raise ValidationError(f"divisor chain broken: {a} does not divide {b}")

    @property
    def largest(self) -> int:
        """Last (largest) divisor, or 1 for the zero matrix."""
        return self.divisors[-1] if self.divisors else 1


def _smith_divisors(mat: list[list[int]]) -> list[int]:
    """Divisor chain of an integer matrix given as a list of row lists.

    Classic pivoting with Euclidean gcd reduction.  ``mat`` is consumed.
    """
    nrows = len(mat)
    ncols = len(mat[0])
    divisors: list[int] = []
    t = 0
    while t < nrows and t < ncols:
        # pivot of smallest absolute value in the trailing submatrix
        pi = pj = -1
        best = 0
        for i in range(t, nrows):
            row = mat[i]
            for j in range(t, ncols):
                v = row[j]
                if v:
                    if v < 0:
                        v = -v
                    if best == 0 or v < best:
                        best = v
                        pi, pj = i, j
        if best == 0:
            break
        if pi != t:
            mat[t], mat[pi] = mat[pi], mat[t]
        if pj != t:
            for row in mat:
                row[t], row[pj] = row[pj], row[t]
        if mat[t][t] < 0:
            mat[t] = [-v for v in mat[t]]

        while True:
            dirty = False
            # clear the column below the pivot
            for i in range(t + 1, nrows):
                if mat[i][t]:
                    piv = mat[t][t]
                    q = mat[i][t] // piv
                    if q:
                        rt = mat[t]
                        mat[i] = [a - q * b for a, b in zip(mat[i], rt)]
                    if mat[i][t]:
                        # remainder in (0, piv): becomes the new, smaller pivot
                        mat[t], mat[i] = mat[i], mat[t]
                        dirty = True
            # clear the row right of the pivot
            for j in range(t + 1, ncols):
                if mat[t][j]:
                    piv = mat[t][t]
                    q = mat[t][j] // piv
                    if q:
                        for row in mat:
                            row[j] -= q * row[t]
                    if mat[t][j]:
                        for row in mat:
                            row[t], row[j] = row[j], row[t]
                        dirty = True
            if dirty:
                continue
            # row and column are clear; enforce divisibility of the rest
            piv = mat[t][t]
            offender = -1
            for i in range(t + 1, nrows):
                ri = mat[i]
                for j in range(t + 1, ncols):
                    if ri[j] % piv:
                        offender = i
                        break
                if offender >= 0:
                    break
            if offender < 0:
                break
            # fold the offending row into the pivot row and reduce again;
            # the pivot strictly shrinks toward the gcd, so this terminates
            mat[t] = [a + b for a, b in zip(mat[t], mat[offender])]

        divisors.append(mat[t][t])
        t += 1
    return divisors


def smith_normal_form(matrix: IntMatrix) -> SmithForm:
    """Smith normal form data of ``matrix``: rank and divisor chain.

    The result is independent of row/column order; transform matrices are
    not exposed.
    """
    divisors = _smith_divisors(matrix.to_rows())
    return SmithForm(rank=len(divisors), divisors=tuple(divisors))


def integer_rank(matrix: IntMatrix) -> int:
    """Rank of ``matrix`` over the rationals."""
    return len(_smith_divisors(matrix.to_rows()))
