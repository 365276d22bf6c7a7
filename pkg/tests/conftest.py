"""Shared independent oracles for the test suite.

These helpers deliberately avoid the library's Smith-form and enumeration
code: determinants come from cofactor expansion, divisor chains from gcds of
full minor sets, and subset quantities from complete enumeration.  They are
slow and only used on small inputs.
"""

from itertools import combinations
from math import gcd


def det(rows) -> int:
    """Exact determinant by cofactor expansion along the first row."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        if rows[0][j]:
            sub = [r[:j] + r[j + 1 :] for r in rows[1:]]
            term = rows[0][j] * det(sub)
            total += term if j % 2 == 0 else -term
    return total


def minors_gcd(rows, k: int) -> int:
    """gcd of the absolute values of all k x k minors (0 if all vanish)."""
    nr, nc = len(rows), len(rows[0])
    g = 0
    for ridx in combinations(range(nr), k):
        for cidx in combinations(range(nc), k):
            sub = [[rows[i][j] for j in cidx] for i in ridx]
            g = gcd(g, det(sub))
    return g


def brute_rank(rows) -> int:
    """Largest k with a nonzero k x k minor."""
    top = min(len(rows), len(rows[0]))
    rank = 0
    for k in range(1, top + 1):
        if minors_gcd(rows, k):
            rank = k
        else:
            break
    return rank


def divisors_via_minors(rows) -> list[int]:
    """Elementary divisor chain from gcds of minors: e_k = d_k / d_{k-1}."""
    rank = brute_rank(rows)
    chain = []
    prev = 1
    for k in range(1, rank + 1):
        dk = minors_gcd(rows, k)
        chain.append(dk // prev)
        prev = dk
    return chain


def _subset_rows(columns, idx):
    nrows = len(columns[0])
    return [[columns[j][i] for j in idx] for i in range(nrows)]


def oracle_lcm_period(columns) -> int:
    """lcm of the largest divisor over every nonempty column subset."""
    acc = 1
    for size in range(1, len(columns) + 1):
        for idx in combinations(range(len(columns)), size):
            chain = divisors_via_minors(_subset_rows(columns, idx))
            if chain:
                top = chain[-1]
                acc = acc // gcd(acc, top) * top
    return acc


def oracle_q_zero(ccolumns, offsets) -> int:
    """Max largest divisor of stacked subsets with a rank jump, 0 if none."""
    best = 0
    n = len(ccolumns)
    stacked = [tuple(c) + (b,) for c, b in zip(ccolumns, offsets)]
    for size in range(1, n + 1):
        for idx in combinations(range(n), size):
            crows = _subset_rows(ccolumns, idx)
            arows = _subset_rows(stacked, idx)
            if brute_rank(arows) == brute_rank(crows) + 1:
                chain = divisors_via_minors(arows)
                if chain and chain[-1] > best:
                    best = chain[-1]
    return best
