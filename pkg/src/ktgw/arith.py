"""Divisor sums and the exact gcd identities behind the torus counts.

Everything here is pure integer or rational arithmetic.  The two headline
items are the Hermite-form count of finite-index sublattices of Z^2 (which
recovers sigma_1) and the triple divisor sum of reciprocal automorphism
orders together with its closed form |m| sigma_2(gcd(m,n)) / gcd(m,n)^2.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterator, List, NamedTuple, Sequence, Tuple

__all__ = [
    "divisors",
    "sigma",
    "hnf_matrices",
    "count_sublattices_hnf",
    "class_divisibility",
    "aut_weight_sum",
    "aut_weight_sum_closed",
    "CesaroCheck",
    "cesaro_check",
]


@lru_cache(maxsize=None)
def divisors(n: int) -> Tuple[int, ...]:
    """All positive divisors of n in increasing order."""
    if n < 1:
        raise ValueError(f"divisors requires n >= 1, got {n}")
    small: List[int] = []
    large: List[int] = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return tuple(small + large[::-1])


def sigma(k: int, n: int) -> int:
    """Divisor power sum sigma_k(n) = sum of d**k over d | n, for k in {0,1,2}."""
    if k not in (0, 1, 2):
        raise ValueError(f"sigma supports k in {{0, 1, 2}}, got {k}")
    if n < 1:
        raise ValueError(f"sigma requires n >= 1, got {n}")
    return sum(d ** k for d in divisors(n))


def hnf_matrices(ell: int) -> Iterator[Tuple[Tuple[int, int], Tuple[int, int]]]:
    """Hermite-form matrices [[d, b], [0, ell/d]] with d | ell and 0 <= b < d.

    These are exactly the index-ell sublattices of Z^2 up to right
    unimodular reparametrisation.
    """
    if ell < 1:
        raise ValueError(f"sublattice index must be >= 1, got {ell}")
    for d in divisors(ell):
        q = ell // d
        for b in range(d):
            yield ((d, b), (0, q))


def count_sublattices_hnf(ell: int) -> int:
    """Number of index-ell sublattices of Z^2; equals sigma(1, ell)."""
    return sum(1 for _ in hnf_matrices(ell))


def class_divisibility(rows: Sequence[Sequence[int]]) -> int:
    """Divisibility of the class of a homomorphism Z^2 -> Z^(2n).

    `rows` is the matrix of the homomorphism, one (p, q)-derivative pair per
    row.  Returns the gcd of all 2x2 minors, or 0 if every minor vanishes.
    """
    if len(rows) < 2:
        raise ValueError("need at least two rows")
    mat = [tuple(row) for row in rows]
    if any(len(row) != 2 for row in mat):
        raise ValueError("rows must have exactly two entries")
    g = 0
    for i in range(len(mat)):
        for j in range(i + 1, len(mat)):
            minor = mat[i][0] * mat[j][1] - mat[i][1] * mat[j][0]
            g = math.gcd(g, minor)
    return g


def aut_weight_sum(m: int, n: int) -> Fraction:
    """Total reciprocal automorphism weight of the genus-one components.

    Evaluates, exactly,

        sum over d | gcd(m, n), k = 1..d, l = 1..|m|/d of
            1 / gcd(gcd(m, n), (m k + n l) / d)

    with the conventions gcd(x, 0) = |x| and gcd of absolute values.  The
    summand is the reciprocal of the automorphism order of the torus
    component labelled (d, k, l) in the class with invariants (m, n).
    """
    if m == 0:
        raise ValueError("m must be nonzero")
    g = math.gcd(m, n)
    # Every gcd below divides g, so accumulate numerators over denominator g.
    acc = 0
    for d in divisors(g):
        md = m // d
        nd = n // d
        span = abs(m) // d
        for k in range(1, d + 1):
            val = md * k + nd
            for _ in range(span):
                acc += g // math.gcd(g, val)
                val += nd
    return Fraction(acc, g)


def aut_weight_sum_closed(m: int, n: int) -> Fraction:
    """Closed form |m| * sigma_2(gcd(m, n)) / gcd(m, n)^2 of aut_weight_sum."""
    if m == 0:
        raise ValueError("m must be nonzero")
    g = math.gcd(m, n)
    return Fraction(abs(m) * sigma(2, g), g * g)


class CesaroCheck(NamedTuple):
    lhs: int
    rhs: int
    equal: bool


def cesaro_check(f: Callable[[int], int], n: int) -> CesaroCheck:
    """Evaluate both sides of Cesaro's divisor identity for an arithmetic f.

    lhs = sum over d | n of sum_{i=1..d} f(gcd(i, d));
    rhs = sum over d | n of f(n / d) * d.
    """
    if n < 1:
        raise ValueError(f"cesaro_check requires n >= 1, got {n}")
    divs = divisors(n)
    lhs = 0
    for d in divs:
        lhs += sum(f(math.gcd(i, d)) for i in range(1, d + 1))
    rhs = sum(f(n // d) * d for d in divs)
    return CesaroCheck(lhs, rhs, lhs == rhs)
