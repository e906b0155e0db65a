"""Lie algebra homomorphisms R^2 -> n as derivative matrices.

A homomorphism h is recorded by its two columns of partial derivatives
(d/dp h, d/dq h), each a Lie algebra element.  The homomorphism descends to a
closed torus in the quotient manifold when the first three rows are integers
and the fourth row closes up to the half-integer correction coming from the
exponential map; commutativity of the source forces the top 2x2 block to be
singular.

The torus's degree-two homology class is read off from the 2x2 minors of the
derivative matrix.  Right multiplication by SL(2,Z) reparametrises the torus
without moving the class, and every orbit with nonzero first invariant has a
unique fully reduced representative

    dp h1 = dp h2 = 0,  dp h3 > 0,  0 <= dq h3 < dp h3.

This module enumerates those representatives, class by class.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, NamedTuple, Tuple

from .nilalg import (
    S1,
    S1_INV,
    S2,
    S2_INV,
    HomologyClass,
    LieAlgElem,
    h2_pushforward,
)

__all__ = [
    "HomDerivs",
    "Sl2zMatrix",
    "validate",
    "homology_class",
    "plucker_holds",
    "sl2z_act",
    "fully_reduce",
    "ReducedTorus",
    "enumerate_fully_reduced",
    "sum_representative",
    "normalize_class",
]

Sl2zMatrix = Tuple[Tuple[int, int], Tuple[int, int]]

IDENTITY_2X2: Sl2zMatrix = ((1, 0), (0, 1))


@dataclass(frozen=True)
class HomDerivs:
    """Derivative matrix of a homomorphism: columns dp = d/dp h, dq = d/dq h."""

    dp: LieAlgElem
    dq: LieAlgElem

    @classmethod
    def from_rows(cls, rows) -> "HomDerivs":
        """Build from four (dp h_i, dq h_i) rows."""
        if len(rows) != 4 or any(len(r) != 2 for r in rows):
            raise ValueError("expected four rows of two entries")
        dp = LieAlgElem(rows[0][0], rows[1][0], rows[2][0], rows[3][0])
        dq = LieAlgElem(rows[0][1], rows[1][1], rows[2][1], rows[3][1])
        return cls(dp, dq)

    def rows(self) -> Tuple[Tuple[Fraction, Fraction], ...]:
        p, q = self.dp.coords(), self.dq.coords()
        return tuple(zip(p, q))

    def is_reduced(self) -> bool:
        return self.dp.c1 == 0 and self.dp.c2 == 0


def _is_int(v: Fraction) -> bool:
    return v.denominator == 1


def validate(h: HomDerivs) -> bool:
    """True iff h is a homomorphism whose exponential closes up in the lattice.

    Checks the commutativity constraint dp_h1 dq_h2 = dq_h1 dp_h2 and the
    integrality of dp h_i, dq h_i for i = 1, 2, 3 together with
    dp h4 + dp h1 dp h2 / 2 and dq h4 + dq h1 dq h2 / 2.
    """
    dp, dq = h.dp, h.dq
    if dp.c1 * dq.c2 - dq.c1 * dp.c2 != 0:
        return False
    for col in (dp, dq):
        if not (_is_int(col.c1) and _is_int(col.c2) and _is_int(col.c3)):
            return False
    if not _is_int(dp.c4 + dp.c1 * dp.c2 / 2):
        return False
    if not _is_int(dq.c4 + dq.c1 * dq.c2 / 2):
        return False
    return True


def homology_class(h: HomDerivs) -> HomologyClass:
    """Degree-two class of the torus: A_ij = dp h_i dq h_j - dq h_i dp h_j."""
    if not validate(h):
        raise ValueError("not a lattice-compatible homomorphism")
    dp, dq = h.dp, h.dq
    a13 = dp.c1 * dq.c3 - dq.c1 * dp.c3
    a23 = dp.c2 * dq.c3 - dq.c2 * dp.c3
    a14 = dp.c1 * dq.c4 - dq.c1 * dp.c4
    a24 = dp.c2 * dq.c4 - dq.c2 * dp.c4
    return HomologyClass(a13, a23, a14, a24)


def plucker_holds(A: HomologyClass) -> bool:
    """Necessary condition a13 a24 = a14 a23 for A to carry a torus."""
    return A.a13 * A.a24 == A.a14 * A.a23


def sl2z_act(h: HomDerivs, phi: Sl2zMatrix) -> HomDerivs:
    """Right multiplication of the derivative matrix by phi in SL(2,Z)."""
    (a, b), (c, d) = phi
    for entry in (a, b, c, d):
        if not isinstance(entry, int):
            raise ValueError("phi must have integer entries")
    if a * d - b * c != 1:
        raise ValueError("phi must have determinant 1")
    dp = h.dp.scale(a) + h.dq.scale(c)
    dq = h.dp.scale(b) + h.dq.scale(d)
    return HomDerivs(dp, dq)


def _mat_mul(m: Sl2zMatrix, s: Sl2zMatrix) -> Sl2zMatrix:
    return (
        (m[0][0] * s[0][0] + m[0][1] * s[1][0],
         m[0][0] * s[0][1] + m[0][1] * s[1][1]),
        (m[1][0] * s[0][0] + m[1][1] * s[1][0],
         m[1][0] * s[0][1] + m[1][1] * s[1][1]),
    )


def _xgcd(a: int, b: int) -> Tuple[int, int, int]:
    """(g, s, t) with a s + b t = g = gcd(a, b) >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        quot = old_r // r
        old_r, r = r, old_r - quot * r
        old_s, s = s, old_s - quot * s
        old_t, t = t, old_t - quot * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def fully_reduce(h: HomDerivs) -> Tuple[Sl2zMatrix, HomDerivs]:
    """Canonical fully reduced representative of the reparametrisation orbit.

    Requires the class of h to have equal nonzero first two coordinates.
    Returns (phi, h') with h' = sl2z_act(h, phi), dp h1 = dp h2 = 0,
    dp h3 > 0 and 0 <= dq h3 < dp h3.
    """
    A = homology_class(h)
    if A.a13 != A.a23:
        raise ValueError("orbit is not in (m, m, n, n) position")
    if A.a13 == 0:
        raise ValueError("no fully reduced form when the first invariant "
                         "vanishes; only reduced forms exist")
    phi: Sl2zMatrix = IDENTITY_2X2
    cur = h
    if cur.dp.c1 != 0 or cur.dp.c2 != 0:
        # Clear the top block: the Euclidean step sends (dp h1, dq h1) to
        # (0, -gcd), and the proportional second row follows along.
        a, b = int(cur.dp.c1), int(cur.dq.c1)
        g, s, t = _xgcd(a, b)
        step = ((-b // g, -s), (a // g, -t))
        phi = _mat_mul(phi, step)
        cur = sl2z_act(cur, step)
    if cur.dp.c3 < 0:
        step = ((-1, 0), (0, -1))
        phi = _mat_mul(phi, step)
        cur = sl2z_act(cur, step)
    c = int(cur.dp.c3)
    shift = int(cur.dq.c3) // c
    if shift != 0:
        step = ((1, -shift), (0, 1))
        phi = _mat_mul(phi, step)
        cur = sl2z_act(cur, step)
    return phi, cur


class ReducedTorus(NamedTuple):
    """One fully reduced representative, tagged by its component labels."""

    d: int
    k: int
    ell: int
    hom: HomDerivs


def _normal_form(m: int, n: int, d: int, k: int, dq3: int) -> HomDerivs:
    sgn = 1 if m > 0 else -1
    span = abs(m) // d
    dp4, rem = divmod(-n, sgn * d)
    if rem != 0:
        raise ValueError(f"{d} does not divide {n}")
    dp = LieAlgElem(0, 0, span, dp4)
    dq = LieAlgElem(-sgn * d, -sgn * d, dq3, Fraction(2 * k - d, 2))
    return HomDerivs(dp, dq)


def enumerate_fully_reduced(m: int, n: int) -> List[ReducedTorus]:
    """All fully reduced homomorphisms for the class with invariants (m, n).

    For each positive divisor d of gcd(m, n) (with gcd(m, 0) = |m|), each
    l = 1..|m|/d and each k = 1..d, emits the representative with

        dq h1 = dq h2 = -sgn(m) d,   dp h3 = |m|/d,   dp h4 = -n / (sgn(m) d),
        dq h3 = l mod (|m|/d),       dq h4 = k - d/2.

    The list has length |m| sigma_0(gcd(m, n)), in lexicographic (d, l, k)
    order, and no two entries define the same torus.
    """
    if m == 0:
        raise ValueError("m must be nonzero")
    from .arith import divisors

    g = math.gcd(m, n)
    out: List[ReducedTorus] = []
    for d in divisors(g):
        span = abs(m) // d
        for ell in range(1, span + 1):
            for k in range(1, d + 1):
                hom = _normal_form(m, n, d, k, ell % span)
                out.append(ReducedTorus(d, k, ell, hom))
    return out


def sum_representative(m: int, n: int, d: int, k: int, ell: int) -> HomDerivs:
    """Reduced representative with dq h3 equal to the raw summation index l.

    Differs from the fully reduced entry only when l = |m|/d, where the fully
    reduced coordinate wraps to 0.  The automorphism-order formula evaluated
    at the labels (d, k, l) is the lattice index of exactly this
    representative.
    """
    if m == 0:
        raise ValueError("m must be nonzero")
    g = math.gcd(m, n)
    if g % d != 0:
        raise ValueError(f"{d} does not divide gcd({m}, {n})")
    return _normal_form(m, n, d, k, ell)


def _pair_word_to_diag(v1: int, v2: int) -> Tuple[Tuple[str, ...], int]:
    """Word sending the column (v1, v2) to (g, g) with g = gcd >= 0."""
    word: List[str] = []
    while v2 != 0:
        q = v1 // v2
        if q > 0:
            word.extend([S2_INV] * q)
        elif q < 0:
            word.extend([S2] * (-q))
        v1 -= q * v2
        # (r, v2) -> (-v2, r)
        word.append(S1)
        v1, v2 = -v2, v1
    if v1 < 0:
        word.extend([S1, S1])
        v1 = -v1
    # (g, 0) -> (g, g) via the lower shear s1 . s2_inv . s1_inv.
    word.extend([S1, S2_INV, S1_INV])
    return tuple(word), v1


def normalize_class(A: HomologyClass) -> Tuple[Tuple[str, ...], HomologyClass]:
    """Move a torus-representable class to the diagonal shape [m, m, n, n].

    Returns (word, A') with A' = h2_pushforward(word, A), A'13 = A'23 =
    gcd(A13, A23) >= 0 and A'14 = A'24.  The word is built from the
    generator automorphisms by the Euclidean algorithm.  Classes violating
    the minor identity a13 a24 = a14 a23 are rejected.
    """
    if not plucker_holds(A):
        raise ValueError("class not representable by tori (Plücker)")
    if A.is_zero():
        return (), A
    already_diagonal = A.a13 == A.a23 and A.a14 == A.a24
    if already_diagonal and (A.a13 > 0 or (A.a13 == 0 and A.a14 >= 0)):
        return (), A
    if (A.a13, A.a23) != (0, 0):
        word, _ = _pair_word_to_diag(A.a13, A.a23)
    else:
        word, _ = _pair_word_to_diag(A.a14, A.a24)
    out = h2_pushforward(word, A)
    if out.a13 != out.a23 or out.a14 != out.a24:
        raise AssertionError(f"normalization failed: {A} -> {out}")
    return word, out
