"""Exact arithmetic in the nilpotent Lie group behind the Kodaira-Thurston manifold.

The group N consists of real matrices

    [1 x z 0]
    [0 1 y 0]
    [0 0 1 0]      with t > 0,
    [0 0 0 t]

and the lattice Gamma is the subgroup with integer entries; the compact
quotient of N by Gamma is the Kodaira-Thurston manifold.  Group elements are
stored in coordinates (x, y, z, log t) and Lie algebra elements in the basis

    n1 = d/dy,   n2 = d/dx,   n3 = d/dt,   n4 = d/dz,

always with rational coordinates, so lattice membership and all algebraic
identities are decided exactly.  The group is two-step nilpotent: the only
nonzero bracket points along n4, and exp(X)exp(Y) = exp(X + Y + [X,Y]/2).

The module also hosts the two homology coefficient vectors that the lattice
automorphisms act on: degree-two classes as integer 4-vectors in the basis
E13, E23, E14, E24, and degree-three classes as rational coefficients of
E134, E234, E124.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple, Union

Rat = Union[int, Fraction]

__all__ = [
    "LieAlgElem",
    "GroupElem",
    "HomologyClass",
    "H3Class",
    "N1",
    "N2",
    "N3",
    "N4",
    "ZERO",
    "IDENTITY",
    "S1",
    "S2",
    "S1_INV",
    "S2_INV",
    "GENERATORS",
    "AutWord",
    "bracket",
    "group_mul",
    "group_inv",
    "exp",
    "log",
    "bch_mul",
    "in_lattice",
    "aut_apply",
    "invert_word",
    "word_matrix",
    "h2_pushforward",
    "h3_pushforward",
]


def _frac(value: Rat) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected int or Fraction, got {type(value).__name__}")


@dataclass(frozen=True)
class LieAlgElem:
    """Lie algebra element c1*n1 + c2*n2 + c3*n3 + c4*n4."""

    c1: Fraction
    c2: Fraction
    c3: Fraction
    c4: Fraction

    def __post_init__(self) -> None:
        for name in ("c1", "c2", "c3", "c4"):
            object.__setattr__(self, name, _frac(getattr(self, name)))

    def coords(self) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.c1, self.c2, self.c3, self.c4)

    def is_zero(self) -> bool:
        return not any(self.coords())

    def __add__(self, other: "LieAlgElem") -> "LieAlgElem":
        return LieAlgElem(self.c1 + other.c1, self.c2 + other.c2,
                          self.c3 + other.c3, self.c4 + other.c4)

    def __sub__(self, other: "LieAlgElem") -> "LieAlgElem":
        return LieAlgElem(self.c1 - other.c1, self.c2 - other.c2,
                          self.c3 - other.c3, self.c4 - other.c4)

    def __neg__(self) -> "LieAlgElem":
        return LieAlgElem(-self.c1, -self.c2, -self.c3, -self.c4)

    def scale(self, r: Rat) -> "LieAlgElem":
        r = _frac(r)
        return LieAlgElem(r * self.c1, r * self.c2, r * self.c3, r * self.c4)

    def __rmul__(self, r: Rat) -> "LieAlgElem":
        return self.scale(r)


ZERO = LieAlgElem(0, 0, 0, 0)
N1 = LieAlgElem(1, 0, 0, 0)
N2 = LieAlgElem(0, 1, 0, 0)
N3 = LieAlgElem(0, 0, 1, 0)
N4 = LieAlgElem(0, 0, 0, 1)


@dataclass(frozen=True)
class GroupElem:
    """Group element with matrix entries x, y, z and logarithmic t-coordinate."""

    x: Fraction
    y: Fraction
    z: Fraction
    logt: Fraction

    def __post_init__(self) -> None:
        for name in ("x", "y", "z", "logt"):
            object.__setattr__(self, name, _frac(getattr(self, name)))

    def coords(self) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.x, self.y, self.z, self.logt)


IDENTITY = GroupElem(0, 0, 0, 0)


def bracket(X: LieAlgElem, Y: LieAlgElem) -> LieAlgElem:
    """Lie bracket [X, Y]; lands in the n4 direction."""
    return LieAlgElem(0, 0, 0, X.c2 * Y.c1 - Y.c2 * X.c1)


def group_mul(a: GroupElem, b: GroupElem) -> GroupElem:
    """Product in N: (x,y,z,s)(x',y',z',s') = (x+x', y+y', z+z'+x y', s+s')."""
    return GroupElem(a.x + b.x, a.y + b.y, a.z + b.z + a.x * b.y,
                     a.logt + b.logt)


def group_inv(a: GroupElem) -> GroupElem:
    return GroupElem(-a.x, -a.y, -a.z + a.x * a.y, -a.logt)


def exp(X: LieAlgElem) -> GroupElem:
    """Exponential map; the (1,3) matrix entry picks up the x*y/2 correction."""
    return GroupElem(X.c2, X.c1, X.c4 + X.c1 * X.c2 / 2, X.c3)


def log(g: GroupElem) -> LieAlgElem:
    """Inverse of exp, exact on rational coordinates."""
    return LieAlgElem(g.y, g.x, g.logt, g.z - g.x * g.y / 2)


def bch_mul(X: LieAlgElem, Y: LieAlgElem) -> LieAlgElem:
    """X + Y + [X,Y]/2, the full Baker-Campbell-Hausdorff series here."""
    return X + Y + bracket(X, Y).scale(Fraction(1, 2))


def in_lattice(g: GroupElem) -> bool:
    """True iff g lies in Gamma, i.e. x, y, z, log t are all integers."""
    return all(v.denominator == 1 for v in g.coords())


# ---------------------------------------------------------------------------
# Lattice automorphisms
#
# Two automorphisms of Gamma (extended to N) generate an SL(2,Z) worth of
# symmetries covering the standard action on the (x, y) plane:
#
#   phi1: (x, y, z, t) -> (-y, x, z - x y, t)        covers s1 = [[0,-1],[1,0]]
#   phi2: (x, y, z, t) -> (x + y, y, z + y(y+1)/2, t) covers s2 = [[1,1],[0,1]]
# ---------------------------------------------------------------------------

S1 = "s1"
S2 = "s2"
S1_INV = "s1_inv"
S2_INV = "s2_inv"
GENERATORS = (S1, S2, S1_INV, S2_INV)

AutWord = Sequence[str]

_INVERSE_TOKEN = {S1: S1_INV, S1_INV: S1, S2: S2_INV, S2_INV: S2}

_SIGMA = {
    S1: ((0, -1), (1, 0)),
    S1_INV: ((0, 1), (-1, 0)),
    S2: ((1, 1), (0, 1)),
    S2_INV: ((1, -1), (0, 1)),
}


def _check_token(token: str) -> None:
    if token not in _SIGMA:
        raise ValueError(f"unknown automorphism generator {token!r}")


def _apply_generator(token: str, g: GroupElem) -> GroupElem:
    if token == S1:
        return GroupElem(-g.y, g.x, g.z - g.x * g.y, g.logt)
    if token == S1_INV:
        return GroupElem(g.y, -g.x, g.z - g.x * g.y, g.logt)
    if token == S2:
        return GroupElem(g.x + g.y, g.y, g.z + g.y * (g.y + 1) / 2, g.logt)
    if token == S2_INV:
        return GroupElem(g.x - g.y, g.y, g.z - g.y * (g.y + 1) / 2, g.logt)
    raise ValueError(f"unknown automorphism generator {token!r}")


def aut_apply(word: AutWord, g: GroupElem) -> GroupElem:
    """Apply a word of generator automorphisms to g, leftmost letter first."""
    for token in word:
        g = _apply_generator(token, g)
    return g


def invert_word(word: AutWord) -> Tuple[str, ...]:
    for token in word:
        _check_token(token)
    return tuple(_INVERSE_TOKEN[token] for token in reversed(word))


def _sigma_apply(token: str, v: Tuple[int, int]) -> Tuple[int, int]:
    (a, b), (c, d) = _SIGMA[token]
    return (a * v[0] + b * v[1], c * v[0] + d * v[1])


def word_matrix(word: AutWord) -> Tuple[Tuple[int, int], Tuple[int, int]]:
    """2x2 matrix M with M v = (word applied leftmost-first) v."""
    m = ((1, 0), (0, 1))
    for token in word:
        _check_token(token)
        s = _SIGMA[token]
        m = (
            (s[0][0] * m[0][0] + s[0][1] * m[1][0],
             s[0][0] * m[0][1] + s[0][1] * m[1][1]),
            (s[1][0] * m[0][0] + s[1][1] * m[1][0],
             s[1][0] * m[0][1] + s[1][1] * m[1][1]),
        )
    return m


# ---------------------------------------------------------------------------
# Homology coefficient vectors
# ---------------------------------------------------------------------------


def _int(value) -> int:
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction) and value.denominator == 1:
        return int(value)
    raise TypeError(f"expected an integer, got {value!r}")


@dataclass(frozen=True)
class HomologyClass:
    """Degree-two class a13*E13 + a23*E23 + a14*E14 + a24*E24."""

    a13: int
    a23: int
    a14: int
    a24: int

    def __post_init__(self) -> None:
        for name in ("a13", "a23", "a14", "a24"):
            object.__setattr__(self, name, _int(getattr(self, name)))

    def coords(self) -> Tuple[int, int, int, int]:
        return (self.a13, self.a23, self.a14, self.a24)

    def is_zero(self) -> bool:
        return not any(self.coords())


@dataclass(frozen=True)
class H3Class:
    """Degree-three class with coefficients along E134, E234, E124."""

    e134: Fraction
    e234: Fraction
    e124: Fraction

    def __post_init__(self) -> None:
        for name in ("e134", "e234", "e124"):
            object.__setattr__(self, name, _frac(getattr(self, name)))

    def coords(self) -> Tuple[Fraction, Fraction, Fraction]:
        return (self.e134, self.e234, self.e124)

    def is_zero(self) -> bool:
        return not any(self.coords())

    def is_integral(self) -> bool:
        return all(v.denominator == 1 for v in self.coords())

    def __add__(self, other: "H3Class") -> "H3Class":
        return H3Class(self.e134 + other.e134, self.e234 + other.e234,
                       self.e124 + other.e124)

    def scale(self, r: Rat) -> "H3Class":
        r = _frac(r)
        return H3Class(r * self.e134, r * self.e234, r * self.e124)


H3_ZERO = H3Class(0, 0, 0)


def h2_pushforward(word: AutWord, A: HomologyClass) -> HomologyClass:
    """Push a degree-two class along a word of lattice automorphisms.

    Each generator acts simultaneously on the column pairs (a13, a23) and
    (a14, a24) through its 2x2 matrix.
    """
    u = (A.a13, A.a23)
    v = (A.a14, A.a24)
    for token in word:
        _check_token(token)
        u = _sigma_apply(token, u)
        v = _sigma_apply(token, v)
    return HomologyClass(u[0], u[1], v[0], v[1])


def h3_pushforward(word: AutWord, C: H3Class) -> H3Class:
    """Push a degree-three class with no E124 part along an automorphism word."""
    if C.e124 != 0:
        raise ValueError("pushforward is only defined for classes with zero "
                         "E124 component")
    u = (C.e134, C.e234)
    for token in word:
        _check_token(token)
        (a, b), (c, d) = _SIGMA[token]
        u = (a * u[0] + b * u[1], c * u[0] + d * u[1])
    return H3Class(u[0], u[1], 0)
