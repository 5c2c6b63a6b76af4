"""Canonical names for projective lattices and the coset reduction calculus.

A projective lattice commensurable with the distinguished one corresponds to
a unique upper-triangular coset representative [[M, b], [0, 1]] with M a
positive rational and b a rational in [0, 1); the pair (M, b) is the
lattice's name.  This module implements the reduction of an arbitrary
positive-determinant rational matrix to its name, the right group action on
names, hyperdistance, and the dual (reverse) naming by lower-triangular
representatives.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .exact import ProjectiveMatrix


@dataclass(frozen=True, order=True)
class LatticeName:
    """The canonical pair (M, b): M > 0 rational, 0 <= b < 1 rational."""

    m: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "m", Fraction(self.m))
        object.__setattr__(self, "b", Fraction(self.b))
        if self.m <= 0:
            raise ValueError("lattice name needs M > 0, got %s" % self.m)
        if not (0 <= self.b < 1):
            raise ValueError("lattice name needs 0 <= b < 1, got %s" % self.b)

    def matrix(self) -> ProjectiveMatrix:
        return ProjectiveMatrix.from_entries(self.m, self.b, 0, 1)

    def __str__(self) -> str:
        return "%s,%s" % (self.m, self.b)

    @classmethod
    def parse(cls, text: str) -> "LatticeName":
        parts = text.strip().split(",")
        if len(parts) != 2:
            raise ValueError("bad lattice name %r (expected M,b)" % text)
        return cls(Fraction(parts[0]), Fraction(parts[1]))


@dataclass(frozen=True, order=True)
class ReverseName:
    """The dual pair (b, M), naming by lower-triangular [[1, 0], [b, M]]."""

    b: Fraction
    m: Fraction

    def __post_init__(self):
        object.__setattr__(self, "b", Fraction(self.b))
        object.__setattr__(self, "m", Fraction(self.m))
        if self.m <= 0:
            raise ValueError("reverse name needs M > 0, got %s" % self.m)
        if not (0 <= self.b < 1):
            raise ValueError("reverse name needs 0 <= b < 1, got %s" % self.b)

    def matrix(self) -> ProjectiveMatrix:
        return ProjectiveMatrix.from_entries(1, 0, self.b, self.m)


L1 = LatticeName(Fraction(1), Fraction(0))


def lattice(m, b=0) -> LatticeName:
    return LatticeName(Fraction(m), Fraction(b))


def reduce_matrix(g: ProjectiveMatrix) -> LatticeName:
    """Reduce a coset of the modular group to its canonical name.

    Kills the lower-left entry with a determinant-one integral row
    operation built from an extended gcd, scales the result to make the
    lower-right entry one, and translates the upper-right entry into
    [0, 1).
    """
    a, b, c, d = g.entries()
    if c != 0:
        # (s, t) coprime with s*a + t*c == 0; complete to det-1 [[m,n],[s,t]]
        g0 = gcd(abs(a), abs(c))
        s, t = -c // g0, a // g0
        m, n = _bezout(t, -s)
        a, b, c, d = m * a + n * c, m * b + n * d, 0, s * b + t * d
    mm = Fraction(a, d)
    bb = Fraction(b, d)
    return LatticeName(mm, bb - bb.__floor__())


def _bezout(x: int, y: int) -> tuple[int, int]:
    """Integers (m, n) with m*x + n*y == gcd == 1; x, y assumed coprime."""
    old_r, r = x, y
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r == -1:
        old_s, old_t = -old_s, -old_t
    elif old_r != 1:
        raise ValueError("arguments %d, %d are not coprime" % (x, y))
    return old_s, old_t


def act(name: LatticeName, g: ProjectiveMatrix) -> LatticeName:
    """Right action of PGL2+(Q) on lattice names."""
    return reduce_matrix(name.matrix() * g)


def hyperdistance(x: LatticeName, y: LatticeName) -> int:
    """Projective determinant of the transition matrix between two names."""
    return (y.matrix() * x.matrix().inv()).pdet()


def reverse_name(name: LatticeName) -> ReverseName:
    """The lower-triangular name of the same projective lattice.

    (M, 0) maps to (0, 1/M); (M, f/g) in lowest terms maps to
    (f'/g, 1/(g^2 M)) where f f' == 1 (mod g) and 0 < f' < g.
    """
    if name.b == 0:
        return ReverseName(Fraction(0), 1 / name.m)
    f, g = name.b.numerator, name.b.denominator
    fp = pow(f, -1, g)
    return ReverseName(Fraction(fp, g), 1 / (g * g * name.m))


def name_of(rev: ReverseName) -> LatticeName:
    """Inverse of :func:`reverse_name`."""
    if rev.b == 0:
        return LatticeName(1 / rev.m, Fraction(0))
    fp, g = rev.b.numerator, rev.b.denominator
    f = pow(fp, -1, g)
    return LatticeName(1 / (g * g * rev.m), Fraction(f, g))
