"""Exact 2x2 matrix arithmetic over the rationals, up to positive scaling.

Everything in this module is integer/Fraction arithmetic; there is no
floating point anywhere.  A ``ProjectiveMatrix`` is a nonzero rational 2x2
matrix with positive determinant, considered up to scaling by nonzero
rationals.  It is stored as its unique primitive integral representative
(content 1, first nonzero entry positive), which makes equality and hashing
structural.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable

Rational = Fraction

_ZERO_MSG = "zero matrix has no primitive representative"


def _as_fraction_entries(entries: Iterable) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    a, b, c, d = (Fraction(x) for x in entries)
    return a, b, c, d


def primitive_rep(entries: Iterable) -> tuple[int, int, int, int]:
    """Scale a nonzero rational 2x2 matrix to its primitive integral form.

    Returns the unique positive-rational multiple of the input that is
    integral with content 1 (gcd of absolute entries equal to 1).  This is
    total on nonzero matrices, including those with zero entries.
    """
    a, b, c, d = _as_fraction_entries(entries)
    if a == b == c == d == 0:
        raise ValueError(_ZERO_MSG)
    lcm = 1
    for x in (a, b, c, d):
        q = x.denominator
        lcm = lcm // gcd(lcm, q) * q
    ia, ib, ic,id_ = (int(x * lcm) for x in (a, b, c, d))
    content = gcd(gcd(abs(ia), abs(ib)), gcd(abs(ic), abs(id_)))
    return (ia // content, ib // content, ic // content, id_ // content)


@dataclass(frozen=True)
class ProjectiveMatrix:
    """A rational 2x2 matrix with positive determinant, up to scaling.

    The stored tuple ``(a, b, c, d)`` is the primitive integral
    representative, sign-fixed so that the first nonzero entry in reading
    order is positive.  ``pdet`` (the determinant of this representative)
    is then a positive integer, invariant under rational scaling of the
    input.
    """

    a: int
    b: int
    c: int
    d: int

    @classmethod
    def from_entries(cls, a, b, c, d) -> "ProjectiveMatrix":
        ia, ib, ic, id_ = primitive_rep((a, b, c, d))
        for x in (ia, ib, ic, id_):
            if x != 0:
                if x < 0:
                    ia, ib, ic, id_ = -ia, -ib, -ic, -id_
                break
        m = cls(ia, ib, ic, id_)
        if m.pdet() <= 0:
            raise ValueError("matrix does not have positive determinant: %r" % ((a, b, c, d),))
        return m

    @classmethod
    def from_rows(cls, rows) -> "ProjectiveMatrix":
        (a, b), (c, d) = rows
        return cls.from_entries(a, b, c, d)

    def entries(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def pdet(self) -> int:
        """The rational projective determinant (a positive integer)."""
        return self.a * self.d - self.b * self.c

    def __mul__(self, other: "ProjectiveMatrix") -> "ProjectiveMatrix":
        a, b, c, d = self.entries()
        e, f, g, h = other.entries()
        return ProjectiveMatrix.from_entries(
            a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h
        )

    def inv(self) -> "ProjectiveMatrix":
        # adjugate; projectively this is the inverse since det > 0
        a, b, c, d = self.entries()
        return ProjectiveMatrix.from_entries(d, -b, -c, a)

    def is_identity(self) -> bool:
        return (self.a, self.b, self.c, self.d) == (1, 0, 0, 1)

    def __str__(self) -> str:
        return "[[%d,%d],[%d,%d]]" % self.entries()


def pdet(m) -> int:
    """Projective determinant of a matrix given in any accepted form."""
    if not isinstance(m, ProjectiveMatrix):
        m = ProjectiveMatrix.from_entries(*_as_fraction_entries(m))
    return m.pdet()


# Standard elements ----------------------------------------------------------

IDENTITY = ProjectiveMatrix.from_entries(1, 0, 0, 1)
S = ProjectiveMatrix.from_entries(0, -1, 1, 0)
T = ProjectiveMatrix.from_entries(1, 1, 0, 1)


def translation(amount) -> ProjectiveMatrix:
    """Upper-triangular unipotent [[1, A], [0, 1]] for rational A."""
    return ProjectiveMatrix.from_entries(1, Fraction(amount), 0, 1)


def lower_translation(amount) -> ProjectiveMatrix:
    """Lower-triangular unipotent [[1, 0], [n, 1]]."""
    return ProjectiveMatrix.from_entries(1, 0, Fraction(amount), 1)


def dilation(m) -> ProjectiveMatrix:
    """Diagonal [[M, 0], [0, 1]] for a positive rational M."""
    m = Fraction(m)
    if m <= 0:
        raise ValueError("dilation requires a positive rational, got %s" % m)
    return ProjectiveMatrix.from_entries(m, 0, 0, 1)


# Text serialization ---------------------------------------------------------


def format_matrix(m: ProjectiveMatrix) -> str:
    return str(m)


def parse_rational(token: str) -> Fraction:
    try:
        return Fraction(token.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError("bad rational literal %r" % token) from exc


def parse_matrix(text: str) -> ProjectiveMatrix:
    """Parse ``[[a,b],[c,d]]`` with entries written as ``p/q`` or integers."""
    s = text.strip().replace(" ", "")
    if not (s.startswith("[[") and s.endswith("]]")):
        raise ValueError("bad matrix literal %r" % text)
    body = s[2:-2]
    rows = body.split("],[")
    if len(rows) != 2:
        raise ValueError("bad matrix literal %r" % text)
    entries = []
    for row in rows:
        parts = row.split(",")
        if len(parts) != 2:
            raise ValueError("bad matrix literal %r" % text)
        entries.extend(parse_rational(p) for p in parts)
    return ProjectiveMatrix.from_entries(*entries)
