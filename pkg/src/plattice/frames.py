"""Frame shapes, level-doubled groups, and eta-quotient principal moduli.

Each of the nine vertex groups doubles to another arithmetic group: the
core scales its level by two and every adjoined coset label doubles
exactly when doubling keeps it an exact divisor.  A catalog attaches to
each vertex a Frame shape (a formal product of integer parts encoding a
conjugacy class of the automorphism group of the Leech lattice); the
quotient of eta functions it determines is an exact integer Laurent
series with a simple pole in q, and a floating-point checker (the only
floating point in the package) verifies its invariance under the doubled
group numerically.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

from .diagram import NODE_GROUPS, envelope_level, scale_factor
from .exact import ProjectiveMatrix
from .groupsys import GroupDescriptor, group_generators

# group doubling ---------------------------------------------------------------


def double_coset_label(e: int, n: int) -> tuple[int, int]:
    """Where the label-e coset over level n goes when the level doubles.

    The label doubles exactly when 2e is still an exact divisor of 2n,
    which happens when n/e is odd; the trivial coset always stays trivial.
    """
    if n % e or math.gcd(e, n // e) != 1:
        raise ValueError("%d is not an exact divisor of %d" % (e, n))
    if e == 1:
        return (1, 2 * n)
    if (n // e) % 2:
        return (2 * e, 2 * n)
    return (e, 2 * n)


@lru_cache(maxsize=None)
def double_group(desc: GroupDescriptor) -> GroupDescriptor:
    """The level-doubled group attached to a vertex group."""
    if desc not in NODE_GROUPS:
        raise ValueError("%s is not one of the nine vertex groups" % desc.display)
    a = scale_factor(desc)
    n = envelope_level(desc)
    inner = n // (a * a)  # level over which the adjoined cosets live
    labels = frozenset(double_coset_label(e, inner)[0] for e in desc.plus)
    if a == 1:
        return GroupDescriptor(1, 2 * n, labels)
    return GroupDescriptor.kernel(a, 2 * n // a, labels)


# Frame shapes -----------------------------------------------------------------


@dataclass(frozen=True)
class FrameShape:
    """Formal product of integer parts with nonzero integer exponents."""

    parts: tuple[tuple[int, int], ...]

    def __post_init__(self):
        last = 0
        for a, alpha in self.parts:
            if a <= last or alpha == 0:
                raise ValueError("parts must have increasing bases and nonzero exponents")
            last = a

    @property
    def degree(self) -> int:
        return sum(a * alpha for a, alpha in self.parts)

    @property
    def max_part(self) -> int:
        return max(a for a, _ in self.parts)

    @property
    def predicted_valency(self) -> int:
        return sum(1 for _, alpha in self.parts if alpha < 0) + 1

    @property
    def display(self) -> str:
        num = " ".join("%d^%d" % (a, alpha) for a, alpha in self.parts if alpha > 0)
        den = " ".join("%d^%d" % (a, -alpha) for a, alpha in self.parts if alpha < 0)
        return "%s / %s" % (num, den) if den else num

    def __str__(self) -> str:
        return self.display

    @classmethod
    def parse(cls, text: str) -> "FrameShape":
        num, _, den = text.partition("/")

        def side(chunk, sign):
            out = {}
            for token in chunk.split():
                base, _, exp = token.partition("^")
                a = int(base)
                alpha = int(exp) if exp else 1
                out[a] = out.get(a, 0) + sign * alpha
            return out

        exps = side(num, 1)
        for a, alpha in side(den, 1).items():
            exps[a] = exps.get(a, 0) - alpha
        parts = tuple(sorted((a, alpha) for a, alpha in exps.items() if alpha))
        return cls(parts)


def frame_shape_invariants(fs: FrameShape) -> tuple[int, int, int]:
    return (fs.degree, fs.max_part, fs.predicted_valency)


FRAME_SHAPES: tuple[FrameShape, ...] = tuple(
    FrameShape.parse(text)
    for text in (
        "1^24",
        "2^24 / 1^24",
        "3^12 / 1^12",
        "4^8 / 1^8",
        "5^6 / 1^6",
        "2^6 6^6 / 1^6 3^6",
        "3^8",
        "4^12 / 2^12",
        "1^8 2^8",
    )
)

for _fs in FRAME_SHAPES:
    assert _fs.degree == 24, _fs

_SHAPE_BY_GROUP = dict(zip(NODE_GROUPS, FRAME_SHAPES))


def frame_shape(desc: GroupDescriptor) -> FrameShape:
    if desc not in _SHAPE_BY_GROUP:
        raise ValueError("%s is not one of the nine vertex groups" % desc.display)
    return _SHAPE_BY_GROUP[desc]


# exact Laurent series ---------------------------------------------------------


@dataclass(frozen=True)
class IntegerPowerSeries:
    """Laurent series with exact integer coefficients, truncated at ``order``.

    ``coeffs[i]`` is the coefficient of q**(leading + i); ``order`` is the
    largest exponent the series is valid to.
    """

    leading: int
    coeffs: tuple[int, ...]

    @property
    def order(self) -> int:
        return self.leading + len(self.coeffs) - 1

    def coefficient(self, exponent: int) -> int:
        i = exponent - self.leading
        if i < 0:
            return 0
        if i >= len(self.coeffs):
            raise ValueError("coefficient of q^%d is beyond the truncation" % exponent)
        return self.coeffs[i]

    def __mul__(self, other: "IntegerPowerSeries") -> "IntegerPowerSeries":
        length = min(len(self.coeffs), len(other.coeffs))
        out = [0] * length
        for i, a in enumerate(self.coeffs[:length]):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs[: length - i]):
                out[i + j] += a * b
        return IntegerPowerSeries(self.leading + other.leading, tuple(out))

    def inverse(self) -> "IntegerPowerSeries":
        lead = self.coeffs[0]
        if lead not in (1, -1):
            raise ValueError("only unit series invert exactly")
        n = len(self.coeffs)
        out = [0] * n
        out[0] = lead
        for k in range(1, n):
            acc = 0
            for i in range(1, k + 1):
                acc += self.coeffs[i] * out[k - i]
            out[k] = -lead * acc
        return IntegerPowerSeries(-self.leading, tuple(out))

    def power(self, e: int) -> "IntegerPowerSeries":
        if e < 0:
            return self.inverse().power(-e)
        result = IntegerPowerSeries(0, (1,) + (0,) * (len(self.coeffs) - 1))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __str__(self) -> str:
        chunks = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            e = self.leading + i
            if e == 0:
                term = "%d" % abs(c)
            elif e == 1:
                term = "%d q" % abs(c) if abs(c) != 1 else "q"
            else:
                term = "%d q^%d" % (abs(c), e) if abs(c) != 1 else "q^%d" % e
            if not chunks:
                chunks.append(term if c > 0 else "-" + term)
            else:
                chunks.append(("+ " if c > 0 else "- ") + term)
        return " ".join(chunks) if chunks else "0"


def euler_factor_series(step: int, order: int) -> IntegerPowerSeries:
    """The product of (1 - q**(step*m)) over m >= 1, truncated at ``order``.

    Expanded by the pentagonal-number recursion, so the series is sparse
    and exact.
    """
    coeffs = [0] * (order + 1)
    coeffs[0] = 1
    m = 1
    while True:
        p1 = step * m * (3 * m - 1) // 2
        p2 = step * m * (3 * m + 1) // 2
        if p1 > order and p2 > order:
            break
        sign = -1 if m % 2 else 1
        if p1 <= order:
            coeffs[p1] = sign
        if p2 <= order:
            coeffs[p2] = sign
        m += 1
    return IntegerPowerSeries(0, tuple(coeffs))


def eta_quotient_series(fs: FrameShape, order: int = 50) -> IntegerPowerSeries:
    """Exact q-expansion of the eta quotient attached to a Frame shape.

    The quotient multiplies eta at each part against eta at twice the
    part, so the fractional exponents cancel into the integer -deg/24;
    a shape whose exponent does not cancel is rejected.
    """
    if order < 1:
        raise ValueError("order must be positive")
    if fs.degree % 24:
        raise ValueError("fractional leading exponent for %s" % fs.display)
    leading = -fs.degree // 24
    width = order - leading + 1
    unit = IntegerPowerSeries(0, (1,) + (0,) * (width - 1))
    for a, alpha in fs.parts:
        unit = unit * euler_factor_series(a, width - 1).power(alpha)
        unit = unit * euler_factor_series(2 * a, width - 1).power(-alpha)
    return IntegerPowerSeries(leading, unit.coeffs)


# numeric invariance (the only floating point in the package) -------------------


def eta_value(tau: complex, terms: int = 200) -> complex:
    """Dedekind eta at a point of the upper half-plane.

    Reduces the argument with the shift and inversion transformations
    until its imaginary part is at least 0.8, then multiplies the
    q-product directly.
    """
    if tau.imag <= 0:
        raise ValueError("eta needs a point of the upper half-plane")
    factor = complex(1)
    while True:
        shift = round(tau.real)
        if shift:
            tau -= shift
            factor *= cmath.exp(1j * math.pi * shift / 12)
        if tau.imag >= 0.8:
            break
        tau = -1 / tau
        factor *= cmath.sqrt(-1j * tau)
    q24 = cmath.exp(2j * math.pi * tau / 24)
    q = q24**24
    prod = complex(1)
    qn = q
    for _ in range(terms):
        prod *= 1 - qn
        qn *= q
    return factor * q24 * prod


def eta_quotient_value(fs: FrameShape, tau: complex) -> complex:
    out = complex(1)
    for a, alpha in fs.parts:
        out *= eta_value(a * tau) ** alpha
        out *= eta_value(2 * a * tau) ** (-alpha)
    return out


def mobius(g: ProjectiveMatrix, tau: complex) -> complex:
    a, b, c, d = g.entries()
    return (a * tau + b) / (c * tau + d)


def invariant_under(fs: FrameShape, g: ProjectiveMatrix, tau: complex, tol: float = 1e-6) -> bool:
    """Whether the eta quotient takes the same value at tau and g(tau)."""
    if tau.imag <= 0:
        raise ValueError("invariance check needs a point of the upper half-plane")
    base = eta_quotient_value(fs, tau)
    moved = eta_quotient_value(fs, mobius(g, tau))
    return abs(moved - base) <= tol * (1 + abs(base))


def numeric_invariance_check(
    fs: FrameShape,
    desc: GroupDescriptor,
    tau: complex = 0.1 + 0.8j,
    tol: float = 1e-6,
) -> bool:
    """Necessary-condition check: invariance under every group generator."""
    return all(invariant_under(fs, g, tau, tol) for g in group_generators(desc))
