"""p-adic trees over the lattice-name calculus.

Lattices at p-power hyperdistance from the distinguished lattice form a
(p+1)-regular tree with edges at hyperdistance p.  This module enumerates
hypercircles (spheres of given hyperradius), computes the projection of an
arbitrary lattice onto each p-adic tree, tests the cell property, and
evaluates the multiplicative index formula that counts a hypercircle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .exact import ProjectiveMatrix
from .lattice import L1, LatticeName, act, hyperdistance, reduce_matrix


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division; fine at the scales used here."""
    if n < 1:
        raise ValueError("cannot factorize %d" % n)
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime(p: int) -> bool:
    return p >= 2 and factorize(p) == {p: 1}


def gamma0_index(n: int) -> int:
    """Index of the joint stabilizer of L1 and L_n in the modular group.

    Multiplicative closed form: the product of (p+1)*p**(a-1) over the
    prime factorization of n; equals the size of the hyperradius-n
    hypercircle about L1.
    """
    if n < 1:
        raise ValueError("index is defined for n >= 1, got %d" % n)
    out = 1
    for p, a in factorize(n).items():
        out *= (p + 1) * p ** (a - 1)
    return out


@dataclass(frozen=True)
class HyperCircle:
    center: LatticeName
    radius: int
    members: tuple[LatticeName, ...]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, name: LatticeName) -> bool:
        return name in self.members


def _hypercircle_at_l1(n: int) -> list[LatticeName]:
    # cosets at hyperdistance n <-> upper Hermite forms [[a, b], [0, d]]
    # with a*d == n, 0 <= b < d, gcd(a, b, d) == 1; name is (a/d, b/d)
    out = []
    for d in range(1, n + 1):
        if n % d:
            continue
        a = n // d
        g0 = gcd(a, d)
        for b in range(d):
            if gcd(g0, b) == 1:
                out.append(LatticeName(Fraction(a, d), Fraction(b, d)))
    out.sort()
    return out


def hypercircle(center: LatticeName, radius: int) -> HyperCircle:
    """All lattices at hyperdistance exactly ``radius`` from ``center``.

    Enumerated at the distinguished lattice and translated by the group
    action, which preserves hyperdistance; members come out sorted by name.
    """
    if radius < 1:
        raise ValueError("hyperradius must be >= 1, got %d" % radius)
    base = _hypercircle_at_l1(radius)
    if center == L1:
        members = base
    else:
        g = center.matrix()
        members = sorted(act(x, g) for x in base)
    return HyperCircle(center, radius, tuple(members))


def padic_projection(name: LatticeName, p: int) -> LatticeName:
    """The unique tree representative of a lattice's p-adic class.

    Computed from the primitive sublattice behind the name: adding p^k
    times the ambient lattice (k the p-valuation of the hyperdistance from
    L1) keeps the p-localization and trivializes every other one.  The two
    defining properties are re-checked before returning.
    """
    if not is_prime(p):
        raise ValueError("%d is not prime" % p)
    a, b, c, d = name.matrix().entries()
    k = 0
    det = a * d - b * c
    while det % p == 0:
        det //= p
        k += 1
    q = p**k
    rows = [(a, b), (c, d), (q, 0), (0, q)]
    basis = _row_hnf(rows)
    proj = reduce_matrix(ProjectiveMatrix.from_rows(basis))
    dist_from_l1 = hyperdistance(L1, proj)
    while dist_from_l1 % p == 0:
        dist_from_l1 //= p
    if dist_from_l1 != 1:
        raise AssertionError("projection of %s left the %d-adic tree" % (name, p))
    if hyperdistance(proj, name) % p == 0:
        raise AssertionError("projection of %s is not %d-adically equivalent" % (name, p))
    return proj


def _row_hnf(rows: list[tuple[int, int]]) -> tuple[tuple[int, int], tuple[int, int]]:
    """Basis of the integer row span of a stack of 2-vectors."""
    rows = [list(r) for r in rows if r != (0, 0)]
    # clear the first column down to one pivot by gcd steps
    while sum(1 for r in rows if r[0] != 0) > 1:
        rows.sort(key=lambda r: (r[0] == 0, abs(r[0])))
        pivot = rows[0]
        for r in rows[1:]:
            if r[0] != 0:
                q = r[0] // pivot[0]
                r[0] -= q * pivot[0]
                r[1] -= q * pivot[1]
        rows = [r for r in rows if r != [0, 0]]
    rows.sort(key=lambda r: (r[0] == 0, abs(r[0])))
    pivot = rows[0]
    if pivot[0] < 0:
        pivot = [-pivot[0], -pivot[1]]
    rest = [r[1] for r in rows[1:]]
    g = 0
    for x in rest:
        g = gcd(g, abs(x))
    if g == 0:
        raise ValueError("row span has rank < 2")
    return (tuple(pivot), (0, g))


@dataclass(frozen=True)
class Thread:
    """Lattices sitting multiplicatively between two endpoints."""

    left: LatticeName
    right: LatticeName
    members: tuple[LatticeName, ...]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)


def thread(left: LatticeName, right: LatticeName) -> Thread:
    """All L with delta(left, L) * delta(L, right) == delta(left, right).

    Found by searching the hypercircles around ``left`` of every divisor
    radius and filtering by the defining equation.
    """
    total = hyperdistance(left, right)
    members = []
    for d in range(1, total + 1):
        if total % d:
            continue
        for cand in hypercircle(left, d):
            if hyperdistance(cand, right) == total // d:
                members.append(cand)
    return Thread(left, right, tuple(sorted(set(members))))


def is_cell(names) -> bool:
    """Whether a finite lattice set projects to a point or an edge in every tree.

    A subtree spanned by projections is a point iff they all coincide, and
    an edge iff there are exactly two distinct projections at hyperdistance
    p; anything else spans a larger subtree.
    """
    names = sorted(set(names))
    if not names:
        raise ValueError("cell test needs a nonempty set")
    primes: set[int] = set()
    for i, x in enumerate(names):
        for y in names[i + 1 :]:
            primes.update(factorize(hyperdistance(x, y)))
    for p in sorted(primes):
        proj = sorted(set(padic_projection(x, p) for x in names))
        if len(proj) == 1:
            continue
        if len(proj) == 2 and hyperdistance(proj[0], proj[1]) == p:
            continue
        return False
    return True


def tree_ball_edges(p: int, max_power: int) -> tuple[list[LatticeName], list[tuple[LatticeName, LatticeName]]]:
    """Nodes within hyperdistance p**max_power of L1 and the edges among them."""
    if not is_prime(p):
        raise ValueError("%d is not prime" % p)
    nodes = [L1]
    for k in range(1, max_power + 1):
        nodes.extend(hypercircle(L1, p**k))
    edges = []
    for i, x in enumerate(nodes):
        for y in nodes[i + 1 :]:
            if hyperdistance(x, y) == p:
                edges.append((x, y))
    return nodes, edges


def hypercircle_dot(circle: HyperCircle) -> str:
    """DOT rendering: members of the circle, joined where prime-hyperdistant."""
    lines = ["graph hypercircle {", '  node [shape=box, fontname="monospace"];']
    index = {name: i for i, name in enumerate(circle.members)}
    for name, i in index.items():
        lines.append('  n%d [label="%s"];' % (i, name))
    for i, x in enumerate(circle.members):
        for y in circle.members[i + 1 :]:
            d = hyperdistance(x, y)
            if is_prime(d):
                lines.append("  n%d -- n%d [label=\"%d\"];" % (index[x], index[y], d))
    lines.append("}")
    return "\n".join(lines) + "\n"
