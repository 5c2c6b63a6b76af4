"""Symbolic arithmetic-group descriptors and exact membership tests.

A descriptor covers the groups needed here: the Hecke-type base group with
parameters (h, n) (h = 1 gives the classical level-n congruence group),
optional adjoined Atkin-Lehner cosets labeled by exact divisors of n/h, and
an optional index-h kernel subgroup cut out by a character.  Membership is
decided entry-wise on the primitive representative after conjugating by the
diagonal matrix with ratio h, so everything stays in integer arithmetic.

Finite quotients by a normal congruence subgroup are materialized as coset
representative lists with an exact multiplication table and, when a lattice
set is supplied, the permutation action on it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .exact import (
    IDENTITY,
    S,
    T,
    ProjectiveMatrix,
    dilation,
    lower_translation,
    translation,
)
from .lattice import LatticeName, act, lattice, reduce_matrix
from .tree import factorize, gamma0_index, hypercircle, thread

# (h, n) pairs for which the canonical index-h kernel is implemented; the
# two doubled pairs are the images of the first two under level doubling.
SUPPORTED_KERNELS = frozenset({(3, 3), (2, 4), (3, 6), (2, 8)})

QUOTIENT_ELEMENT_BOUND = 10000


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def exact_divisors(n: int) -> list[int]:
    """Divisors e of n with gcd(e, n/e) == 1."""
    return [e for e in divisors(n) if gcd(e, n // e) == 1]


@dataclass(frozen=True, order=True)
class GroupDescriptor:
    """Symbolic name for a group between a congruence group and its normalizer."""

    h: int
    n: int
    plus: frozenset[int] = frozenset()
    character: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "plus", frozenset(self.plus))
        if self.h < 1 or self.n < 1 or self.n % self.h:
            raise ValueError("descriptor needs h | n, got h=%d n=%d" % (self.h, self.n))
        ok = set(exact_divisors(self.n // self.h)) - {1}
        if not self.plus <= ok:
            raise ValueError(
                "labels %s are not exact divisors of %d" % (sorted(self.plus), self.n // self.h)
            )
        # adjoined cosets multiply by (e, f) -> ef/gcd^2, so the label set
        # must be closed or the descriptor would not denote a group
        for e in self.plus:
            for f in self.plus:
                prod = e * f // gcd(e, f) ** 2
                if prod != 1 and prod not in self.plus:
                    raise ValueError(
                        "label set %s is not closed: %d*%d gives %d"
                        % (sorted(self.plus), e, f, prod)
                    )
        if self.character is not None:
            if self.character != self.h:
                raise ValueError("only the index-h kernel is supported")
            if (self.h, self.n) not in SUPPORTED_KERNELS:
                raise ValueError(
                    "kernel subgroup not implemented for (h, n) = (%d, %d)" % (self.h, self.n)
                )

    # constructors ---------------------------------------------------------

    @classmethod
    def gamma0(cls, n: int) -> "GroupDescriptor":
        return cls(1, n)

    @classmethod
    def gamma0_plus(cls, n: int, labels=None) -> "GroupDescriptor":
        if labels is None:
            labels = set(exact_divisors(n)) - {1}
        return cls(1, n, frozenset(labels))

    @classmethod
    def kernel(cls, h: int, n: int, labels=()) -> "GroupDescriptor":
        return cls(h, n, frozenset(labels), h)

    # presentation ---------------------------------------------------------

    @property
    def display(self) -> str:
        """Conway-Norton style name; the n|h form denotes the kernel group."""
        base = str(self.n) if self.h == 1 else "%d|%d" % (self.n, self.h)
        if not self.plus:
            return base
        full = set(exact_divisors(self.n // self.h)) - {1}
        if self.plus == full:
            return base + "+"
        return base + "+" + ",".join(str(e) for e in sorted(self.plus))

    def __str__(self) -> str:
        return self.display

    @classmethod
    def parse(cls, text: str) -> "GroupDescriptor":
        """Parse names like ``6``, ``6+``, ``6+6``, ``3|3``, ``8|2+``."""
        s = text.strip()
        labels: frozenset[int] | None
        if "+" in s:
            base, _, tail = s.partition("+")
            labels = None if tail == "" else frozenset(int(x) for x in tail.split(","))
        else:
            base, labels = s, frozenset()
        try:
            if "|" in base:
                nn, hh = (int(x) for x in base.split("|"))
                if labels is None:
                    labels = frozenset(set(exact_divisors(nn // hh)) - {1})
                return cls.kernel(hh, nn, labels)
            nn = int(base)
        except ValueError as exc:
            raise ValueError("bad group name %r" % text) from exc
        if labels is None:
            return cls.gamma0_plus(nn)
        return cls(1, nn, labels)

    # structure ------------------------------------------------------------

    def intersection_level(self) -> int:
        """K with the group's modular-group intersection equal to level K."""
        return self.n * self.h if self.character else self.n

    def to_json(self) -> dict:
        return {
            "h": self.h,
            "n": self.n,
            "plus": sorted(self.plus),
            "character": self.character,
            "display": self.display,
        }

    @classmethod
    def from_json(cls, data: dict) -> "GroupDescriptor":
        return cls(data["h"], data["n"], frozenset(data["plus"]), data["character"])


# membership -----------------------------------------------------------------


def _conjugate_by_scale(g: ProjectiveMatrix, h: int) -> ProjectiveMatrix:
    # h * (g_h g g_h^-1) stays integral
    a, b, c, d = g.entries()
    return ProjectiveMatrix.from_entries(h * a, h * h * b, c, h * d)


@lru_cache(maxsize=None)
def _kernel_action_set(h: int, n: int) -> tuple[LatticeName, ...]:
    """Finite lattice set whose action cuts out the index-h kernel.

    For h = 3 the order-3 character is trivial exactly on the elements
    acting with order at most 2 on the four lattices around L_3.  For
    h = 2 it is the sign of the action on the hyperradius-2 circles about
    the two stabilized lattices, with the fixed spine between them removed
    (path reversal contributes spine transpositions that would otherwise
    flip the sign of the Atkin-Lehner coset).
    """
    if h == 3:
        return hypercircle(lattice(3), 3).members
    members = set(hypercircle(lattice(2), 2)) | set(hypercircle(lattice(n), 2))
    spine = set(thread(lattice(2), lattice(n)).members)
    return tuple(sorted(members - spine))


def _action_perm(g: ProjectiveMatrix, points: tuple[LatticeName, ...]):
    index = {x: i for i, x in enumerate(points)}
    out = []
    for x in points:
        y = act(x, g)
        if y not in index:
            return None
        out.append(index[y])
    return tuple(out)


def _perm_order(perm: tuple[int, ...]) -> int:
    order = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        order = order * length // gcd(order, length)
    return order


def _perm_sign(perm: tuple[int, ...]) -> int:
    sign = 0
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        sign ^= (length - 1) & 1
    return sign


def _kernel_condition(g: ProjectiveMatrix, desc: GroupDescriptor) -> bool:
    perm = _action_perm(g, _kernel_action_set(desc.h, desc.n))
    if perm is None:
        return False
    if desc.h == 3:
        return _perm_order(perm) <= 2
    return _perm_sign(perm) == 0


def member(g: ProjectiveMatrix, desc: GroupDescriptor) -> bool:
    """Exact membership of a projective matrix in the described group."""
    w = _conjugate_by_scale(g, desc.h)
    e = w.pdet()
    m = desc.n // desc.h
    a, b, c, d = w.entries()
    if e == 1:
        if c % m:
            return False
    elif e in desc.plus:
        if a % e or d % e or c % m:
            return False
    else:
        return False
    if desc.character is not None:
        return _kernel_condition(g, desc)
    return True


# Atkin-Lehner cosets and the normalizer --------------------------------------


def al_coset_representative(n: int, e: int) -> ProjectiveMatrix:
    """A matrix in the Atkin-Lehner coset labeled e over level n.

    The defining shape is [[a*e, b], [c*n, d*e]] with a*d*e^2 - b*c*n == e,
    solved with an extended gcd; checked before returning.
    """
    if n % e or gcd(e, n // e) != 1:
        raise ValueError("%d is not an exact divisor of %d" % (e, n))
    if e == 1:
        return IDENTITY
    if e == n:
        rep = ProjectiveMatrix.from_entries(0, -1, n, 0)
    else:
        u = pow(e, -1, n // e)
        v = (u * e - 1) // (n // e)
        rep = ProjectiveMatrix.from_entries(e, v, n, u * e)
    a, b, c, d = rep.entries()
    assert rep.pdet() == e and a % e == 0 and d % e == 0 and c % n == 0
    return rep


def conjugated_al_representative(desc_h: int, m: int, e: int) -> ProjectiveMatrix:
    """Representative of the label-e coset inside the (h, n) family, n = h*m."""
    rep = al_coset_representative(m, e)
    gh = dilation(desc_h)
    return gh.inv() * rep * gh


def normalizer_of_gamma0(n: int) -> GroupDescriptor:
    """Descriptor of the normalizer: h is the largest divisor of 24 with h^2 | n."""
    if n < 1:
        raise ValueError("level must be positive")
    h = max(d for d in divisors(24) if n % (d * d) == 0)
    m = n // h
    labels = frozenset(set(exact_divisors(m // h)) - {1})
    return GroupDescriptor(h, m, labels)


def group_generators(desc: GroupDescriptor) -> list[ProjectiveMatrix]:
    """A finite generating set for the described group."""
    base = desc.n * desc.h if desc.h > 1 else desc.n
    return list(schreier_generators(base)) + quotient_generators(desc)


# Schreier generators ----------------------------------------------------------


@lru_cache(maxsize=None)
def schreier_generators(n: int) -> tuple[ProjectiveMatrix, ...]:
    """Generators of the level-n congruence group from the coset action.

    Takes the spanning-tree transversal of the action of the two standard
    modular-group generators on the hyperradius-n circle (cosets correspond
    to the lattices there, based at L_n) and returns the Schreier elements.
    """
    if n < 1:
        raise ValueError("level must be positive")
    base = lattice(n)
    transversal: dict[LatticeName, ProjectiveMatrix] = {base: IDENTITY}
    frontier = [base]
    gens = [S, T, T.inv()]
    while frontier:
        cur = frontier.pop(0)
        for g in gens:
            nxt = act(cur, g)
            if nxt not in transversal:
                transversal[nxt] = transversal[cur] * g
                frontier.append(nxt)
    assert len(transversal) == gamma0_index(n)
    out = []
    seen = set()
    for point, rep in transversal.items():
        for g in (S, T):
            elem = rep * g * transversal[act(point, g)].inv()
            if not elem.is_identity() and elem not in seen:
                seen.add(elem)
                out.append(elem)
    desc = GroupDescriptor.gamma0(n)
    assert all(member(x, desc) for x in out)
    return tuple(out)


# finite quotients -------------------------------------------------------------


@dataclass(frozen=True)
class FiniteQuotient:
    """A finite group of coset representatives with exact multiplication."""

    big: GroupDescriptor
    small: GroupDescriptor
    lattice_set: tuple[LatticeName, ...]
    reps: tuple[ProjectiveMatrix, ...]
    mult: tuple[tuple[int, ...], ...]
    inverse: tuple[int, ...]
    actions: tuple[tuple[int, ...], ...]
    _keys: dict = field(repr=False, default_factory=dict, compare=False)

    @property
    def order(self) -> int:
        return len(self.reps)

    def coset_of(self, g: ProjectiveMatrix) -> int:
        if self._keys:
            key = _coset_key(g, self.small.n)
            if key not in self._keys:
                raise ValueError("element is not in any enumerated coset")
            return self._keys[key]
        for i, rep in enumerate(self.reps):
            if member(g * rep.inv(), self.small):
                return i
        raise ValueError("element is not in any enumerated coset")

    def element_order(self, i: int) -> int:
        order, j = 1, i
        while j != 0:
            j = self.mult[j][i]
            order += 1
        return order

    def order_profile(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for i in range(self.order):
            o = self.element_order(i)
            out[o] = out.get(o, 0) + 1
        return out

    def closure(self, seed) -> frozenset[int]:
        out = {0} | set(seed)
        frontier = list(out)
        while frontier:
            i = frontier.pop()
            for j in list(out):
                for k in (self.mult[i][j], self.mult[j][i]):
                    if k not in out:
                        out.add(k)
                        frontier.append(k)
        return frozenset(out)

    def normal_closure(self, seed) -> frozenset[int]:
        conj = set(seed)
        for s in seed:
            for g in range(self.order):
                conj.add(self.mult[self.mult[self.inverse[g]][s]][g])
        return self.closure(conj)

    def all_subgroups(self) -> set[frozenset[int]]:
        cyclics = {frozenset(self._cyclic(i)) for i in range(self.order)}
        trivial = frozenset([0])
        subs = {trivial}
        frontier = [trivial]
        while frontier:
            h = frontier.pop()
            for c in cyclics:
                if c <= h:
                    continue
                ext = self.closure(h | c)
                if ext not in subs:
                    subs.add(ext)
                    frontier.append(ext)
        return subs

    def _cyclic(self, i: int) -> list[int]:
        out, j = [0], i
        while j != 0:
            out.append(j)
            j = self.mult[j][i]
        return out

    def action_of(self, i: int) -> tuple[int, ...]:
        return self.actions[i]

    def image_order(self) -> int:
        return len(set(self.actions))


def _coset_key(g: ProjectiveMatrix, n: int):
    return (reduce_matrix(g), act(lattice(n), g))


def _plain_gamma0(desc: GroupDescriptor) -> bool:
    return desc.h == 1 and not desc.plus and desc.character is None


def finite_quotient(
    big: GroupDescriptor,
    small: GroupDescriptor,
    lattice_set=(),
    generators=None,
    max_elements: int = QUOTIENT_ELEMENT_BOUND,
) -> FiniteQuotient:
    """Cosets of ``small`` in ``big`` by breadth-first closure.

    ``small`` must be normal in ``big`` with finite index (caller's
    responsibility) and must fix every name in ``lattice_set``; the latter
    is verified.  Coset identity is decided by an exact invariant pair when
    ``small`` is a plain level group, else by membership of quotients.
    """
    lattice_set = tuple(lattice_set)
    if generators is None:
        generators = quotient_generators(big)
    plain = _plain_gamma0(small)
    if plain and lattice_set:
        for gen in schreier_generators(small.n):
            for x in lattice_set:
                if act(x, gen) != x:
                    raise ValueError("small group moves %s; bad lattice set" % (x,))
    reps = [IDENTITY]
    keys: dict = {}
    if plain:
        keys[_coset_key(IDENTITY, small.n)] = 0

    def locate(g: ProjectiveMatrix):
        if plain:
            return keys.get(_coset_key(g, small.n))
        for i, rep in enumerate(reps):
            if member(g * rep.inv(), small):
                return i
        return None

    frontier = [IDENTITY]
    while frontier:
        cur = frontier.pop(0)
        for gen in generators:
            nxt = cur * gen
            if locate(nxt) is None:
                if len(reps) >= max_elements:
                    raise ValueError("quotient not finite within bound %d" % max_elements)
                if plain:
                    keys[_coset_key(nxt, small.n)] = len(reps)
                reps.append(nxt)
                frontier.append(nxt)
    order = len(reps)
    mult = [[0] * order for _ in range(order)]
    for i in range(order):
        for j in range(order):
            k = locate(reps[i] * reps[j])
            if k is None:
                raise ValueError("quotient is not closed under multiplication")
            mult[i][j] = k
    inverse = [0] * order
    for i in range(order):
        for j in range(order):
            if mult[i][j] == 0:
                inverse[i] = j
                break
    actions = []
    for rep in reps:
        perm = _action_perm(rep, lattice_set) if lattice_set else ()
        if perm is None:
            raise ValueError("representative %s does not stabilize the lattice set" % (rep,))
        actions.append(perm)
    return FiniteQuotient(
        big,
        small,
        lattice_set,
        tuple(reps),
        tuple(tuple(row) for row in mult),
        tuple(inverse),
        tuple(actions),
        keys,
    )


def quotient_generators(big: GroupDescriptor) -> list[ProjectiveMatrix]:
    """Generators of ``big`` modulo any normal congruence subgroup."""
    if big.character is not None:
        return list(_kernel_coset_generators(big.h, big.n, big.plus))
    gens = []
    if big.h > 1:
        gens.append(translation(Fraction(1, big.h)))
        gens.append(lower_translation(big.n))
    gens.extend(
        conjugated_al_representative(big.h, big.n // big.h, e) for e in sorted(big.plus)
    )
    return gens


@lru_cache(maxsize=None)
def _kernel_coset_generators(h: int, n: int, labels: frozenset) -> tuple[ProjectiveMatrix, ...]:
    """Representatives of every character-trivial coset of the full extension."""
    full = GroupDescriptor(h, n, labels)
    kernel = GroupDescriptor(h, n, labels, h)
    q = finite_quotient(full, GroupDescriptor.gamma0(n * h))
    out = tuple(
        rep for rep in q.reps if not rep.is_identity() and _kernel_condition(rep, kernel)
    )
    # the kernel has index h among the character-graded part
    assert (len(out) + 1) * h == q.order, (h, n, labels, len(out), q.order)
    return out


@lru_cache(maxsize=None)
def normalizer_quotient(n: int) -> FiniteQuotient:
    """The normalizer of the level-n group modulo that group."""
    return finite_quotient(normalizer_of_gamma0(n), GroupDescriptor.gamma0(n))


# characters -------------------------------------------------------------------


@dataclass
class Character:
    """The order-h character whose kernel is the canonical index-h subgroup."""

    quotient: FiniteQuotient
    order: int
    _x_perm: tuple[int, ...]

    def value(self, g: ProjectiveMatrix) -> int:
        perm = _action_perm(g, self.quotient.lattice_set)
        if perm is None:
            raise ValueError("element does not act on the character's lattice set")
        if self.order == 2:
            return _perm_sign(perm)
        # g lies in the coset (x^-j) * kernel exactly when x^j g acts with
        # order <= 2; the generator x itself has value 2 under the character
        for j in range(3):
            if _perm_order(_compose(_power(self._x_perm, j), perm)) <= 2:
                return j
        raise AssertionError("permutation is not in the order-12 image")


def _compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    # apply p, then q
    return tuple(q[p[i]] for i in range(len(p)))


def _power(p: tuple[int, ...], k: int) -> tuple[int, ...]:
    out = tuple(range(len(p)))
    for _ in range(k):
        out = _compose(out, p)
    return out


def character_lambda(case: int) -> Character:
    """The two instantiated characters, for overall levels 9 and 8."""
    if case == 9:
        big = GroupDescriptor(3, 3)
        small = GroupDescriptor.gamma0(9)
        points = _kernel_action_set(3, 3)
        q = finite_quotient(big, small, points)
        x_perm = _action_perm(translation(Fraction(1, 3)), points)
        return Character(q, 3, x_perm)
    if case == 8:
        big = GroupDescriptor(2, 4, frozenset({2}))
        small = GroupDescriptor.gamma0(8)
        points = _kernel_action_set(2, 4)
        q = finite_quotient(big, small, points)
        return Character(q, 2, ())
    raise ValueError("character construction defined only for N=9, N=8")


# congruence level -------------------------------------------------------------


def psl2_order(m: int) -> int:
    """Order of the modular group reduced mod m."""
    if m == 1:
        return 1
    out = m**3
    for p in factorize(m):
        out = out // (p * p) * (p * p - 1)
    return out if m == 2 else out // 2


def _psl2_key(a, b, c, d, m):
    first = (a % m, b % m, c % m, d % m)
    second = ((-a) % m, (-b) % m, (-c) % m, (-d) % m)
    return min(first, second)


def _image_subgroup_order(generators, m: int) -> int:
    if m == 1:
        return 1
    elems = {_psl2_key(1, 0, 0, 1, m)}
    frontier = list(elems)
    gens = [g.entries() for g in generators]
    while frontier:
        a, b, c, d = frontier.pop()
        for e, f, g2, h2 in gens:
            key = _psl2_key(a * e + b * g2, a * f + b * h2, c * e + d * g2, c * f + d * h2, m)
            if key not in elems:
                elems.add(key)
                frontier.append(key)
    return len(elems)


def contains_principal_congruence(k: int, m: int) -> bool:
    """Whether the level-m principal congruence group sits inside level-k one."""
    gens = schreier_generators(k)
    image = _image_subgroup_order(gens, m)
    return psl2_order(m) == image * gamma0_index(k)


def congruence_level(desc: GroupDescriptor, bound: int | None = None) -> int:
    """Least M with the principal congruence group of level M inside the group.

    Containment only depends on the modular-group intersection, a plain
    level group; candidates run over divisors of a bound defaulting to
    four times n*h, which covers every group in scope.
    """
    k = desc.intersection_level()
    if bound is None:
        bound = 4 * desc.n * desc.h
    for m in divisors(bound):
        if contains_principal_congruence(k, m):
            return m
    raise ValueError("no congruence level found below %d for %s" % (bound, desc))
