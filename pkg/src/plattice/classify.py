"""The finite search that recovers the nine diagram-labeling groups.

Candidate parameter pairs (n, h) are those allowed by the index bound; for
each, the quotient of the normalizer of the level n*h group by that group
is enumerated, its subgroups are screened against four conditions (width
one at infinity, exponent-two quotient, and two index bounds), and every
survivor is mapped back to a symbolic descriptor.  The prose case analysis
becomes assertions in the test suite, not control flow here.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import gcd

from .groupsys import (
    SUPPORTED_KERNELS,
    FiniteQuotient,
    GroupDescriptor,
    divisors,
    exact_divisors,
    member,
    normalizer_quotient,
)
from .tree import gamma0_index

INDEX_BOUND = 12
RATIO_BOUND = 3


def candidate_levels(index_bound: int = INDEX_BOUND) -> list[tuple[int, int]]:
    """All (n, h) with the level-n index within bound and h admissible.

    h must divide gcd(n, 24) with neither 4h nor 9h dividing n (otherwise
    h would not be the maximal square divisor bound for n*h).
    """
    out = []
    for n in range(1, index_bound + 1):  # the index always exceeds n
        if gamma0_index(n) > index_bound:
            continue
        for h in divisors(gcd(n, 24)):
            if n % (4 * h) and n % (9 * h):
                out.append((n, h))
    return out


@dataclass(frozen=True)
class ConditionReport:
    width_one: bool
    exponent_two: bool
    index_ok: bool
    index_in_modular: int
    index_over_modular: int

    @property
    def passed(self) -> bool:
        return self.width_one and self.exponent_two and self.index_ok

    def to_json(self) -> dict:
        return {
            "width_one": self.width_one,
            "exponent_two": self.exponent_two,
            "index_ok": self.index_ok,
            "index_in_modular": self.index_in_modular,
            "index_over_modular": self.index_over_modular,
        }


@dataclass(frozen=True)
class Candidate:
    n: int
    h: int
    quotient: FiniteQuotient
    subgroup: frozenset[int]

    @property
    def level(self) -> int:
        return self.n * self.h

    def __post_init__(self):
        mult = self.quotient.mult
        for i in self.subgroup:
            if self.quotient.inverse[i] not in self.subgroup:
                raise ValueError("subgroup is not inverse-closed")
            for j in self.subgroup:
                if mult[i][j] not in self.subgroup:
                    raise ValueError("subgroup is not multiplicatively closed")


def width_cosets(q: FiniteQuotient) -> list[int]:
    """Quotient cosets of the fractional shears that break width one."""
    from fractions import Fraction

    from .exact import translation

    h = q.big.h
    return [q.coset_of(translation(Fraction(k, h))) for k in range(1, h)]


def check_conditions(
    cand: Candidate,
    index_bound: int = INDEX_BOUND,
    ratio_bound: int = RATIO_BOUND,
    relax_width: bool = False,
) -> ConditionReport:
    """The four screening conditions; arithmeticity holds by construction."""
    q, sub = cand.quotient, cand.subgroup
    width_one = relax_width or all(c not in sub for c in width_cosets(q))
    exponent_two = all(q.mult[i][i] == 0 for i in sub)
    modular_part = sum(1 for i in sub if q.reps[i].pdet() == 1)
    total = gamma0_index(cand.level)
    assert total % modular_part == 0 and len(sub) % modular_part == 0
    index_in_modular = total // modular_part
    index_over_modular = len(sub) // modular_part
    index_ok = index_in_modular <= index_bound and total <= ratio_bound * len(sub)
    return ConditionReport(width_one, exponent_two, index_ok, index_in_modular, index_over_modular)


# naming discovered subgroups --------------------------------------------------


def _closed_label_sets(pool: list[int]) -> list[frozenset[int]]:
    out = []
    for r in range(len(pool) + 1):
        for combo in combinations(pool, r):
            closed = all(
                e * f // gcd(e, f) ** 2 in set(combo) | {1} for e in combo for f in combo
            )
            if closed:
                out.append(frozenset(combo))
    return out


def descriptor_catalog(level: int) -> list[GroupDescriptor]:
    """Every descriptor denoting a group containing the level group."""
    out = []
    for n2 in divisors(level):
        for h2 in divisors(gcd(n2, 24)):
            label_pool = sorted(set(exact_divisors(n2 // h2)) - {1})
            for labels in _closed_label_sets(label_pool):
                out.append(GroupDescriptor(h2, n2, labels))
                if (h2, n2) in SUPPORTED_KERNELS and level % (n2 * h2) == 0:
                    out.append(GroupDescriptor(h2, n2, labels, h2))
    return out


def _index_over_modular_part(desc: GroupDescriptor) -> int:
    """Index of the group over its modular-group intersection, in closed form.

    A closed label set of size k adjoins k cosets, and the scaled base
    group sits over its integral part with index given by a ratio of the
    index formula; kernels divide the whole count by h.
    """
    labels = len(desc.plus) + 1
    if desc.character:
        base = gamma0_index(desc.n * desc.h) // gamma0_index(desc.n // desc.h)
        return base * labels // desc.h
    base = gamma0_index(desc.n) // gamma0_index(desc.n // desc.h)
    return base * labels


def name_subgroup(q: FiniteQuotient, subgroup: frozenset[int]) -> GroupDescriptor:
    """Match a quotient subgroup against the descriptor catalog.

    A descriptor matches when its membership predicate accepts exactly the
    subgroup's representatives and both of its index invariants agree with
    the measured ones.  Set equality makes the union of the subgroup's
    cosets a subgroup of the descriptor's group; the matching modular part
    and matching index over it then force the two groups equal, so at most
    one descriptor can survive.
    """
    level = q.small.n
    modular_part = sum(1 for i in subgroup if q.reps[i].pdet() == 1)
    target_in = gamma0_index(level) // modular_part
    target_over = len(subgroup) // modular_part
    matches = []
    for desc in descriptor_catalog(level):
        if gamma0_index(desc.intersection_level()) != target_in:
            continue
        if _index_over_modular_part(desc) != target_over:
            continue
        accepted = frozenset(i for i, rep in enumerate(q.reps) if member(rep, desc))
        if accepted == subgroup:
            matches.append(desc)
    if len(matches) != 1:
        raise ValueError(
            "subgroup of the level-%d quotient matched %d descriptors: %s"
            % (level, len(matches), [d.display for d in matches])
        )
    return matches[0]


# the sweep --------------------------------------------------------------------


def elementary_two_subgroups(q: FiniteQuotient) -> set[frozenset[int]]:
    """Subgroups in which every element squares to the identity."""
    involutions = [i for i in range(1, q.order) if q.mult[i][i] == 0]
    trivial = frozenset([0])
    subs = {trivial}
    frontier = [trivial]
    while frontier:
        h = frontier.pop()
        for t in involutions:
            if t in h or any(q.mult[t][x] != q.mult[x][t] for x in h):
                continue
            ext = frozenset(h | {q.mult[t][x] for x in h})
            if ext not in subs:
                subs.add(ext)
                frontier.append(ext)
    return subs


def _search_space(q: FiniteQuotient) -> set[frozenset[int]]:
    # full subgroup lattice at the sizes the case analysis meets; only the
    # exponent-two part (all that can pass) for the few larger quotients
    if q.order <= 24:
        return q.all_subgroups()
    return elementary_two_subgroups(q)


@dataclass(frozen=True)
class Hit:
    candidate: Candidate
    report: ConditionReport
    descriptor: GroupDescriptor


def classify_hits(
    index_bound: int = INDEX_BOUND,
    ratio_bound: int = RATIO_BOUND,
    relax_width: bool = False,
) -> list[Hit]:
    """Every (candidate, subgroup) pair passing the screening, with names."""
    hits = []
    for n, h in candidate_levels(index_bound):
        q = normalizer_quotient(n * h)
        for sub in sorted(_search_space(q), key=lambda s: (len(s), sorted(s))):
            cand = Candidate(n, h, q, sub)
            report = check_conditions(cand, index_bound, ratio_bound, relax_width)
            if report.passed:
                hits.append(Hit(cand, report, name_subgroup(q, sub)))
    return hits


def classify(
    index_bound: int = INDEX_BOUND,
    ratio_bound: int = RATIO_BOUND,
    relax_width: bool = False,
) -> set[GroupDescriptor]:
    """The set of groups satisfying all four conditions, deduplicated."""
    return {hit.descriptor for hit in classify_hits(index_bound, ratio_bound, relax_width)}
