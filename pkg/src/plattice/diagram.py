"""Vertex invariants for the nine groups and the graph they determine.

Each group gets an envelope level (the least level whose group it contains
and normalizes), a scale factor, a core subgroup (the group with its
adjoined involutions removed), a congruence level, a normalized level, a
valency, and a faithfulness bit.  A degree- and weight-constrained
backtracking search then recovers the unique graph on the nine vertices:
the extended E8 diagram.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .classify import name_subgroup
from .groupsys import (
    FiniteQuotient,
    GroupDescriptor,
    congruence_level,
    divisors,
    group_generators,
    member,
    normalizer_of_gamma0,
    normalizer_quotient,
    schreier_generators,
)
from .lattice import L1, act, lattice

# the nine vertex groups, in the order the invariant tables list them
NODE_GROUPS: tuple[GroupDescriptor, ...] = (
    GroupDescriptor.gamma0(1),
    GroupDescriptor.gamma0_plus(2),
    GroupDescriptor.gamma0_plus(3),
    GroupDescriptor.gamma0_plus(4),
    GroupDescriptor.gamma0_plus(5),
    GroupDescriptor.gamma0_plus(6),
    GroupDescriptor.kernel(3, 3),
    GroupDescriptor.kernel(2, 4, {2}),
    GroupDescriptor.gamma0(2),
)

ENVELOPE_SEARCH_BOUND = 64


@lru_cache(maxsize=None)
def envelope_level(desc: GroupDescriptor, bound: int = ENVELOPE_SEARCH_BOUND) -> int:
    """Least N whose level group the group contains and normalizes."""
    gens = group_generators(desc)
    for n in range(1, bound + 1):
        inside = all(member(g, desc) for g in schreier_generators(n))
        if not inside:
            continue
        envelope = normalizer_of_gamma0(n)
        if all(member(g, envelope) for g in gens):
            return n
    raise ValueError("no envelope level below %d for %s" % (bound, desc))


def _member_cosets(q: FiniteQuotient, desc: GroupDescriptor) -> frozenset[int]:
    return frozenset(i for i, rep in enumerate(q.reps) if member(rep, desc))


@lru_cache(maxsize=None)
def scale_factor(desc: GroupDescriptor) -> int:
    """Largest divisor a of 24 with a^2 | N whose scaled base group meets
    the group in index a."""
    n = envelope_level(desc)
    q = normalizer_quotient(n)
    mine = _member_cosets(q, desc)
    for a in sorted(divisors(24), reverse=True):
        if n % (a * a):
            continue
        scaled = _member_cosets(q, GroupDescriptor(a, n // a))
        met = scaled & mine
        if len(scaled) == len(met) * a:
            return a
    raise AssertionError("no scale factor found for %s" % desc)


@lru_cache(maxsize=None)
def core_group(desc: GroupDescriptor) -> GroupDescriptor:
    """The group cut back to the scaled base family: its Atkin-Lehner-free part."""
    n = envelope_level(desc)
    a = scale_factor(desc)
    q = normalizer_quotient(n)
    met = _member_cosets(q, GroupDescriptor(a, n // a)) & _member_cosets(q, desc)
    return name_subgroup(q, met)


@dataclass(frozen=True)
class VertexData:
    group: GroupDescriptor
    envelope: int
    scale: int
    core: GroupDescriptor
    level: int
    normalized_level: int
    valency: int
    faithful: bool

    def to_json(self) -> dict:
        return {
            "group": self.group.to_json(),
            "envelope": self.envelope,
            "scale": self.scale,
            "core": self.core.to_json(),
            "level": self.level,
            "normalized_level": self.normalized_level,
            "valency": self.valency,
            "faithful": self.faithful,
        }

    @classmethod
    def from_json(cls, data: dict) -> "VertexData":
        return cls(
            group=GroupDescriptor.from_json(data["group"]),
            envelope=data["envelope"],
            scale=data["scale"],
            core=GroupDescriptor.from_json(data["core"]),
            level=data["level"],
            normalized_level=data["normalized_level"],
            valency=data["valency"],
            faithful=data["faithful"],
        )


PAIR_BASE = frozenset({L1, lattice(2)})


def pair_orbit_size(desc: GroupDescriptor, bound: int = 64) -> int:
    """Size of the orbit of the unordered pair {L1, L2} under the group."""
    gens = group_generators(desc)
    seen = {PAIR_BASE}
    frontier = [PAIR_BASE]
    while frontier:
        cur = frontier.pop()
        for g in gens:
            nxt = frozenset(act(x, g) for x in cur)
            if nxt not in seen:
                if len(seen) >= bound:
                    raise AssertionError("pair orbit exceeded bound for %s" % desc)
                seen.add(nxt)
                frontier.append(nxt)
    return len(seen)


def is_faithful(desc: GroupDescriptor) -> bool:
    """Nearness to the joint two-lattice stabilizer, as an orbit bound.

    The stabilizer of the unordered pair {L1, L2} meets the group in index
    equal to the pair-orbit size, so the intersection index bound of two
    becomes an orbit-size bound.
    """
    return pair_orbit_size(desc) <= 2


@lru_cache(maxsize=None)
def vertex_data(desc: GroupDescriptor) -> VertexData:
    n = envelope_level(desc)
    a = scale_factor(desc)
    core = core_group(desc)
    level = congruence_level(desc)
    if level % a:
        raise AssertionError("level %d not divisible by scale %d for %s" % (level, a, desc))
    q = normalizer_quotient(n)
    mine = _member_cosets(q, desc)
    core_set = _member_cosets(q, core) & mine
    ratio = len(mine) // len(core_set)
    m = ratio.bit_length() - 1
    if 2**m != ratio:
        raise AssertionError("quotient by the core is not a two-group for %s" % desc)
    for i in mine:
        if q.mult[i][i] not in core_set:
            raise AssertionError("core quotient has exponent above two for %s" % desc)
    return VertexData(
        group=desc,
        envelope=n,
        scale=a,
        core=core,
        level=level,
        normalized_level=level // a,
        valency=m + 1,
        faithful=is_faithful(desc),
    )


# graph reconstruction ---------------------------------------------------------


@dataclass(frozen=True)
class LabeledGraph:
    vertices: tuple[VertexData, ...]
    edges: frozenset[tuple[int, int]]

    def neighbors(self, i: int) -> list[int]:
        out = []
        for a, b in self.edges:
            if a == i:
                out.append(b)
            elif b == i:
                out.append(a)
        return sorted(out)

    def edge_displays(self) -> set[tuple[str, str]]:
        return {
            tuple(sorted((self.vertices[a].group.display, self.vertices[b].group.display)))
            for a, b in self.edges
        }

    def to_json(self) -> dict:
        return {
            "vertices": [v.to_json() for v in self.vertices],
            "edges": sorted(sorted(e) for e in self.edges),
        }

    @classmethod
    def from_json(cls, data: dict) -> "LabeledGraph":
        return cls(
            tuple(VertexData.from_json(v) for v in data["vertices"]),
            frozenset(tuple(e) for e in data["edges"]),
        )


def graph_solutions(data, enforce_faithful: bool = True) -> list[frozenset[tuple[int, int]]]:
    """All simple graphs meeting the degree, weight-balance, and parity rules.

    Vertex degrees must equal the valencies; twice each vertex's
    normalized level must equal the sum over its neighbors'; and, when
    enforced, faithful vertices may only touch non-faithful ones.
    """
    data = tuple(data)
    count = len(data)
    degrees = [v.valency for v in data]
    weights = [v.normalized_level for v in data]
    faithful = [v.faithful for v in data]
    solutions: list[frozenset[tuple[int, int]]] = []
    edges: list[tuple[int, int]] = []
    adjacency: list[list[int]] = [[] for _ in range(count)]

    def place(i: int) -> None:
        if i == count:
            solutions.append(frozenset(edges))
            return
        need = degrees[i] - len(adjacency[i])
        if need < 0:
            return
        if need == 0:
            if 2 * weights[i] == sum(weights[j] for j in adjacency[i]):
                place(i + 1)
            return
        candidates = [
            j
            for j in range(i + 1, count)
            if len(adjacency[j]) < degrees[j]
            and not (enforce_faithful and faithful[i] and faithful[j])
        ]

        def choose(picked: list[int], start: int) -> None:
            if len(picked) == need:
                if 2 * weights[i] != sum(weights[j] for j in adjacency[i]):
                    return
                place(i + 1)
                return
            for idx in range(start, len(candidates)):
                j = candidates[idx]
                if len(adjacency[j]) >= degrees[j]:
                    continue
                edges.append((i, j))
                adjacency[i].append(j)
                adjacency[j].append(i)
                choose(picked + [j], idx + 1)
                edges.pop()
                adjacency[i].pop()
                adjacency[j].pop()

        choose([], 0)

    place(0)
    return solutions


def build_graph(data, enforce_faithful: bool = True) -> LabeledGraph:
    """The unique constrained graph; raises if the count differs from one."""
    data = tuple(data)
    solutions = graph_solutions(data, enforce_faithful)
    if len(solutions) != 1:
        raise ValueError("expected a unique graph, found %d solutions" % len(solutions))
    return LabeledGraph(data, solutions[0])


def node_vertex_data() -> tuple[VertexData, ...]:
    return tuple(vertex_data(desc) for desc in NODE_GROUPS)


def emit_dot(graph: LabeledGraph) -> str:
    """Deterministic DOT output; the weight-one vertex is doubly circled."""
    lines = ["graph diagram {", '  node [shape=circle, fontname="monospace"];']
    for i, v in enumerate(graph.vertices):
        shape = ', shape=doublecircle' if v.normalized_level == 1 else ""
        lines.append('  n%d [label="%s"%s];' % (i, v.group.display, shape))
    for a, b in sorted(sorted(e) for e in graph.edges):
        lines.append("  n%d -- n%d;" % (a, b))
    lines.append("}")
    return "\n".join(lines) + "\n"
