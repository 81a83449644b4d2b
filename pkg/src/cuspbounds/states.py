"""Smoothing states, state circles, state graphs, adequacy, twist regions.

Every crossing can be smoothed two ways. With slots listed counterclockwise
from the incoming under-strand, the A-smoothing joins slots (0,1) and (2,3)
and the B-smoothing joins slots (0,3) and (1,2). The resulting disjoint
circles are counted with a union-find over edge labels; the state graph has
one vertex per circle and one edge per crossing (connecting the circles its
two smoothing arcs land on). A state graph with no edge from a circle to
itself on both the all-A and all-B sides makes the diagram adequate.

Derived quantities: vA and vB are the all-A/all-B circle counts, the
checkerboard Euler characteristics are vA - c and vB - c, the diagram genus
is (2 - vA - vB + c)/2 (zero for alternating diagrams, and only for them
once nugatory kinks are untwisted), and the ratio delta = (2g - 2)/c is
kept as an exact rational because it feeds threshold comparisons
downstream.

Twist regions are maximal chains of alternating bigon faces (a lone crossing
counts as a region of its own), so the twist number is t = c - (number of
alternating bigons). When the bigons close into a single cycle through every
crossing the diagram belongs to a (2, p) torus knot; that degenerate case is
flagged and t is reported as 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Mapping

from .diagram import Face, PlanarDiagram
from .errors import NonAlternatingBigon, NonIntegerGenus, StateLengthMismatch


class Smoothing(str, Enum):
    A = "A"
    B = "B"


StateAssignment = tuple[Smoothing, ...]


def uniform_state(c: int, choice: Smoothing) -> StateAssignment:
    return (choice,) * c


def state_from_string(text: str) -> StateAssignment:
    return tuple(Smoothing(ch) for ch in text.upper())


class _UnionFind:
    def __init__(self, items: Iterable[int]):
        self.parent = {x: x for x in items}

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[ry] = rx


@dataclass(frozen=True)
class StateGraph:
    """Vertices are state circles; one edge per crossing."""

    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    @property
    def has_loop(self) -> bool:
        return any(u == v for u, v in self.edges)

    def loop_edges(self) -> tuple[int, ...]:
        return tuple(i for i, (u, v) in enumerate(self.edges) if u == v)


@dataclass(frozen=True)
class StateSummary:
    """Result of resolving every crossing of a diagram in one state."""

    circle_count: int
    circle_of_strand: Mapping[int, int]
    graph: StateGraph

    def to_dict(self) -> dict:
        return {
            "circleCount": self.circle_count,
            "circleOfStrand": {str(k): v for k, v in sorted(self.circle_of_strand.items())},
            "graph": {
                "vertexCount": self.graph.vertex_count,
                "edges": [list(edge) for edge in self.graph.edges],
            },
        }


def _smoothing_arcs(slots: tuple[int, int, int, int], choice: Smoothing):
    if choice is Smoothing.A:
        return (slots[0], slots[1]), (slots[2], slots[3])
    return (slots[0], slots[3]), (slots[1], slots[2])


def resolve(diagram: PlanarDiagram, state: StateAssignment) -> StateSummary:
    """Smooth every crossing per ``state`` and collect circles and graph."""
    if len(state) != diagram.c:
        raise StateLengthMismatch(f"state has {len(state)} choices for {diagram.c} crossings")
    labels = sorted({label for x in diagram.crossings for label in x.slots})
    uf = _UnionFind(labels)
    for x, choice in zip(diagram.crossings, state):
        for a, b in _smoothing_arcs(x.slots, choice):
            uf.union(a, b)
    circle_ids: dict[int, int] = {}
    circle_of_strand: dict[int, int] = {}
    for label in labels:
        root = uf.find(label)
        if root not in circle_ids:
            circle_ids[root] = len(circle_ids)
        circle_of_strand[label] = circle_ids[root]
    edges = []
    for x, choice in zip(diagram.crossings, state):
        arc1, arc2 = _smoothing_arcs(x.slots, choice)
        edges.append((circle_of_strand[arc1[0]], circle_of_strand[arc2[0]]))
    graph = StateGraph(len(circle_ids), tuple(edges))
    return StateSummary(len(circle_ids), circle_of_strand, graph)


def adequacy(diagram: PlanarDiagram) -> tuple[bool, bool]:
    """Loop-freeness of the all-A and all-B state graphs."""
    all_a = resolve(diagram, uniform_state(diagram.c, Smoothing.A))
    all_b = resolve(diagram, uniform_state(diagram.c, Smoothing.B))
    return (not all_a.graph.has_loop, not all_b.graph.has_loop)


@dataclass(frozen=True)
class DiagramInvariants:
    """Counts and ratios read off the two extreme states of one diagram.

    For adequate diagrams these are invariants of the underlying knot: the
    crossing number is realized and the diagram genus equals the knot's
    (``invariants_are_knot_invariants`` records that).
    """

    c: int
    v_a: int
    v_b: int
    chi_a: int
    chi_b: int
    g_t_diagram: int
    a_adequate: bool
    b_adequate: bool
    delta: Fraction

    @property
    def adequate(self) -> bool:
        return self.a_adequate and self.b_adequate

    @property
    def invariants_are_knot_invariants(self) -> bool:
        return self.adequate

    def to_dict(self) -> dict:
        return {
            "c": self.c,
            "vA": self.v_a,
            "vB": self.v_b,
            "chiA": self.chi_a,
            "chiB": self.chi_b,
            "gT": self.g_t_diagram,
            "delta": {"num": self.delta.numerator, "den": self.delta.denominator},
            "aAdequate": self.a_adequate,
            "bAdequate": self.b_adequate,
            "adequate": self.adequate,
        }


def invariants(diagram: PlanarDiagram) -> DiagramInvariants:
    """Circle counts, Euler characteristics, diagram genus, adequacy."""
    c = diagram.c
    all_a = resolve(diagram, uniform_state(c, Smoothing.A))
    all_b = resolve(diagram, uniform_state(c, Smoothing.B))
    v_a, v_b = all_a.circle_count, all_b.circle_count
    two_g = 2 - v_a - v_b + c
    if two_g % 2 != 0:
        raise NonIntegerGenus(f"2 - vA - vB + c = {two_g} is odd; diagram data corrupted")
    g_t = two_g // 2
    a_ok, b_ok = (not all_a.graph.has_loop, not all_b.graph.has_loop)
    return DiagramInvariants(
        c=c,
        v_a=v_a,
        v_b=v_b,
        chi_a=v_a - c,
        chi_b=v_b - c,
        g_t_diagram=g_t,
        a_adequate=a_ok,
        b_adequate=b_ok,
        delta=Fraction(2 * g_t - 2, c),
    )


@dataclass(frozen=True)
class TwistSummary:
    t: int
    v_bi: int
    v_nb: int
    torus_degenerate: bool

    def to_dict(self) -> dict:
        return {
            "t": self.t,
            "vBi": self.v_bi,
            "vNb": self.v_nb,
            "torusDegenerate": self.torus_degenerate,
        }


def twist_analysis(diagram: PlanarDiagram, faces: Iterable[Face]) -> TwistSummary:
    """Count alternating bigons and twist regions (t = c - bigons).

    A degree-2 face between two distinct crossings whose strands do not
    alternate is a reducible clasp; that aborts the analysis because the
    twist count of a non-reduced diagram is meaningless.
    """
    v_bi = 0
    for face in faces:
        if face.degree != 2:
            continue
        (c1, _), (c2, _) = face.boundary
        if c1 == c2:
            continue
        if not face.is_alternating_bigon:
            raise NonAlternatingBigon(
                f"non-alternating bigon between crossings {c1} and {c2}", face=face
            )
        v_bi += 1
    inv_counts = invariants(diagram)
    v_nb = (inv_counts.v_a + inv_counts.v_b) - v_bi
    torus_degenerate = v_bi == diagram.c
    t = 1 if torus_degenerate else diagram.c - v_bi
    return TwistSummary(t=t, v_bi=v_bi, v_nb=v_nb, torus_degenerate=torus_degenerate)
