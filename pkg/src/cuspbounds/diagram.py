"""Combinatorial planar knot diagrams: PD codes, braid closures, faces.

A diagram is a sequence of 4-valent crossings. Each crossing lists its four
incident edge labels counterclockwise starting from the incoming
under-strand, so slots 0 and 2 carry the under-strand and slots 1 and 3 the
over-strand. The slot order doubles as the rotation system: it is all the
embedding data needed to trace strands and traverse faces, and planarity is
enforced through the Euler count (a connected knot diagram on the sphere has
exactly c + 2 faces).

Darts are pairs (crossing index, slot). Two involutions generate everything:

* ``across``    -- (ci, si) <-> (ci, si + 2 mod 4), the strand running
                   straight through a crossing;
* ``partner``   -- the other occurrence of the same edge label.

Strand components are the orbits of the group generated by both involutions;
faces are the orbits of ``rotate(partner(dart))``, the usual turn-left rule
for combinatorial maps.

Braid closures are emitted so that a positive generator takes the strand
entering from the higher-numbered position underneath. With that chirality
the all-B smoothing of a positive braid closure reproduces the braid-strand
(Seifert) circles, which is the calibration the state machinery relies on.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property

from .errors import (
    BadGeneratorIndex,
    ClosureIsLink,
    EdgeLabelUsedOtherThanTwice,
    EmptyDiagram,
    FewerThanTwoStrands,
    MalformedToken,
    MultiComponentLink,
    NonPlanarDiagram,
    ZeroExponent,
)

Dart = tuple[int, int]


@dataclass(frozen=True)
class Crossing:
    """Four edge labels, counterclockwise from the incoming under-strand."""

    slots: tuple[int, int, int, int]

    def __post_init__(self) -> None:
        if len(self.slots) != 4:
            raise MalformedToken(f"crossing needs 4 edge labels, got {self.slots!r}")
        if any(not isinstance(s, int) or s < 1 for s in self.slots):
            raise MalformedToken(f"edge labels must be positive integers: {self.slots!r}")


@dataclass(frozen=True)
class Face:
    """One complementary region, as the cyclic list of darts along it."""

    boundary: tuple[Dart, ...]
    is_alternating_bigon: bool

    @property
    def degree(self) -> int:
        return len(self.boundary)


@dataclass(frozen=True)
class PlanarDiagram:
    """A validated one-component 4-valent diagram with rotation system."""

    crossings: tuple[Crossing, ...]

    def __post_init__(self) -> None:
        if not self.crossings:
            raise EmptyDiagram("diagram has no crossings")
        counts: dict[int, int] = {}
        for x in self.crossings:
            for label in x.slots:
                counts[label] = counts.get(label, 0) + 1
        bad = sorted(label for label, n in counts.items() if n != 2)
        if bad:
            raise EdgeLabelUsedOtherThanTwice(f"edge labels not used exactly twice: {bad}")
        n_comp = self._component_count()
        if n_comp != 1:
            raise MultiComponentLink(f"strand trace gives {n_comp} components, expected a knot")
        if len(self.faces) != self.c + 2:
            raise NonPlanarDiagram(
                f"face traversal gives {len(self.faces)} faces, expected c + 2 = {self.c + 2}"
            )

    # -- basic counts ------------------------------------------------------

    @property
    def c(self) -> int:
        return len(self.crossings)

    @property
    def edge_count(self) -> int:
        return 2 * self.c

    # -- dart structure ----------------------------------------------------

    @cached_property
    def edge_partner(self) -> dict[Dart, Dart]:
        """The involution pairing the two occurrences of each edge label."""
        open_end: dict[int, Dart] = {}
        partner: dict[Dart, Dart] = {}
        for ci, x in enumerate(self.crossings):
            for si, label in enumerate(x.slots):
                if label in open_end:
                    other = open_end.pop(label)
                    partner[other] = (ci, si)
                    partner[(ci, si)] = other
                else:
                    open_end[label] = (ci, si)
        return partner

    def _component_count(self) -> int:
        darts = [(ci, si) for ci in range(self.c) for si in range(4)]
        partner = self.edge_partner
        seen: set[Dart] = set()
        components = 0
        for start in darts:
            if start in seen:
                continue
            components += 1
            stack = [start]
            while stack:
                d = stack.pop()
                if d in seen:
                    continue
                seen.add(d)
                ci, si = d
                stack.append((ci, (si + 2) % 4))
                stack.append(partner[d])
        return components

    @cached_property
    def faces(self) -> tuple[Face, ...]:
        """Faces of the rotation system (turn-left orbits of the darts)."""
        partner = self.edge_partner
        seen: set[Dart] = set()
        faces: list[Face] = []
        for ci in range(self.c):
            for si in range(4):
                start = (ci, si)
                if start in seen:
                    continue
                orbit: list[Dart] = []
                d = start
                while d not in seen:
                    seen.add(d)
                    orbit.append(d)
                    pc, ps = partner[d]
                    d = (pc, (ps + 1) % 4)
                faces.append(Face(tuple(orbit), self._is_alternating_bigon(orbit)))
        return tuple(faces)

    @staticmethod
    def _is_alternating_bigon(orbit: list[Dart]) -> bool:
        # A bigon's two edges alternate over/under exactly when the two darts
        # sit on equal-parity slots (slots 0/2 are under, 1/3 are over).
        if len(orbit) != 2:
            return False
        (c1, s1), (c2, s2) = orbit
        return c1 != c2 and s1 % 2 == s2 % 2

    # -- serialization -----------------------------------------------------

    def pd_string(self) -> str:
        """Canonical PD text; round-trips through :func:`parse_pd`."""
        return " ".join("X[%d,%d,%d,%d]" % x.slots for x in self.crossings)


def _normalized(raw: list[tuple[int, int, int, int]]) -> PlanarDiagram:
    """Relabel edges 1..2c in order of first appearance and validate."""
    relabel: dict[int, int] = {}
    crossings = []
    for tup in raw:
        slots = []
        for label in tup:
            if label not in relabel:
                relabel[label] = len(relabel) + 1
            slots.append(relabel[label])
        crossings.append(Crossing(tuple(slots)))
    return PlanarDiagram(tuple(crossings))


# --------------------------------------------------------------------------
# PD-code text
# --------------------------------------------------------------------------

_PD_TOKEN = re.compile(
    r"[Xx]?\s*[\[\(]\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*[\]\)]"
)


def parse_pd(text: str) -> PlanarDiagram:
    """Parse PD-code text like ``X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]``.

    Tuples may also be written ``(a,b,c,d)`` and separated by whitespace
    and/or commas. Edge labels are normalized to 1..2c on parse.
    """
    stripped = text.strip()
    if not stripped:
        raise EmptyDiagram("no crossings in input")
    raw: list[tuple[int, int, int, int]] = []
    pos = 0
    while pos < len(stripped):
        m = _PD_TOKEN.match(stripped, pos)
        if m is None:
            raise MalformedToken(f"unrecognized PD token at: {stripped[pos:pos + 20]!r}")
        raw.append(tuple(int(g) for g in m.groups()))
        pos = m.end()
        while pos < len(stripped) and (stripped[pos].isspace() or stripped[pos] == ","):
            pos += 1
    if any(label < 1 for tup in raw for label in tup):
        raise MalformedToken("edge labels must be positive")
    return _normalized(raw)


def serialize_pd(diagram: PlanarDiagram) -> str:
    return diagram.pd_string()


def faces(diagram: PlanarDiagram) -> tuple[Face, ...]:
    """The diagram's faces; function form of :attr:`PlanarDiagram.faces`."""
    return diagram.faces


# --------------------------------------------------------------------------
# Braid words
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class BraidWord:
    """A braid word as (generator index, nonzero exponent) syllables."""

    strands: int
    syllables: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.strands < 2:
            raise FewerThanTwoStrands(f"need at least 2 strands, got {self.strands}")
        for i, r in self.syllables:
            if not 1 <= i <= self.strands - 1:
                raise BadGeneratorIndex(f"generator s{i} outside 1..{self.strands - 1}")
            if r == 0:
                raise ZeroExponent(f"syllable s{i}^0 is empty")
        for (i, _), (j, _) in zip(self.syllables, self.syllables[1:]):
            if i == j:
                raise MalformedToken("adjacent syllables share a generator; merge them first")

    @property
    def crossing_count(self) -> int:
        return sum(abs(r) for _, r in self.syllables)

    def permutation(self) -> list[int]:
        """Where each starting position ends up (0-based positions)."""
        perm = list(range(self.strands))
        for i, r in self.syllables:
            if r % 2 == 1:
                a = i - 1
                perm[a], perm[a + 1] = perm[a + 1], perm[a]
        return perm

    def closure_component_count(self) -> int:
        """Cycles of the underlying permutation = components of the closure."""
        perm = self.permutation()
        seen = [False] * self.strands
        cycles = 0
        for s in range(self.strands):
            if seen[s]:
                continue
            cycles += 1
            while not seen[s]:
                seen[s] = True
                s = perm[s]
        return cycles

    def mirrored(self) -> "BraidWord":
        return BraidWord(self.strands, tuple((i, -r) for i, r in self.syllables))

    def text(self) -> str:
        return f"{self.strands}: " + " ".join(f"s{i}^{r}" for i, r in self.syllables)


_BRAID_SYLLABLE = re.compile(r"s(\d+)\^(-?\d+)$")


def parse_braid(text: str) -> BraidWord:
    """Parse braid text like ``3: s1^3 s2^-3`` (strand count, then syllables).

    Adjacent syllables on the same generator are merged; a merge that cancels
    to exponent zero drops the syllable and merging continues.
    """
    head, sep, body = text.partition(":")
    if not sep:
        raise MalformedToken("braid text must look like 'n: s1^2 s2^-1 ...'")
    try:
        strands = int(head.strip())
    except ValueError:
        raise MalformedToken(f"bad strand count {head.strip()!r}") from None
    tokens = body.split()
    if not tokens:
        raise MalformedToken("braid word has no syllables")
    merged: list[list[int]] = []
    for tok in tokens:
        m = _BRAID_SYLLABLE.match(tok)
        if m is None:
            raise MalformedToken(f"unrecognized braid syllable {tok!r}")
        i, r = int(m.group(1)), int(m.group(2))
        if r == 0:
            raise ZeroExponent(f"syllable {tok!r} has exponent zero")
        if merged and merged[-1][0] == i:
            merged[-1][1] += r
            if merged[-1][1] == 0:
                merged.pop()
        else:
            merged.append([i, r])
    if not merged:
        raise MalformedToken("braid word cancels to the empty word")
    return BraidWord(strands, tuple((i, r) for i, r in merged))


def braid_closure(word: BraidWord) -> PlanarDiagram:
    """Close a braid into a knot diagram; rejects multi-component closures.

    Crossings are stacked top to bottom in word order. A positive generator
    crosses the strand from position i over the strand from position i + 1;
    in slot terms (counterclockwise from the incoming under-strand) a
    positive crossing reads (NE, NW, SW, SE) and a negative one
    (NW, SW, SE, NE), where NW/NE are the incoming edges at positions
    i/i + 1 and SW/SE the outgoing ones.
    """
    n_comp = word.closure_component_count()
    if n_comp != 1:
        raise ClosureIsLink(f"closure has {n_comp} components, expected a knot")
    n = word.strands
    top = list(range(1, n + 1))
    cur = list(top)
    fresh = n + 1
    raw: list[tuple[int, int, int, int]] = []
    for i, r in word.syllables:
        a = i - 1
        for _ in range(abs(r)):
            out_l, out_r = fresh, fresh + 1
            fresh += 2
            if r > 0:
                raw.append((cur[a + 1], cur[a], out_l, out_r))
            else:
                raw.append((cur[a], out_l, out_r, cur[a + 1]))
            cur[a], cur[a + 1] = out_l, out_r
    # Closure arcs identify each strand's bottom label with its top label.
    closing = {cur[p]: top[p] for p in range(n)}
    raw = [tuple(closing.get(label, label) for label in tup) for tup in raw]
    return _normalized(raw)


# --------------------------------------------------------------------------
# Mirrors
# --------------------------------------------------------------------------

def mirror(diagram: PlanarDiagram) -> PlanarDiagram:
    """The reflected diagram: each crossing's cyclic slot order reversed.

    The incoming under-strand stays at slot 0; reversing the rotation swaps
    the roles of the two smoothings, so downstream A/B quantities swap.
    """
    raw = [(x.slots[0], x.slots[3], x.slots[2], x.slots[1]) for x in diagram.crossings]
    return _normalized(raw)
