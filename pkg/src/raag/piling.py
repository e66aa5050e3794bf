"""The piling data structure and its linear-time algorithms.

A piling is one stack of beads per generator, beads drawn from
``{+1, -1, 0}``.  A letter a_i^e contributes a *tile*: one signed bead
on stack i plus a 0 bead on every stack whose generator does not
commute with a_i.  Tiles are never stored explicitly; the footprint is
recomputed from the defining graph whenever a tile is moved.

All public operations are pure: they copy their input piling and
return fresh values.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .core import DefiningGraph, Letter, Word, support_graph_of_gens

PLUS = 1
MINUS = -1
ZERO = 0

_BEAD_CHAR = {PLUS: "+", MINUS: "-", ZERO: "0"}


class PilingError(ValueError):
    pass


class ExtractionStuck(PilingError):
    """A nonempty stack remains but no stack starts with a signed bead:
    the abstract piling is not in the image of the word-to-piling map."""


class EmptyPiling(PilingError):
    pass


class NoBottomTile(PilingError):
    pass


class SplitInput(PilingError):
    pass


class NotCyclicallyReduced(PilingError):
    pass


@dataclass(frozen=True)
class CyclingEvent:
    """One replayable base-vertex-affecting step: the letter of a tile
    that was cycled bottom-to-top, or the bottom letter of a cyclic
    reduction (a cyclic reduction is a cycling followed by a
    cancellation, so it moves a base vertex the same way)."""

    letter: Letter
    kind: str  # "cycling" or "reduction"
    factor: tuple[int, ...] | None = None


class Piling:
    """N bead stacks over {+,-,0}; bottom of each stack is the left end."""

    __slots__ = ("graph", "stacks", "signed_count")

    def __init__(self, graph: DefiningGraph):
        self.graph = graph
        self.stacks: list[deque] = [deque() for _ in range(graph.n + 1)]  # slot 0 unused
        self.signed_count = 0

    def copy(self) -> "Piling":
        q = Piling(self.graph)
        q.stacks = [deque(s) for s in self.stacks]
        q.signed_count = self.signed_count
        return q

    def is_empty(self) -> bool:
        return all(not s for s in self.stacks)

    def push(self, letter: Letter) -> None:
        """Append one tile, cancelling against an opposite signed bead
        on top of the letter's own stack if present (in which case the
        trailing 0 beads of the non-commuting stacks go too)."""
        gen, sign = letter
        s = self.stacks[gen]
        if s and s[-1] == -sign:
            s.pop()
            for j in self.graph.noncommute[gen]:
                self.stacks[j].pop()
            self.signed_count -= 1
        else:
            s.append(sign)
            for j in self.graph.noncommute[gen]:
                self.stacks[j].append(ZERO)
            self.signed_count += 1

    def support(self) -> frozenset[int]:
        return frozenset(
            i for i in range(1, self.graph.n + 1)
            if any(b != ZERO for b in self.stacks[i]))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Piling):
            return NotImplemented
        return (self.graph.names == other.graph.names
                and all(tuple(a) == tuple(b) for a, b in zip(self.stacks, other.stacks)))

    def __repr__(self) -> str:
        return f"<Piling {self.signed_count} signed beads>"


def format_piling(p: Piling) -> str:
    """Debug serialization: one line per stack, beads bottom-to-top."""
    lines = []
    for i in range(1, p.graph.n + 1):
        beads = " ".join(_BEAD_CHAR[b] for b in p.stacks[i])
        lines.append(f"{p.graph.name(i)}: {beads}".rstrip())
    return "\n".join(lines)


def push_letter(p: Piling, letter: Letter) -> Piling:
    q = p.copy()
    q.push(letter)
    return q


def pi_star(g: DefiningGraph, w: Word) -> Piling:
    """Left fold of the push rule over the word; O(length) with a
    constant depending only on the graph."""
    p = Piling(g)
    stacks = p.stacks
    nbrs = g.noncommute
    count = 0
    for gen, sign in w:
        s = stacks[gen]
        if s and s[-1] == -sign:
            s.pop()
            for j in nbrs[gen]:
                stacks[j].pop()
            count -= 1
        else:
            s.append(sign)
            for j in nbrs[gen]:
                stacks[j].append(ZERO)
            count += 1
    p.signed_count = count
    return p


def _pop_bottom_tile(p: Piling, i: int) -> int:
    """Remove the bottom a_i-tile in place; returns its sign."""
    sign = p.stacks[i].popleft()
    for j in p.graph.noncommute[i]:
        if not p.stacks[j] or p.stacks[j][0] != ZERO:
            raise ExtractionStuck(
                f"stack {j} does not start with a 0 bead under the bottom tile of {i}")
    for j in p.graph.noncommute[i]:
        p.stacks[j].popleft()
    p.signed_count -= 1
    return sign


def _largest_extractable(p: Piling, exclude: int = 0) -> int:
    """Largest index whose stack starts with a signed bead, or 0."""
    for i in range(p.graph.n, 0, -1):
        if i != exclude and p.stacks[i] and p.stacks[i][0] != ZERO:
            return i
    return 0


def sigma_star(p: Piling) -> Word:
    """Extract the normal word: always emit the largest generator index
    whose stack starts with a signed bead, then remove its bottom tile."""
    q = p.copy()
    out: list[Letter] = []
    while q.signed_count:
        i = _largest_extractable(q)
        if i == 0:
            raise ExtractionStuck("no stack starts with a signed bead")
        sign = _pop_bottom_tile(q, i)
        out.append(Letter(i, sign))
    if not q.is_empty():
        raise ExtractionStuck("0 beads left over after extracting all signed beads")
    return tuple(out)


def is_cyclically_reduced(p: Piling) -> bool:
    return all(
        not (len(s) >= 2 and s[0] != ZERO and s[-1] == -s[0])
        for s in p.stacks[1:])


def cyclic_reduce(p: Piling) -> tuple[Piling, list[CyclingEvent]]:
    """Remove matching top/bottom tile pairs of opposite signs until no
    stack starts with one sign and ends with the other."""
    q = p.copy()
    events: list[CyclingEvent] = []
    n = q.graph.n
    changed = True
    while changed:
        changed = False
        for i in range(1, n + 1):
            s = q.stacks[i]
            while len(s) >= 2 and s[0] != ZERO and s[-1] == -s[0]:
                sign = s[0]
                s.popleft()
                s.pop()
                for j in q.graph.noncommute[i]:
                    q.stacks[j].popleft()
                    q.stacks[j].pop()
                q.signed_count -= 2
                events.append(CyclingEvent(Letter(i, sign), "reduction"))
                changed = True
    return q, events


def _apex(p: Piling) -> int:
    """Smallest index whose stack contains a signed bead, or 0."""
    for i in range(1, p.graph.n + 1):
        if any(b != ZERO for b in p.stacks[i]):
            return i
    return 0


def _zero_factor_letters(p: Piling) -> list[Letter]:
    """Extraction order of the 0-factor: repeatedly remove the bottom
    tile of the largest extractable non-apex stack.  Mutates p."""
    apex = _apex(p)
    letters: list[Letter] = []
    while True:
        j = _largest_extractable(p, exclude=apex)
        if j == 0:
            return letters
        sign = _pop_bottom_tile(p, j)
        letters.append(Letter(j, sign))


def decompose(p: Piling) -> tuple[Piling, Piling]:
    """Unique splitting p = p0 . p1 with p1 pyramidal (apex = smallest
    index carrying a signed bead) and p0 free of apex beads."""
    if p.is_empty():
        raise EmptyPiling("cannot decompose the empty piling")
    p1 = p.copy()
    letters = _zero_factor_letters(p1)
    p0 = Piling(p.graph)
    for gen, sign in letters:
        p0.stacks[gen].append(sign)
        for j in p.graph.noncommute[gen]:
            p0.stacks[j].append(ZERO)
        p0.signed_count += 1
    return p0, p1


def cycle_bottom(p: Piling, i: int) -> tuple[Piling, CyclingEvent]:
    """Move the bottom a_i-tile to the top of its stacks."""
    q = p.copy()
    s = q.stacks[i]
    if not s or s[0] == ZERO:
        raise NoBottomTile(f"stack {i} does not start with a signed bead")
    sign = s.popleft()
    s.append(sign)
    for j in q.graph.noncommute[i]:
        q.stacks[j].popleft()
        q.stacks[j].append(ZERO)
    return q, CyclingEvent(Letter(i, sign), "cycling")


def is_pyramidal(p: Piling) -> bool:
    apex = _apex(p)
    if apex == 0:
        return False
    for i in range(1, p.graph.n + 1):
        s = p.stacks[i]
        if i != apex and s and s[0] != ZERO:
            return False
    return p.stacks[apex][0] != ZERO


def _pyramidalize(p: Piling) -> tuple[Piling, list[CyclingEvent], int]:
    """Returns (pyramidal piling, cycling events, number of passes)."""
    if p.is_empty():
        raise EmptyPiling("cannot pyramidalize the empty piling")
    if not is_cyclically_reduced(p):
        raise NotCyclicallyReduced("input piling admits a cyclic reduction")
    supp = p.support()
    if len(support_graph_of_gens(p.graph, supp).components) != 1:
        raise SplitInput("support graph is disconnected")
    q = p.copy()
    events: list[CyclingEvent] = []
    passes = 0
    while True:
        sim = q.copy()
        letters = _zero_factor_letters(sim)
        if not letters:
            return q, events, passes
        passes += 1
        for gen, sign in letters:
            q, ev = cycle_bottom(q, gen)
            events.append(ev)


def pyramidalize(p: Piling) -> tuple[Piling, list[CyclingEvent]]:
    """Cycle 0-factor tiles bottom-to-top until the piling is pyramidal.
    The number of passes is bounded by the eccentricity of the apex in
    the support graph, hence by the number of generators."""
    q, events, _ = _pyramidalize(p)
    return q, events


def split_components(p: Piling) -> list[Piling]:
    """One piling per connected component of the support graph, ordered
    by minimal generator index; the factors commute pairwise and their
    product is equivalent to p."""
    if p.is_empty():
        return []
    w = sigma_star(p)
    sg = support_graph_of_gens(p.graph, p.support())
    out = []
    for comp in sg.components:
        members = set(comp)
        out.append(pi_star(p.graph, tuple(l for l in w if l.gen in members)))
    return out
