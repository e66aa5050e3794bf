"""Group presentations, letters, words, and support graphs.

A right-angled Artin group is given by its generators and the list of
commuting pairs.  Internally we store the *non*-commutation adjacency,
because that is what every algorithm downstream consumes: the tile of a
generator touches exactly the stacks of its non-commuting neighbours.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple


class PresentationError(ValueError):
    """Bad generator names or commutation pairs."""


class WordSyntaxError(ValueError):
    """Malformed word text."""


class Letter(NamedTuple):
    gen: int   # generator index, 1-based
    sign: int  # +1 or -1

    def inverse(self) -> "Letter":
        return Letter(self.gen, -self.sign)


# A word is a plain tuple of Letters; the empty tuple is the empty word.
Word = tuple


def inverse_word(w: Word) -> Word:
    return tuple(l.inverse() for l in reversed(w))


@dataclass(frozen=True)
class DefiningGraph:
    """A RAAG presentation: ordered generator names plus the
    non-commutation adjacency (an edge joins generators that do NOT
    commute).  Generator order is part of the contract: normal forms
    depend on it."""

    names: tuple[str, ...]
    noncommute: tuple[frozenset[int], ...]  # index 0 unused

    @property
    def n(self) -> int:
        return len(self.names)

    def check_gen(self, i: int) -> None:
        if not 1 <= i <= self.n:
            raise IndexError(f"generator index {i} out of range 1..{self.n}")

    def commutes(self, i: int, j: int) -> bool:
        """True iff a_i and a_j commute.  A generator does not count as
        commuting with itself (its tile puts a signed bead, not a 0, on
        its own stack)."""
        self.check_gen(i)
        self.check_gen(j)
        return i != j and j not in self.noncommute[i]

    def index(self, name: str) -> int:
        try:
            return self.names.index(name) + 1
        except ValueError:
            raise WordSyntaxError(f"unknown generator name {name!r}") from None

    def name(self, i: int) -> str:
        self.check_gen(i)
        return self.names[i - 1]


def build_graph(names: Iterable[str], commuting_pairs: Iterable[tuple[str, str]]) -> DefiningGraph:
    names = tuple(names)
    if len(set(names)) != len(names):
        raise PresentationError("duplicate generator name")
    if not names:
        raise PresentationError("at least one generator required")
    idx = {nm: i + 1 for i, nm in enumerate(names)}
    n = len(names)
    commuting: set[frozenset[int]] = set()
    for a, b in commuting_pairs:
        if a not in idx or b not in idx:
            bad = a if a not in idx else b
            raise PresentationError(f"unknown name {bad!r} in commuting pair")
        if a == b:
            raise PresentationError(f"self-pair ({a}, {b}) is not allowed")
        commuting.add(frozenset((idx[a], idx[b])))
    nbrs = [frozenset()]  # dummy slot 0
    for i in range(1, n + 1):
        nbrs.append(frozenset(
            j for j in range(1, n + 1)
            if j != i and frozenset((i, j)) not in commuting))
    return DefiningGraph(names, tuple(nbrs))


@dataclass(frozen=True)
class SupportGraph:
    """The full non-commutation subgraph spanned by the generators
    occurring in a word or piling, with its connected components in
    canonical order (each component sorted, components by minimum)."""

    vertices: frozenset[int]
    edges: frozenset[tuple[int, int]]
    components: tuple[tuple[int, ...], ...]


def support_of(w: Word) -> frozenset[int]:
    return frozenset(l.gen for l in w)


def support_graph(g: DefiningGraph, w: Word) -> SupportGraph:
    return support_graph_of_gens(g, support_of(w))


def support_graph_of_gens(g: DefiningGraph, gens: Iterable[int]) -> SupportGraph:
    verts = frozenset(gens)
    for i in verts:
        g.check_gen(i)
    edges = frozenset(
        (i, j) for i in verts for j in g.noncommute[i] if j in verts and i < j)
    components = []
    seen: set[int] = set()
    for start in sorted(verts):
        if start in seen:
            continue
        comp = {start}
        frontier = [start]
        while frontier:
            v = frontier.pop()
            for u in g.noncommute[v]:
                if u in verts and u not in comp:
                    comp.add(u)
                    frontier.append(u)
        seen |= comp
        components.append(tuple(sorted(comp)))
    return SupportGraph(verts, edges, tuple(components))


def parse_word(g: DefiningGraph, text: str) -> Word:
    """Parse whitespace-separated tokens ``name`` or ``name^k`` (k a
    nonzero integer, expanded to |k| letters)."""
    letters: list[Letter] = []
    for tok in text.split():
        name, sep, exp = tok.partition("^")
        if sep:
            try:
                k = int(exp)
            except ValueError:
                raise WordSyntaxError(f"malformed exponent in token {tok!r}") from None
            if k == 0:
                raise WordSyntaxError(f"zero exponent in token {tok!r}")
        else:
            k = 1
        i = g.index(name)
        sign = 1 if k > 0 else -1
        letters.extend([Letter(i, sign)] * abs(k))
    return tuple(letters)


def format_word(g: DefiningGraph, w: Word) -> str:
    """Canonical spelling: runs of one letter collapse to ``name^k``."""
    out: list[str] = []
    i = 0
    while i < len(w):
        j = i
        while j < len(w) and w[j] == w[i]:
            j += 1
        k = (j - i) * w[i].sign
        name = g.name(w[i].gen)
        out.append(name if k == 1 else f"{name}^{k}")
        i = j
    return " ".join(out)


def parse_presentation(text: str, source: str = "<string>") -> DefiningGraph:
    """Presentation file format: one ``gens <name>+`` line, then zero or
    more ``commute <name> <name>`` lines; ``#`` starts a comment."""
    names: tuple[str, ...] | None = None
    pairs: list[tuple[str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        kw = fields[0]
        if kw == "gens":
            if names is not None:
                raise PresentationError(f"{source}:{lineno}: repeated 'gens' line")
            if len(fields) < 2:
                raise PresentationError(f"{source}:{lineno}: 'gens' needs at least one name")
            names = tuple(fields[1:])
        elif kw == "commute":
            if len(fields) != 3:
                raise PresentationError(f"{source}:{lineno}: 'commute' takes exactly two names")
            pairs.append((fields[1], fields[2]))
        else:
            raise PresentationError(f"{source}:{lineno}: unknown directive {kw!r}")
    if names is None:
        raise PresentationError(f"{source}: missing 'gens' line")
    try:
        return build_graph(names, pairs)
    except PresentationError as e:
        raise PresentationError(f"{source}: {e}") from None


def load_presentation(path: str) -> DefiningGraph:
    with open(path, encoding="utf-8") as fh:
        return parse_presentation(fh.read(), source=path)
