"""Labeled partial-deterministic model of a cubical map into a RAAG's
one-vertex complex, and the free-homotopy decision for loops.

Vertices and labeled oriented edges describe the 1-skeleton together
with its labeling; optional square records let us check the local
convexity hypothesis.  Paths are coded as based words: a start vertex
plus a word whose letters are followed through the edge lookup table.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, NamedTuple

from .core import DefiningGraph, Letter, Word, inverse_word, parse_word
from .conjugacy import CyclicNormalFactors, cyclic_equal, cyclic_normal_factors
from .centralizer import CentralizerGens, centralizer_generators


class ComplexSyntaxError(ValueError):
    pass


class NotALoop(ValueError):
    pass


class UntraceableWord(ValueError):
    pass


class ReplayFailure(RuntimeError):
    """An event letter could not be traced from the current base vertex;
    impossible for a validated complex and a genuine based loop."""


class Edge(NamedTuple):
    eid: str
    src: str
    dst: str
    label: int  # generator index; positive orientation pulled back from the target complex


class CubeComplexMap:
    """Immutable after construction; the (vertex, letter) -> vertex
    lookup table is precomputed once and shared read-only."""

    def __init__(self, vertices: Iterable[str], edges: Iterable[Edge],
                 squares: Iterable[tuple[str, str, str, str]] | None = None):
        self.vertices = tuple(vertices)
        self.edges = tuple(edges)
        self.squares = tuple(tuple(sq) for sq in squares) if squares is not None else None
        self.delta: dict[tuple[str, Letter], str] = {}
        self._multi_keys: set[tuple[str, Letter]] = set()
        for e in self.edges:
            for key, dest in (((e.src, Letter(e.label, 1)), e.dst),
                              ((e.dst, Letter(e.label, -1)), e.src)):
                if key in self.delta:
                    self._multi_keys.add(key)
                else:
                    self.delta[key] = dest

    def letters_at(self, x: str):
        return [l for (v, l) in self.delta if v == x]


@dataclass(frozen=True)
class BasedWord:
    base: str
    word: Word
    end: str


@dataclass
class ValidationReport:
    determinism_ok: bool
    labels_ok: bool
    vertices_ok: bool
    squares_ok: bool
    convexity_checked: bool
    convexity_ok: bool | None
    problems: list[str]

    @property
    def ok(self) -> bool:
        return (self.determinism_ok and self.labels_ok and self.vertices_ok
                and self.squares_ok and self.convexity_ok is not False)

    def summary(self) -> str:
        lines = ["valid" if self.ok else "INVALID"]
        lines.append(f"determinism: {'ok' if self.determinism_ok else 'VIOLATED'}")
        lines.append(f"labels: {'ok' if self.labels_ok else 'VIOLATED'}")
        if self.convexity_checked:
            lines.append(f"convexity: {'ok' if self.convexity_ok else 'VIOLATED'}")
        else:
            lines.append("convexity: not checked (no squares given; hypothesis assumed)")
        lines.append("injectivity of universal covers: not checked (assumed)")
        lines.extend(self.problems)
        return "\n".join(lines)


def _square_corners(cx: CubeComplexMap, g: DefiningGraph, square, problems):
    """Corners contributed by one square record: for each orientation
    assignment that closes the boundary with opposite sides equal and
    commuting labels, each corner yields (vertex, {letter, letter})."""
    by_id = {e.eid: e for e in cx.edges}
    try:
        e1, e2, e3, e4 = (by_id[eid] for eid in square)
    except KeyError as exc:
        problems.append(f"square {square}: unknown edge id {exc.args[0]!r}")
        return set(), False
    corners = set()
    closed = False

    def endpoints(e: Edge, s: int):
        return (e.src, e.dst) if s == 1 else (e.dst, e.src)

    for s1, s2 in product((1, -1), repeat=2):
        s3, s4 = -s1, -s2
        if e1.label != e3.label or e2.label != e4.label:
            continue
        if not g.commutes(e1.label, e2.label):
            continue
        a1, b1 = endpoints(e1, s1)
        a2, b2 = endpoints(e2, s2)
        a3, b3 = endpoints(e3, s3)
        a4, b4 = endpoints(e4, s4)
        if not (b1 == a2 and b2 == a3 and b3 == a4 and b4 == a1):
            continue
        closed = True
        l1, l2 = e1.label, e2.label
        corners.add((a1, frozenset({Letter(l1, s1), Letter(l2, s2)})))
        corners.add((a2, frozenset({Letter(l1, -s1), Letter(l2, s2)})))
        corners.add((a3, frozenset({Letter(l1, -s1), Letter(l2, -s2)})))
        corners.add((a4, frozenset({Letter(l1, s1), Letter(l2, -s2)})))
    if not closed:
        problems.append(
            f"square {square}: no orientation closes the boundary with "
            "matching opposite labels and commuting sides")
    return corners, closed


def validate(cx: CubeComplexMap, g: DefiningGraph) -> ValidationReport:
    """Checks local determinism, label ranges, and (when squares are
    given) the convexity hypothesis at every vertex.  Global injectivity
    of universal covers is assumed, never verified."""
    problems: list[str] = []

    vertex_set = set(cx.vertices)
    vertices_ok = True
    for e in cx.edges:
        for v in (e.src, e.dst):
            if v not in vertex_set:
                vertices_ok = False
                problems.append(f"edge {e.eid}: unknown vertex {v!r}")

    determinism_ok = not cx._multi_keys
    for (v, l) in sorted(cx._multi_keys):
        problems.append(
            f"determinism violation at vertex {v}: more than one edge "
            f"realizes generator {l.gen} with sign {l.sign:+d}")

    labels_ok = True
    for e in cx.edges:
        if not 1 <= e.label <= g.n:
            labels_ok = False
            problems.append(f"edge {e.eid}: label {e.label} out of range 1..{g.n}")

    squares_ok = True
    convexity_ok: bool | None = None
    convexity_checked = cx.squares is not None
    if convexity_checked and labels_ok and vertices_ok:
        provided = set()
        for sq in cx.squares:
            corners, closed = _square_corners(cx, g, sq, problems)
            squares_ok = squares_ok and closed
            provided |= corners
        convexity_ok = True
        directions: dict[str, list[Letter]] = {x: [] for x in cx.vertices}
        for (v, l) in cx.delta:
            directions[v].append(l)
        for x in cx.vertices:
            ds = directions[x]
            for i in range(len(ds)):
                for j in range(i + 1, len(ds)):
                    d1, d2 = ds[i], ds[j]
                    if d1.gen == d2.gen or not g.commutes(d1.gen, d2.gen):
                        continue
                    if (x, frozenset({d1, d2})) not in provided:
                        convexity_ok = False
                        problems.append(
                            f"convexity violation at vertex {x}: commuting "
                            f"directions {d1} and {d2} have no square corner")
    elif convexity_checked:
        squares_ok = False

    return ValidationReport(determinism_ok, labels_ok, vertices_ok,
                            squares_ok, convexity_checked, convexity_ok, problems)


def trace(cx: CubeComplexMap, x: str, w: Word):
    """Follow the word's letters through the lookup table; None at the
    first undefined step."""
    delta = cx.delta
    for l in w:
        x = delta.get((x, l))
        if x is None:
            return None
    return x


def based_word(cx: CubeComplexMap, base: str, w: Word) -> BasedWord:
    if base not in cx.vertices:
        raise UntraceableWord(f"unknown vertex {base!r}")
    end = trace(cx, base, w)
    if end is None:
        raise UntraceableWord(f"word does not trace from vertex {base}")
    return BasedWord(base, w, end)


def based_cycle(cx: CubeComplexMap, bw: BasedWord) -> BasedWord:
    """Move the base along the loop's first edge and rotate the word."""
    if bw.base != bw.end:
        raise NotALoop(f"based word runs {bw.base} -> {bw.end}")
    if not bw.word:
        raise NotALoop("cannot cycle an empty loop word")
    nb = cx.delta.get((bw.base, bw.word[0]))
    if nb is None:
        raise UntraceableWord(f"letter {bw.word[0]} does not trace from {bw.base}")
    return BasedWord(nb, bw.word[1:] + bw.word[:1], nb)


def normalize_based(cx: CubeComplexMap, g: DefiningGraph,
                    bw: BasedWord) -> tuple[str, CyclicNormalFactors]:
    """Cyclic-normal-factor the loop word and replay the cycling-event
    log on the base vertex; cancellations and commutations leave the
    base fixed, so the events are all that matters."""
    if bw.base != bw.end:
        raise NotALoop(f"based word runs {bw.base} -> {bw.end}")
    factors = cyclic_normal_factors(g, bw.word)
    base = bw.base
    for ev in factors.events:
        nxt = cx.delta.get((base, ev.letter))
        if nxt is None:
            raise ReplayFailure(
                f"event letter {ev.letter} untraceable from {base}")
        base = nxt
    return base, factors


def reach_by_centralizer(cx: CubeComplexMap, x_start: str,
                         gens: CentralizerGens) -> set[str]:
    """Fixpoint of tracing each centralizer generator word (and its
    inverse) from already-reached vertices; monotone, at most one new
    vertex per expansion."""
    moves: list[Word] = []
    for z, _r in gens.roots:
        moves.append(z)
        moves.append(inverse_word(z))
    for l in sorted(gens.link_gens):
        moves.append((Letter(l, 1),))
        moves.append((Letter(l, -1),))
    visited = {x_start}
    frontier = [x_start]
    while frontier:
        nxt = []
        for x in frontier:
            for mv in moves:
                y = trace(cx, x, mv)
                if y is not None and y not in visited:
                    visited.add(y)
                    nxt.append(y)
        frontier = nxt
    return visited


def reach_by_preferred_enumeration(cx: CubeComplexMap, x_start: str,
                                   gens: CentralizerGens, norm_bound: int) -> set[str]:
    """Literal enumeration of preferred-form centralizer words: root
    powers in factor order followed by a link-letter tail, total norm
    bounded.  Cross-check oracle for the reachability fixpoint."""
    roots = [z for z, _r in gens.roots]
    link_letters = [Letter(l, s) for l in sorted(gens.link_gens) for s in (1, -1)]
    results: set[str] = set()

    def tail(x: str, budget: int, seen: set):
        if (x, budget) in seen:
            return
        seen.add((x, budget))
        results.add(x)
        if budget == 0:
            return
        for l in link_letters:
            y = cx.delta.get((x, l))
            if y is not None:
                tail(y, budget - 1, seen)

    def blocks(i: int, x: str, budget: int):
        if i == len(roots):
            tail(x, budget, set())
            return
        z = roots[i]
        for zword in (z, inverse_word(z)):
            y, spent = x, 0
            while True:
                blocks(i + 1, y, budget - spent)
                if spent == budget:
                    break
                y = trace(cx, y, zword)
                if y is None:
                    break
                spent += 1
            if not z:
                break

    blocks(0, x_start, norm_bound)
    return results


def groupoid_conjugate(cx: CubeComplexMap, g: DefiningGraph,
                       bw1: BasedWord, bw2: BasedWord,
                       method: str = "bfs") -> bool:
    """Decide whether two based loops are freely homotopic.

    Normalize both loops (carrying the base vertex along), compare the
    factor collections, align the first loop's factors onto the second's
    by based cyclings, then ask whether some centralizer word of the
    common cyclic normal form traces from the first base to the second.
    """
    for bw in (bw1, bw2):
        if bw.base != bw.end:
            raise NotALoop(f"based word runs {bw.base} -> {bw.end}")
    b1, f1 = normalize_based(cx, g, bw1)
    b2, f2 = normalize_based(cx, g, bw2)
    if f1.components != f2.components:
        return False
    for u, v in zip(f1.factors, f2.factors):
        if len(u) != len(v):
            return False
    # Align loop 1's factors onto loop 2's words; each cycled letter
    # moves the base one edge along that factor.
    for u, v in zip(f1.factors, f2.factors):
        t = cyclic_equal(u, v)
        if t is None:
            return False
        for l in u[:t]:
            nxt = cx.delta.get((b1, l))
            if nxt is None:
                raise ReplayFailure(f"alignment letter {l} untraceable from {b1}")
            b1 = nxt
    gens = centralizer_generators(g, f2)
    if method == "bfs":
        reach = reach_by_centralizer(cx, b1, gens)
    elif method == "enumerate":
        reach = reach_by_preferred_enumeration(cx, b1, gens, len(cx.vertices))
    else:
        raise ValueError(f"unknown method {method!r}")
    return b2 in reach


def parse_complex(text: str, g: DefiningGraph, source: str = "<string>") -> CubeComplexMap:
    """Complex file format: ``vertices <name>+``, lines
    ``edge <id> <src> <dst> <label>``, optional ``square <e> <e> <e> <e>``
    (boundary order); ``#`` starts a comment."""
    vertices: tuple[str, ...] | None = None
    edges: list[Edge] = []
    squares: list[tuple[str, str, str, str]] = []
    saw_square = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        kw = fields[0]
        if kw == "vertices":
            if vertices is not None:
                raise ComplexSyntaxError(f"{source}:{lineno}: repeated 'vertices' line")
            if len(fields) < 2:
                raise ComplexSyntaxError(f"{source}:{lineno}: 'vertices' needs at least one name")
            vertices = tuple(fields[1:])
        elif kw == "edge":
            if len(fields) != 5:
                raise ComplexSyntaxError(
                    f"{source}:{lineno}: 'edge' takes id, src, dst, label")
            eid, src, dst, label = fields[1:]
            try:
                gen = g.index(label)
            except ValueError:
                raise ComplexSyntaxError(
                    f"{source}:{lineno}: unknown generator label {label!r}") from None
            edges.append(Edge(eid, src, dst, gen))
        elif kw == "square":
            if len(fields) != 5:
                raise ComplexSyntaxError(f"{source}:{lineno}: 'square' takes four edge ids")
            saw_square = True
            squares.append(tuple(fields[1:]))
        else:
            raise ComplexSyntaxError(f"{source}:{lineno}: unknown directive {kw!r}")
    if vertices is None:
        raise ComplexSyntaxError(f"{source}: missing 'vertices' line")
    return CubeComplexMap(vertices, edges, squares if saw_square else None)


def load_complex(path: str, g: DefiningGraph) -> CubeComplexMap:
    with open(path, encoding="utf-8") as fh:
        return parse_complex(fh.read(), g, source=path)


def parse_based_word(cx: CubeComplexMap, g: DefiningGraph, text: str) -> BasedWord:
    """CLI syntax ``<vertex>: <word>``."""
    base, sep, rest = text.partition(":")
    if not sep:
        raise ComplexSyntaxError(f"based word {text!r} lacks a ':' separator")
    base = base.strip()
    w = parse_word(g, rest)
    return based_word(cx, base, w)
