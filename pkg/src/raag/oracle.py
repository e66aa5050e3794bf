"""Brute-force reference deciders for small instances.

Everything here works by computing closures of words (or based loops)
under elementary rewriting moves, with explicit bounds.  None of it
shares code with the piling pipeline; that independence is the point.
"""
from __future__ import annotations

from .core import DefiningGraph, Letter, Word


class BoundExceeded(RuntimeError):
    pass


def _swap_moves(g: DefiningGraph, w: Word):
    for i in range(len(w) - 1):
        a, b = w[i], w[i + 1]
        if a.gen != b.gen and g.commutes(a.gen, b.gen):
            yield w[:i] + (b, a) + w[i + 2:]


def _cancel_moves(w: Word):
    for i in range(len(w) - 1):
        if w[i].gen == w[i + 1].gen and w[i].sign == -w[i + 1].sign:
            yield w[:i] + w[i + 2:]


def _closure(g: DefiningGraph, w: Word, rotate: bool, max_states: int) -> frozenset:
    seen = {w}
    frontier = [w]
    while frontier:
        nxt = []
        for word in frontier:
            succs = list(_swap_moves(g, word))
            succs.extend(_cancel_moves(word))
            if rotate and word:
                succs.append(word[1:] + word[:1])
            for s in succs:
                if s not in seen:
                    seen.add(s)
                    nxt.append(s)
            if len(seen) > max_states:
                raise BoundExceeded(f"closure exceeded {max_states} states")
        frontier = nxt
    return frozenset(seen)


def oracle_equal(g: DefiningGraph, w: Word, v: Word,
                 max_len: int = 16, max_states: int = 500_000) -> bool:
    """Equality in the group by intersecting the closures of both words
    under adjacent commutation swaps and adjacent cancellations."""
    if len(w) + len(v) > max_len:
        raise BoundExceeded(f"combined length {len(w) + len(v)} exceeds {max_len}")
    cw = _closure(g, w, rotate=False, max_states=max_states)
    cv = _closure(g, v, rotate=False, max_states=max_states)
    return not cw.isdisjoint(cv)


def oracle_conjugate(g: DefiningGraph, w: Word, v: Word,
                     max_len: int = 16, max_states: int = 500_000) -> bool:
    """Conjugacy by intersecting closures under swaps, cancellations,
    and one-step cyclings: all three moves preserve the conjugacy
    class, and two conjugate words always share a cyclically reduced
    descendant."""
    if len(w) + len(v) > max_len:
        raise BoundExceeded(f"combined length {len(w) + len(v)} exceeds {max_len}")
    cw = _closure(g, w, rotate=True, max_states=max_states)
    cv = _closure(g, v, rotate=True, max_states=max_states)
    return not cw.isdisjoint(cv)


def _loop_closure(cx, g: DefiningGraph, base: str, w: Word,
                  max_states: int) -> frozenset:
    """Closure of a based loop under the four pullback-able moves:
    commutation swap, adjacent cancellation, based cycling, and
    parallel transport of the base along an edge whose label commutes
    with the loop's whole support."""
    all_letters = [Letter(i, s) for i in range(1, g.n + 1) for s in (1, -1)]

    def trace_ok(x, word):
        for l in word:
            x = cx.delta.get((x, l))
            if x is None:
                return False
        return True

    start = (base, w)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for x, word in frontier:
            succs = []
            for s in _swap_moves(g, word):
                succs.append((x, s))
            for s in _cancel_moves(word):
                succs.append((x, s))
            if word:
                y = cx.delta.get((x, word[0]))
                if y is not None:
                    succs.append((y, word[1:] + word[:1]))
            support = {l.gen for l in word}
            for l in all_letters:
                if all(g.commutes(l.gen, s) for s in support):
                    y = cx.delta.get((x, l))
                    if y is not None and trace_ok(y, word):
                        succs.append((y, word))
            for s in succs:
                if s not in seen:
                    seen.add(s)
                    nxt.append(s)
            if len(seen) > max_states:
                raise BoundExceeded(f"loop closure exceeded {max_states} states")
        frontier = nxt
    return frozenset(seen)


def oracle_groupoid_conjugate(cx, g: DefiningGraph, bw1, bw2,
                              max_states: int = 200_000) -> bool:
    """Free homotopy of based loops by intersecting their closures
    under the non-length-increasing loop moves."""
    c1 = _loop_closure(cx, g, bw1.base, bw1.word, max_states)
    c2 = _loop_closure(cx, g, bw2.base, bw2.word, max_states)
    return not c1.isdisjoint(c2)


def loop_class_key(cx, g: DefiningGraph, bw, max_states: int = 200_000):
    """A free-homotopy class invariant: the minimal state of the loop
    closure.  Two loops are freely homotopic iff their keys coincide
    (the minimal-length stratum of a class is mutually reachable, so it
    is shared exactly by homotopic loops)."""
    closure = _loop_closure(cx, g, bw.base, bw.word, max_states)
    return min((len(word), word, x) for x, word in closure)
