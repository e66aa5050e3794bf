"""Normal forms, cyclic normal forms, and the conjugacy decision.

The whole pipeline is: word -> piling -> cyclic reduction -> split into
non-split factors -> pyramidalize each factor -> extract.  Each factor
then carries a cyclic normal form, unique for its conjugacy class up to
rotation, so conjugacy reduces to cyclic string equality per factor.
"""
from __future__ import annotations

from dataclasses import dataclass, replace

from .core import DefiningGraph, Word
from .piling import (
    CyclingEvent,
    cyclic_reduce,
    is_cyclically_reduced,
    pi_star,
    pyramidalize,
    sigma_star,
    split_components,
)


@dataclass(frozen=True)
class CyclicNormalFactors:
    """Mutually commuting cyclic normal forms, one per connected
    component of the support graph, with the cycling-event log that
    produced them (cyclic reductions first, tagged factor=None, then
    per-factor cyclings tagged with the component's vertex tuple)."""

    factors: tuple[Word, ...]
    components: tuple[tuple[int, ...], ...]
    events: tuple[CyclingEvent, ...]

    def concat(self) -> Word:
        return tuple(l for f in self.factors for l in f)


def normal_form(g: DefiningGraph, w: Word) -> Word:
    return sigma_star(pi_star(g, w))


def is_normal(g: DefiningGraph, w: Word) -> bool:
    return w == normal_form(g, w)


def is_cyclic_normal(g: DefiningGraph, w: Word) -> bool:
    """A cyclically reduced word all of whose rotations are normal.
    Every rotation is a factor of the doubled word and factors of
    normal words are normal, so one normality check of ww suffices."""
    if not w:
        return True
    if not is_normal(g, w):
        return False
    if not is_cyclically_reduced(pi_star(g, w)):
        return False
    return is_normal(g, w + w)


def cyclic_normal_factors(g: DefiningGraph, w: Word) -> CyclicNormalFactors:
    p = pi_star(g, w)
    p, red_events = cyclic_reduce(p)
    events = list(red_events)
    factors: list[Word] = []
    components: list[tuple[int, ...]] = []
    for part in split_components(p):
        key = tuple(sorted(part.support()))
        pyr, evs = pyramidalize(part)
        events.extend(replace(ev, factor=key) for ev in evs)
        factors.append(sigma_star(pyr))
        components.append(key)
    return CyclicNormalFactors(tuple(factors), tuple(components), tuple(events))


def kmp_first_occurrence(text, pattern):
    """Index of the first occurrence of pattern in text, or None.
    Works on any sequence of comparable items; O(|text|+|pattern|)."""
    if not pattern:
        return 0
    fail = [0] * len(pattern)
    k = 0
    for i in range(1, len(pattern)):
        while k and pattern[i] != pattern[k]:
            k = fail[k - 1]
        if pattern[i] == pattern[k]:
            k += 1
        fail[i] = k
    k = 0
    for i, item in enumerate(text):
        while k and item != pattern[k]:
            k = fail[k - 1]
        if item == pattern[k]:
            k += 1
            if k == len(pattern):
                return i - k + 1
    return None


def cyclic_equal(u: Word, v: Word):
    """Smallest t >= 0 with rotate_left(u, t) == v, else None."""
    if len(u) != len(v):
        return None
    if not u:
        return 0
    doubled = u + u[:-1]
    return kmp_first_occurrence(doubled, v)


def conjugate_in_raag(g: DefiningGraph, w: Word, v: Word) -> bool:
    """Linear-time conjugacy decision: equal component collections and
    rotation-equal cyclic normal forms factor by factor."""
    fw = cyclic_normal_factors(g, w)
    fv = cyclic_normal_factors(g, v)
    if fw.components != fv.components:
        return False
    for a, b in zip(fw.factors, fv.factors):
        if cyclic_equal(a, b) is None:
            return False
    return True
