import random

import pytest

from raag import (
    BoundExceeded,
    based_word,
    build_graph,
    conjugate_in_raag,
    groupoid_conjugate,
    loop_class_key,
    oracle_conjugate,
    oracle_equal,
    oracle_groupoid_conjugate,
    parse_complex,
    parse_word,
    pi_star,
)
from .conftest import random_word

FREE2 = build_graph(("a1", "a2"), [])

TRAP = parse_complex("""
vertices x1 x2
edge e1 x1 x1 a1
edge e2 x1 x2 a2
edge e3 x2 x2 a1
""", FREE2)


def test_oracle_equal_basic(example_graph):
    g = example_graph
    assert oracle_equal(g, parse_word(g, "a1 a4"), parse_word(g, "a4 a1"))
    assert oracle_equal(g, parse_word(g, "a1 a1^-1"), ())
    assert not oracle_equal(g, parse_word(g, "a1 a2"), parse_word(g, "a2 a1"))


def test_oracle_equal_agrees_with_piling(example_graph):
    g = example_graph
    rng = random.Random(17)
    for _ in range(150):
        u = random_word(g, rng.randrange(0, 7), rng)
        v = random_word(g, rng.randrange(0, 7), rng)
        want = pi_star(g, u) == pi_star(g, v)
        assert oracle_equal(g, u, v) == want


def test_oracle_conjugate_basic(example_graph):
    g = example_graph
    assert oracle_conjugate(g, parse_word(g, "a1 a2"), parse_word(g, "a2 a1"))
    assert not oracle_conjugate(g, parse_word(g, "a1"), parse_word(g, "a2"))


def test_oracle_conjugate_agrees_with_decider(example_graph):
    g = example_graph
    rng = random.Random(19)
    for _ in range(120):
        u = random_word(g, rng.randrange(0, 6), rng)
        v = random_word(g, rng.randrange(0, 6), rng)
        assert oracle_conjugate(g, u, v) == conjugate_in_raag(g, u, v)


def test_oracle_length_bound(example_graph):
    g = example_graph
    long_word = parse_word(g, "a1") * 40
    with pytest.raises(BoundExceeded):
        oracle_equal(g, long_word, long_word)


def test_oracle_groupoid_trap():
    A = based_word(TRAP, "x1", parse_word(FREE2, "a1"))
    B = based_word(TRAP, "x1", parse_word(FREE2, "a2 a1 a2^-1"))
    C = based_word(TRAP, "x2", parse_word(FREE2, "a1"))
    assert not oracle_groupoid_conjugate(TRAP, FREE2, A, B)
    assert oracle_groupoid_conjugate(TRAP, FREE2, B, C)
    assert not oracle_groupoid_conjugate(TRAP, FREE2, A, C)


def test_oracle_groupoid_agrees_with_decider():
    rng = random.Random(23)
    loops = []
    for x in TRAP.vertices:
        for _ in range(40):
            w = random_word(FREE2, rng.randrange(0, 5), rng)
            from raag.cubecomplex import trace
            if trace(TRAP, x, w) == x:
                loops.append(based_word(TRAP, x, w))
    assert loops
    for i in range(0, len(loops), 7):
        for j in range(0, len(loops), 5):
            a, b = loops[i], loops[j]
            assert (oracle_groupoid_conjugate(TRAP, FREE2, a, b)
                    == groupoid_conjugate(TRAP, FREE2, a, b))


def test_loop_class_key_matches_oracle():
    rng = random.Random(29)
    from raag.cubecomplex import trace
    loops = []
    for x in TRAP.vertices:
        for _ in range(30):
            w = random_word(FREE2, rng.randrange(0, 5), rng)
            if trace(TRAP, x, w) == x:
                loops.append(based_word(TRAP, x, w))
    keys = [loop_class_key(TRAP, FREE2, bw) for bw in loops]
    for i in range(0, len(loops), 6):
        for j in range(0, len(loops), 4):
            same = keys[i] == keys[j]
            assert same == oracle_groupoid_conjugate(TRAP, FREE2, loops[i], loops[j])
