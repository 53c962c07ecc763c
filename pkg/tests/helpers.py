"""Random instance generators shared by the test modules."""

from __future__ import annotations

import random

from hypothesis import strategies as st

from caf.core import ArgumentationFramework, weak_components

NAMES = tuple("abcdefghijklmnop")


def random_af(rng: random.Random, n: int | None = None, max_n: int = 7) -> ArgumentationFramework:
    n = n if n is not None else rng.randint(1, max_n)
    p = rng.choice([0.1, 0.2, 0.3, 0.45])
    loop_p = rng.choice([0.0, 0.1, 0.25])
    atts = set()
    for i in range(n):
        for j in range(n):
            if rng.random() < (loop_p if i == j else p):
                atts.add((i, j))
    return ArgumentationFramework(NAMES[:n], frozenset(atts))


def random_multi_component_af(rng: random.Random, max_n: int = 7) -> ArgumentationFramework:
    while True:
        F = random_af(rng, rng.randint(2, max_n))
        if len(weak_components(F)) >= 2:
            return F


@st.composite
def frameworks(draw, max_n: int = 6) -> ArgumentationFramework:
    n = draw(st.integers(1, max_n))
    pairs = [(i, j) for i in range(n) for j in range(n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs)))
    return ArgumentationFramework(NAMES[:n], frozenset(chosen))


@st.composite
def extension_sets(draw, max_args: int = 4):
    from caf.semantics import ExtensionSet
    k = draw(st.integers(1, max_args))
    masks = draw(st.lists(st.integers(0, (1 << k) - 1), max_size=8))
    return ExtensionSet(NAMES[:k], tuple(masks))
