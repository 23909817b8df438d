"""Shared frameworks and corpora for the test suite."""

import itertools
import random

from argsat.af import ArgumentationFramework

SEMANTICS = ("CO", "GR", "ST", "PR", "ID")
RANDOM_SEED = 20211
RANDOM_SIZE = 500

AF1 = ArgumentationFramework("abc", [("a", "b"), ("b", "c")])
AF2 = ArgumentationFramework("ab", [("a", "b"), ("b", "a")])
AF3 = ArgumentationFramework("abc", [("a", "b"), ("b", "c"), ("c", "a")])
AF4 = ArgumentationFramework("abcd", [("b", "c"), ("c", "b"), ("b", "d"), ("c", "d"), ("d", "a")])
EMPTY = ArgumentationFramework([], [])


def all_frameworks(names="abc"):
    """Every attack relation over ``names`` (512 frameworks for three arguments)."""
    pairs = list(itertools.product(names, repeat=2))
    for mask in range(1 << len(pairs)):
        yield ArgumentationFramework(names, [p for i, p in enumerate(pairs) if mask >> i & 1])


def random_framework(rng, n, p):
    names = [f"a{i}" for i in range(n)]
    return ArgumentationFramework(
        names, [(u, v) for u in names for v in names if rng.random() < p])


def random_corpus(size=RANDOM_SIZE, seed=RANDOM_SEED, lo=4, hi=9, p=0.25):
    rng = random.Random(seed)
    return [random_framework(rng, rng.randint(lo, hi), p) for _ in range(size)]


def large_framework(seed=7, n=300, m=900):
    rng = random.Random(seed)
    names = [f"a{i}" for i in range(n)]
    pairs = rng.sample(range(n * n), m)
    return ArgumentationFramework(names, [(names[k // n], names[k % n]) for k in pairs])


def task_matrix(af):
    """All 18 effective (problem, semantics, query) combinations for ``af``."""
    for sem in SEMANTICS:
        yield "SE", sem, None
        yield "CE", sem, None
    for a in af.names:
        for sem in ("CO", "ST", "PR"):
            yield "DC", sem, a
        for sem in SEMANTICS:
            yield "DS", sem, a
