"""Generators shared by the test modules."""

from __future__ import annotations

import itertools
import random
from pathlib import Path

from arrangis.combinatorics import Combinatorics
from arrangis.wiring import Braid, BraidWord, LabeledBraid, Singular, WiringDiagram

DATA = Path(__file__).resolve().parent.parent / "data"


def random_labeled_braid(rng: random.Random, strands: int, length: int, labels=None) -> LabeledBraid:
    labels = list(labels) if labels is not None else [f"S{i}" for i in range(strands)]
    rng.shuffle(labels)
    letters = tuple(rng.choice((1, -1)) * rng.randint(1, strands - 1) for _ in range(length))
    return LabeledBraid(BraidWord(strands, letters), tuple(labels))


def random_diagram(rng: random.Random) -> WiringDiagram:
    n = rng.randint(2, 8)
    labels = [f"L{i}" for i in rng.sample(range(20), n)]
    order = list(labels)
    events = []
    used: set[str] = set()
    for k in range(rng.randint(0, 12)):
        if rng.random() < 0.5:
            word = BraidWord(n, tuple(rng.choice((1, -1)) * rng.randint(1, n - 1)
                                      for _ in range(rng.randint(1, 4))))
            events.append(Braid(word))
            order = word.permute(order)
        else:
            width = rng.randint(2, n)
            lo = rng.randint(1, n - width + 1)
            hi = lo + width - 1
            pid = "P:" + ":".join(order[lo - 1:hi])
            if pid in used or rng.random() < 0.5:
                pid = f"Q{k}"
            used.add(pid)
            events.append(Singular(pid, lo, hi))
            order[lo - 1:hi] = reversed(order[lo - 1:hi])
    return WiringDiagram(n, tuple(labels), tuple(events))


def random_combinatorics(rng: random.Random) -> Combinatorics:
    """A random line combinatorics: every pair of lines on exactly one point."""
    n = rng.randint(2, 9)
    lines = [f"L{i}" for i in range(n)]
    uncovered = {frozenset(p) for p in itertools.combinations(lines, 2)}
    points = []
    pairs = sorted(uncovered, key=sorted)
    rng.shuffle(pairs)
    for pair in pairs:
        if pair not in uncovered:
            continue
        point = sorted(pair)
        for l in rng.sample(lines, n):
            if l in point or rng.random() < 0.5:
                continue
            if all(frozenset((l, m)) in uncovered for m in point):
                point.append(l)
        for a, b in itertools.combinations(point, 2):
            uncovered.discard(frozenset((a, b)))
        points.append(tuple(point))
    return Combinatorics(tuple(lines), tuple(points))


def f2_rank(rows: list[int]) -> int:
    """Rank over F_2 of row vectors encoded as integers."""
    basis: dict[int, int] = {}
    for r in rows:
        while r:
            top = r.bit_length() - 1
            if top not in basis:
                basis[top] = r
                break
            r ^= basis[top]
    return len(basis)
