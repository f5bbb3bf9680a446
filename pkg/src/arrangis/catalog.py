"""Arrangements used as worked examples and test fixtures."""

from __future__ import annotations

import itertools

from .algebra import CyclotomicNumber
from .combinatorics import Character, Combinatorics, Cycle
from .geometry import Arrangement

CEVA7_POINTS = (
    ("L0", "L1", "L2"), ("L0", "L3"), ("L0", "L4", "L5"), ("L0", "L6"), ("L1", "L3", "L5"),
    ("L1", "L4", "L6"), ("L2", "L3", "L4"), ("L2", "L5", "L6"), ("L3", "L6"),
)


def ceva7() -> Arrangement:
    """z, x - z, x + z, x + y, y - z, y + z, x - y."""
    return Arrangement.from_rows({
        "L0": (0, 0, 1),
        "L1": (1, 0, -1),
        "L2": (1, 0, 1),
        "L3": (1, 1, 0),
        "L4": (0, 1, -1),
        "L5": (0, 1, 1),
        "L6": (1, -1, 0),
    })


def ceva7_combinatorics() -> Combinatorics:
    return Combinatorics(tuple(f"L{i}" for i in range(7)), CEVA7_POINTS)


def ceva7_character() -> Character:
    return Character.from_exponents([f"L{i}" for i in range(7)], ["0", "1/2", "1/2", "0", "1/2", "1/2", "0"])


def ceva7_cycle() -> Cycle:
    return Cycle(("L0", "L3", "L6"), ("P:L0:L3", "P:L3:L6", "P:L0:L6"))


# points of F_3^2 labelling the MacLane lines
MACLANE_F3 = {
    "L1": (1, 1), "L2": (0, 1), "L3": (2, 1), "L4": (0, 2),
    "L5": (2, 0), "L6": (1, 0), "L7": (1, 2), "L8": (2, 2),
}


def maclane_combinatorics(extended: bool = True) -> Combinatorics:
    """MacLane combinatorics from the affine lines of F_3^2, optionally with L0."""
    labels = list(MACLANE_F3)
    by_point = {v: k for k, v in MACLANE_F3.items()}
    lines_f3 = set()
    for a, b in itertools.combinations(list(by_point) + [(0, 0)], 2):
        direction = ((b[0] - a[0]) % 3, (b[1] - a[1]) % 3)
        lines_f3.add(frozenset(((a[0] + t * direction[0]) % 3, (a[1] + t * direction[1]) % 3)
                               for t in range(3)))
    points = []
    for line in lines_f3:
        members = sorted((by_point[q] for q in line if q in by_point), key=labels.index)
        if len(members) >= 2:
            points.append(members)
    if extended:
        labels = ["L0"] + labels
        for p in points:
            if set(p) in ({"L1", "L2", "L3"}, {"L4", "L7", "L8"}):
                p.insert(0, "L0")
        points += [["L0", "L5"], ["L0", "L6"]]
    points.sort(key=lambda p: [labels.index(l) for l in p])
    return Combinatorics(tuple(labels), tuple(tuple(p) for p in points))


def maclane(sign: int = 1, extended: bool = True) -> Arrangement:
    """MacLane arrangement with zeta = exp(2 pi i / 3) (sign=+1) or its conjugate (sign=-1)."""
    z = CyclotomicNumber.zeta(3, 1 if sign > 0 else 2)
    zb = z.conjugate()
    rows = {
        "L1": (0, 1, -z),
        "L2": (0, 1, -1),
        "L3": (0, 1, -zb),
        "L4": (1, 0, -1),
        "L5": (1, -zb, 0),
        "L6": (1, -z, 0),
        "L7": (1, 0, -zb),
        "L8": (1, 0, -z),
    }
    if extended:
        rows = {"L0": (0, 0, 1), **rows}
    return Arrangement.from_rows(rows, order=3)


def maclane_character() -> Character:
    return Character.from_exponents([f"L{i}" for i in range(9)],
                                    ["0", "1/3", "1/3", "1/3", "2/3", "0", "0", "2/3", "2/3"])


def maclane_cycle() -> Cycle:
    return Cycle(("L0", "L6", "L5"), ("P:L0:L6", "P:L5:L6", "P:L0:L5"))


def pencil(k: int) -> Arrangement:
    """k lines through (0:0:1)."""
    return Arrangement.from_rows({f"L{i}": (1, i, 0) if i else (0, 1, 0) for i in range(k)})


def generic(k: int) -> Arrangement:
    """k lines in general position (tangent lines to the moment curve)."""
    return Arrangement.from_rows({f"L{i}": (i * i, -2 * i, 1) if i else (0, 0, 1) for i in range(k)})
