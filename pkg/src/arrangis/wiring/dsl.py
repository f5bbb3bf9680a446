"""Text format for wiring diagrams.

    strands 3 labels A B C
    b +1 -2        # braid letters, +i is sigma_i
    p 2..3 P:A:C   # singular point on positions 2..3 (1-based, bottom first)
"""

from __future__ import annotations

import re

from ..combinatorics import POINT_PREFIX
from .braids import BraidWord
from .diagram import Braid, Singular, WiringDiagram, WiringError

_RANGE = re.compile(r"^(\d+)\.\.(\d+)$")
_LETTER = re.compile(r"^[+-]?\d+$")


class WiringSyntaxError(WiringError):
    def __init__(self, message: str, line: int, column: int) -> None:
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def _tokens(text: str):
    """(token, column) pairs with comments stripped; columns are 1-based."""
    body = text.split("#", 1)[0]
    return [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", body)]


def parse_wiring(text: str) -> WiringDiagram:
    n = None
    labels: tuple[str, ...] = ()
    events = []
    order: list[str] = []
    seen_points: set[str] = set()
    last = (1, 1)
    for lineno, raw in enumerate(text.splitlines(), start=1):
        toks = _tokens(raw)
        if not toks:
            continue
        last = (lineno, len(raw) + 1)

        def fail(msg: str, col: int) -> None:
            raise WiringSyntaxError(msg, lineno, col)

        head, col = toks[0]
        if n is None:
            if head != "strands":
                fail("expected header 'strands <n> labels ...'", col)
            if len(toks) < 3 or not toks[1][0].isdigit():
                fail("expected a strand count", toks[1][1] if len(toks) > 1 else len(raw) + 1)
            n = int(toks[1][0])
            if n < 1:
                fail("strand count must be positive", toks[1][1])
            if toks[2][0] != "labels":
                fail("expected 'labels'", toks[2][1])
            labels = tuple(t for t, _ in toks[3:])
            if len(labels) != n:
                fail(f"{n} strands need {n} labels, got {len(labels)}", toks[2][1])
            dup = next(((t, c) for i, (t, c) in enumerate(toks[3:]) if t in labels[:i]), None)
            if dup:
                fail(f"duplicate label {dup[0]}", dup[1])
            if any(t.startswith(POINT_PREFIX) for t in labels):
                fail("line labels may not start with 'P:'", toks[3][1])
            order = list(labels)
            continue
        if head == "b":
            if len(toks) == 1:
                fail("empty braid event", col + 1)
            letters = []
            for tok, c in toks[1:]:
                if not _LETTER.match(tok):
                    fail(f"bad braid letter {tok!r}", c)
                x = int(tok)
                if x == 0 or abs(x) >= n:
                    fail(f"letter {tok} out of range 1..{n - 1}", c)
                letters.append(x)
            word = BraidWord(n, tuple(letters))
            events.append(Braid(word))
            order = word.permute(order)
        elif head == "p":
            if len(toks) != 3:
                fail("expected 'p <lo>..<hi> <point-id>'", col)
            (rng, rc), (pid, pc) = toks[1], toks[2]
            m = _RANGE.match(rng)
            if not m:
                fail(f"bad position range {rng!r}", rc)
            lo, hi = int(m.group(1)), int(m.group(2))
            if hi - lo + 1 < 2:
                fail("a singular point needs at least two positions", rc)
            if lo < 1 or hi > n:
                fail(f"range {lo}..{hi} out of 1..{n}", rc)
            if pid in seen_points:
                fail(f"point {pid} appears twice", pc)
            if pid.startswith(POINT_PREFIX):
                members = pid[len(POINT_PREFIX):].split(":")
                unknown = [x for x in members if x not in labels]
                if unknown:
                    fail(f"unknown label {unknown[0]} in point id", pc)
                if sorted(members) != sorted(order[lo - 1:hi]):
                    fail(f"strands at {lo}..{hi} are {' '.join(order[lo - 1:hi])}, not those of {pid}", pc)
            seen_points.add(pid)
            events.append(Singular(pid, lo, hi))
            order[lo - 1:hi] = reversed(order[lo - 1:hi])
        else:
            fail(f"unknown event {head!r}", col)
    if n is None:
        raise WiringSyntaxError("missing header 'strands <n> labels ...'", *last)
    return WiringDiagram(n, labels, tuple(events))


def print_wiring(w: WiringDiagram) -> str:
    lines = [f"strands {w.strands} labels {' '.join(w.labels)}"]
    for ev in w.events:
        if isinstance(ev, Braid):
            lines.append(f"b {ev.word}")
        else:
            lines.append(f"p {ev.lo}..{ev.hi} {ev.point}")
    return "\n".join(lines) + "\n"
