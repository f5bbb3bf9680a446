"""Braided wiring diagrams: strand labels plus an event stream."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Mapping, Sequence, Union

from .braids import BraidError, BraidWord, LabeledBraid, half_twist


class WiringError(ValueError):
    pass


@dataclass(frozen=True)
class Braid:
    word: BraidWord


@dataclass(frozen=True)
class Singular:
    point: str
    lo: int     # 1-based, inclusive
    hi: int

    @property
    def width(self) -> int:
        return self.hi - self.lo + 1


Event = Union[Braid, Singular]


@dataclass(frozen=True)
class WiringDiagram:
    strands: int
    labels: tuple[str, ...]
    events: tuple[Event, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "events", tuple(self.events))
        if len(self.labels) != self.strands:
            raise WiringError(f"{self.strands} strands but {len(self.labels)} labels")
        if len(set(self.labels)) != len(self.labels):
            raise WiringError("strand labels must be distinct")
        seen = set()
        for ev in self.events:
            if isinstance(ev, Braid):
                if ev.word.strands != self.strands:
                    raise WiringError("braid event has the wrong strand count")
            else:
                if ev.width < 2 or ev.lo < 1 or ev.hi > self.strands:
                    raise WiringError(f"bad singular range {ev.lo}..{ev.hi} for {ev.point}")
                if ev.point in seen:
                    raise WiringError(f"point {ev.point} appears twice")
                seen.add(ev.point)

    def apply(self, order: Sequence[str], event: Event) -> list[str]:
        if isinstance(event, Braid):
            return event.word.permute(order)
        out = list(order)
        out[event.lo - 1:event.hi] = reversed(out[event.lo - 1:event.hi])
        return out

    @cached_property
    def orders(self) -> tuple[tuple[str, ...], ...]:
        """orders[i]: strand labels just before event i; the last entry is the final order."""
        out = [self.labels]
        for ev in self.events:
            out.append(tuple(self.apply(out[-1], ev)))
        return tuple(out)

    @property
    def final_labels(self) -> tuple[str, ...]:
        return self.orders[-1]

    @cached_property
    def singular_indices(self) -> tuple[int, ...]:
        """Event index of each singular fiber; fiber u (1-based) is singular_indices[u-1]."""
        return tuple(i for i, ev in enumerate(self.events) if isinstance(ev, Singular))

    @property
    def fibers(self) -> int:
        return len(self.singular_indices)

    def singular(self, u: int) -> Singular:
        return self.events[self.singular_indices[u - 1]]

    def members(self, u: int) -> tuple[str, ...]:
        """Labels of the strands through singular fiber u."""
        ev = self.singular(u)
        return self.orders[self.singular_indices[u - 1]][ev.lo - 1:ev.hi]

    def fiber_of(self, a: str, b: str) -> int:
        """Singular fiber at which strands a and b meet."""
        for u in range(1, self.fibers + 1):
            m = self.members(u)
            if a in m and b in m:
                return u
        raise WiringError(f"strands {a} and {b} do not meet in the diagram")

    def fiber_of_point(self, point: str) -> int:
        for u in range(1, self.fibers + 1):
            if self.singular(u).point == point:
                return u
        raise WiringError(f"no singular event for {point}")

    def _word(self, start: int, stop: int) -> BraidWord:
        letters: list[int] = []
        for ev in self.events[start:stop]:
            if isinstance(ev, Braid):
                letters.extend(ev.word.letters)
            else:
                letters.extend(half_twist(ev.width, ev.lo, self.strands).letters)
        return BraidWord(self.strands, tuple(letters))

    def beta(self, u: int, v: int) -> LabeledBraid:
        """Braid from fiber u to fiber v (fiber 0 is the start), singular
        fibers in between replaced by positive half-twists."""
        k = self.fibers
        if not (0 <= u <= k and 0 <= v <= k) or u == v:
            raise WiringError(f"bad fiber pair ({u}, {v}) for {k} singular fibers")
        if u > v:
            return self.beta(v, u).inverse()
        start = 0 if u == 0 else self.singular_indices[u - 1] + 1
        stop = self.singular_indices[v - 1]
        return LabeledBraid(self._word(start, stop), self.orders[start])

    # serialization -----------------------------------------------------

    def to_json(self) -> dict:
        events = []
        for ev in self.events:
            if isinstance(ev, Braid):
                events.append({"type": "braid", "letters": list(ev.word.letters)})
            else:
                events.append({"type": "singular", "range": [ev.lo, ev.hi], "point": ev.point})
        return {"strands": self.strands, "labels": list(self.labels), "events": events}

    @classmethod
    def from_json(cls, data: Mapping) -> "WiringDiagram":
        n = int(data["strands"])
        events: list[Event] = []
        try:
            for ev in data["events"]:
                if ev["type"] == "braid":
                    events.append(Braid(BraidWord(n, tuple(ev["letters"]))))
                elif ev["type"] == "singular":
                    lo, hi = ev["range"]
                    events.append(Singular(str(ev["point"]), int(lo), int(hi)))
                else:
                    raise WiringError(f"unknown event type {ev['type']!r}")
        except BraidError as exc:
            raise WiringError(str(exc)) from None
        return cls(n, tuple(data["labels"]), tuple(events))


def beta_uv(w: WiringDiagram, u: int, v: int) -> LabeledBraid:
    return w.beta(u, v)
