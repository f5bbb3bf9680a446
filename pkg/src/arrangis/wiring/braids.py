"""Braid words on labeled strands and crossing counts."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

# Over-strand convention for a positive letter sigma_i.  True: the strand
# entering at the upper position i+1 goes over; a negative letter puts the
# strand entering at position i on top.  Fixed by the MacLane oracles.
OVER_UPPER = True


class BraidError(ValueError):
    pass


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        letters = tuple(int(x) for x in self.letters)
        object.__setattr__(self, "letters", letters)
        for x in letters:
            if x == 0 or abs(x) >= self.strands:
                raise BraidError(f"letter {x:+d} out of range for {self.strands} strands")

    def __len__(self) -> int:
        return len(self.letters)

    def __add__(self, other: "BraidWord") -> "BraidWord":
        if other.strands != self.strands:
            raise BraidError("strand counts differ")
        return BraidWord(self.strands, self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-x for x in reversed(self.letters)))

    def permute(self, order: Sequence) -> list:
        """Apply the word's permutation to a bottom-to-top sequence."""
        out = list(order)
        for x in self.letters:
            i = abs(x) - 1
            out[i], out[i + 1] = out[i + 1], out[i]
        return out

    def __str__(self) -> str:
        return " ".join(f"{x:+d}" for x in self.letters)

    @classmethod
    def parse(cls, strands: int, text: str) -> "BraidWord":
        return cls(strands, tuple(int(tok) for tok in text.split()))


def half_twist(size: int, position: int, strands: int) -> BraidWord:
    """Positive half-twist on positions position..position+size-1 (1-based)."""
    if size < 2 or position < 1 or position + size - 1 > strands:
        raise BraidError(f"half-twist of width {size} at {position} does not fit {strands} strands")
    letters = []
    for j in range(1, size):
        letters.extend(range(position + j - 1, position - 1, -1))
    return BraidWord(strands, tuple(letters))


def over_under(letter: int, lower, upper):
    """(over, under) strand for a letter acting on the given pair."""
    upper_over = (letter > 0) == OVER_UPPER
    return (upper, lower) if upper_over else (lower, upper)


@dataclass(frozen=True)
class LabeledBraid:
    word: BraidWord
    labels: tuple[str, ...]     # entry labels, bottom first

    def __post_init__(self) -> None:
        object.__setattr__(self, "labels", tuple(self.labels))
        if len(self.labels) != self.word.strands:
            raise BraidError("one label per strand is required")
        if len(set(self.labels)) != len(self.labels):
            raise BraidError("strand labels must be distinct")

    @property
    def exit_labels(self) -> tuple[str, ...]:
        return tuple(self.word.permute(self.labels))

    def crossings(self) -> Iterable[tuple[int, str, str]]:
        """(sign, over label, under label) for every letter."""
        order = list(self.labels)
        for x in self.word.letters:
            i = abs(x) - 1
            over, under = over_under(x, order[i], order[i + 1])
            yield (1 if x > 0 else -1), over, under
            order[i], order[i + 1] = order[i + 1], order[i]

    def a(self, k: str, l: str) -> int:
        """Signed number of crossings where strand k passes over strand l."""
        for lab in (k, l):
            if lab not in self.labels:
                raise BraidError(f"unknown strand label {lab}")
        if k == l:
            raise BraidError("a_kl needs two different strands")
        return sum(sign for sign, over, under in self.crossings() if over == k and under == l)

    def over_counts(self, under: str) -> dict[str, int]:
        """k -> a(k, under) for every other strand k, zero entries dropped."""
        if under not in self.labels:
            raise BraidError(f"unknown strand label {under}")
        out: dict[str, int] = {}
        for sign, o, u in self.crossings():
            if u == under:
                out[o] = out.get(o, 0) + sign
        return {k: v for k, v in out.items() if v}

    def inverse(self) -> "LabeledBraid":
        return LabeledBraid(self.word.inverse(), self.exit_labels)

    def __add__(self, other: "LabeledBraid") -> "LabeledBraid":
        if other.labels != self.exit_labels:
            raise BraidError("labels do not match at the junction")
        return LabeledBraid(self.word + other.word, self.labels)


def a_kl(beta: LabeledBraid, k: str, l: str) -> int:
    return beta.a(k, l)
