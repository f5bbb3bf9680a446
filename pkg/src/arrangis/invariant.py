"""Homology classes of nearby cycles and the invariant I(A, xi, gamma)."""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .algebra import RootOfUnity, format_rational
from .combinatorics import (Character, Combinatorics, Cycle, InvalidCombinatorics, MalformedCycle,
                            check_inner_cyclic)
from .geometry import Arrangement, GenericityError, GenericityExhausted, projection_candidates
from .wiring import WiringDiagram, WiringError, compute_wiring


class InfinityNotInSupport(ValueError):
    pass


@dataclass(frozen=True)
class HomologyClass:
    """Integer combination of meridians over the affine lines.

    A coefficient on the infinity line is rewritten eagerly using
    v_inf = -(sum of the affine meridians).
    """

    lines: tuple[str, ...]                  # affine lines (the basis)
    coeffs: Mapping[str, int] = field(default_factory=dict, hash=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "lines", tuple(self.lines))
        clean = {}
        for l, c in self.coeffs.items():
            if l not in self.lines:
                raise KeyError(f"{l} is not an affine line")
            if c:
                clean[l] = int(c)
        object.__setattr__(self, "coeffs", clean)

    @classmethod
    def zero(cls, lines: Sequence[str]) -> "HomologyClass":
        return cls(tuple(lines), {})

    def add_meridian(self, line: str, k: int = 1) -> "HomologyClass":
        out = dict(self.coeffs)
        if line in self.lines:
            out[line] = out.get(line, 0) + k
        else:   # infinity line
            for l in self.lines:
                out[l] = out.get(l, 0) - k
        return HomologyClass(self.lines, out)

    def __add__(self, other: "HomologyClass") -> "HomologyClass":
        out = dict(self.coeffs)
        for l, c in other.coeffs.items():
            out[l] = out.get(l, 0) + c
        return HomologyClass(self.lines, out)

    def __neg__(self) -> "HomologyClass":
        return HomologyClass(self.lines, {l: -c for l, c in self.coeffs.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, HomologyClass) and self.lines == other.lines and self.coeffs == other.coeffs

    def __getitem__(self, line: str) -> int:
        return self.coeffs.get(line, 0)

    def to_json(self) -> dict[str, int]:
        return {l: self.coeffs[l] for l in sorted(self.coeffs, key=_natural)}

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for l in sorted(self.coeffs, key=_natural):
            c = self.coeffs.get(l)
            if c:
                parts.append(f"{c:+d}*v[{l}]".replace("+1*", "+").replace("-1*", "-"))
        return " ".join(parts).lstrip("+")


def evaluate(xi: Character, h: HomologyClass) -> RootOfUnity:
    total = Fraction(0)
    for l, c in h.coeffs.items():
        total += c * xi[l].exponent
    return RootOfUnity(total)


def _over_sum(w: WiringDiagram, under: str, u: int, v: int) -> HomologyClass:
    """sum_j a_{j,under}(beta_{u,v}) v_j"""
    counts = w.beta(u, v).over_counts(under)
    return HomologyClass(w.labels, counts)


def istar_pair(w: WiringDiagram, s: str, t: str) -> HomologyClass:
    """Class of the nearby cycle through the point of s and t and the line at infinity."""
    for lab in (s, t):
        if lab not in w.labels:
            raise WiringError(f"{lab} is not a strand of the diagram")
    u = w.fiber_of(s, t)
    return _over_sum(w, s, 0, u) + _over_sum(w, t, u, 0)


def default_infinity(cycle: Cycle, comb: Combinatorics | None = None) -> str:
    """Lowest support line (in combinatorics order) not passing through
    the cycle's points other than its two neighbours."""
    order = list(comb.lines) if comb is not None else list(cycle.lines)
    r = len(cycle.lines)
    for line in sorted(cycle.lines, key=order.index):
        j = cycle.lines.index(line)
        others = [cycle.points[q] for q in range(r) if q not in (j, (j - 1) % r)]
        if comb is None or all(line not in comb.members[p] for p in others):
            return line
    raise MalformedCycle("no line of the cycle can be placed at infinity")


def istar_cycle(w: WiringDiagram, cycle: Cycle, infinity: str) -> HomologyClass:
    """Class of a nearby cycle of a cycle whose support contains the infinity line."""
    if infinity not in cycle.lines:
        raise InfinityNotInSupport(f"infinity line {infinity} is not in the support of the cycle")
    rot = cycle.rotate_to(infinity)
    affine = rot.lines[1:]
    for l in affine:
        if l not in w.labels:
            raise WiringError(f"{l} is not a strand of the diagram")
    fibers = [0]
    for a, b in zip(affine, affine[1:]):
        fibers.append(w.fiber_of(a, b))
    fibers.append(0)
    total = HomologyClass.zero(w.labels)
    for q, line in enumerate(affine):
        total = total + _over_sum(w, line, fibers[q], fibers[q + 1])
    return total


@dataclass(frozen=True)
class InvariantResult:
    value: RootOfUnity
    witness: HomologyClass
    infinity: str
    seed: int | None = None
    source: str = "equations"
    wiring: WiringDiagram | None = field(default=None, compare=False)

    def to_json(self) -> dict:
        out = {"value": format_rational(self.value.exponent),
               "witness": self.witness.to_json(),
               "witness_note": "defined modulo ker(xi)",
               "infinity": self.infinity,
               "source": self.source}
        if self.seed is not None:
            out["seed"] = self.seed
        return out


def wiring_for(arr: Arrangement, infinity: str, seed: int = 0, retries: int = 16):
    """First (frame, diagram) along the seeded projection sequence that tracks cleanly."""
    for frame in projection_candidates(arr, infinity, seed, retries):
        try:
            return frame, compute_wiring(arr, frame)
        except GenericityError:
            continue
    raise GenericityExhausted(f"no generic projection with {infinity} at infinity in {retries} attempts")


def invariant(arr: Arrangement, xi: Character, cycle: Cycle, seed: int = 0,
              infinity: str | None = None, retries: int = 16) -> InvariantResult:
    comb = arr.combinatorics
    check_inner_cyclic(comb, xi, cycle)
    infinity = infinity or default_infinity(cycle, comb)
    _, w = wiring_for(arr, infinity, seed, retries)
    witness = istar_cycle(w, cycle, infinity)
    return InvariantResult(evaluate(xi, witness), witness, infinity, seed, "equations", w)


def combinatorics_from_wiring(w: WiringDiagram, infinity: str) -> Combinatorics:
    """Affine points from the singular events; strands that never meet are
    parallel and share a point on the infinity line."""
    if infinity in w.labels:
        raise WiringError(f"{infinity} is a strand of the diagram")
    points = [w.members(u) for u in range(1, w.fibers + 1)]
    met = {frozenset(p) for m in points for p in itertools.combinations(m, 2)}
    classes: list[list[str]] = []
    for l in w.labels:
        for cls in classes:
            if frozenset((cls[0], l)) not in met:
                if any(frozenset((x, l)) in met for x in cls):
                    raise WiringError(f"parallelism of {l} with {cls} is not transitive")
                cls.append(l)
                break
        else:
            classes.append([l])
    points += [[infinity] + cls for cls in classes]
    lines = (infinity,) + tuple(sorted(w.labels, key=_natural))
    return Combinatorics(lines, tuple(tuple(p) for p in points))


def _natural(label: str):
    return [(0, int(tok), "") if tok.isdigit() else (1, 0, tok) for tok in re.findall(r"\d+|\D+", label)]


def infer_infinity(w: WiringDiagram, xi: Character) -> str:
    extra = [l for l in xi.lines if l not in w.labels]
    if len(extra) != 1:
        raise WiringError("the character must name exactly one line besides the strands (the infinity line)")
    return extra[0]


def invariant_from_wiring(w: WiringDiagram, xi: Character, cycle: Cycle,
                          infinity: str | None = None) -> InvariantResult:
    if infinity is None:
        infinity = infer_infinity(w, xi)
    comb = combinatorics_from_wiring(w, infinity)
    check_inner_cyclic(comb, xi, _rename_points(cycle, comb))
    witness = istar_cycle(w, cycle, infinity)
    return InvariantResult(evaluate(xi, witness), witness, infinity, None, "wiring", w)


def _rename_points(cycle: Cycle, comb: Combinatorics) -> Cycle:
    """Replace the cycle's point names by canonical ids from the combinatorics."""
    r = len(cycle.lines)
    try:
        points = tuple(comb.joining(cycle.lines[j], cycle.lines[(j + 1) % r]) for j in range(r))
    except InvalidCombinatorics as exc:
        raise MalformedCycle(str(exc)) from None
    return Cycle(cycle.lines, points)
