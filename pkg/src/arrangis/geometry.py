"""Line arrangements with exact cyclotomic coefficients and generic projections."""

from __future__ import annotations

import functools
import itertools
import random
from fractions import Fraction
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Mapping, Sequence

from .algebra import CyclotomicNumber, euler_phi, format_rational, parse_rational, sign_re
from .combinatorics import Combinatorics, point_id

K = CyclotomicNumber
Point = tuple[K, K, K]


class GeometryError(ValueError):
    pass


class RealizationMismatch(ValueError):
    pass


class GenericityError(RuntimeError):
    """A projection (or the strand tracking along it) is not generic."""


class GenericityExhausted(RuntimeError):
    pass


def _cross(u: Sequence[K], v: Sequence[K]) -> Point:
    return (u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0])


def normalize(vec: Sequence[K]) -> Point:
    """Scale so that the first non-zero coordinate is 1."""
    lead = next((c for c in vec if not c.is_zero()), None)
    if lead is None:
        raise GeometryError("zero vector has no projective class")
    inv = lead.inverse()
    return tuple(c * inv for c in vec)


@dataclass(frozen=True)
class ProjectiveLine:
    label: str
    coeffs: Point

    def __post_init__(self) -> None:
        if all(c.is_zero() for c in self.coeffs):
            raise GeometryError(f"line {self.label} has no non-zero coefficient")

    def contains(self, point: Sequence[K]) -> bool:
        return (sum((a * x for a, x in zip(self.coeffs, point)), K(self.coeffs[0].order))).is_zero()

    def conjugate(self) -> "ProjectiveLine":
        return ProjectiveLine(self.label, tuple(c.conjugate() for c in self.coeffs))

    def same_as(self, other: "ProjectiveLine") -> bool:
        return all(c.is_zero() for c in _cross(self.coeffs, other.coeffs))


def intersect(a: ProjectiveLine, b: ProjectiveLine) -> Point:
    if a.same_as(b):
        raise GeometryError(f"lines {a.label} and {b.label} coincide")
    return normalize(_cross(a.coeffs, b.coeffs))


@dataclass(frozen=True)
class Arrangement:
    order: int
    lines: tuple[ProjectiveLine, ...]

    def __post_init__(self) -> None:
        lines = tuple(ProjectiveLine(l.label, tuple(c.lift(self.order) for c in l.coeffs))
                      for l in self.lines)
        object.__setattr__(self, "lines", lines)
        labels = [l.label for l in lines]
        if len(set(labels)) != len(labels):
            raise GeometryError("duplicate line labels")
        for a, b in itertools.combinations(lines, 2):
            if a.same_as(b):
                raise GeometryError(f"lines {a.label} and {b.label} coincide")

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(l.label for l in self.lines)

    def line(self, label: str) -> ProjectiveLine:
        for l in self.lines:
            if l.label == label:
                return l
        raise KeyError(label)

    def conjugate(self) -> "Arrangement":
        return Arrangement(self.order, tuple(l.conjugate() for l in self.lines))

    @cached_property
    def combinatorics(self) -> Combinatorics:
        return combinatorics_of(self)

    @cached_property
    def points(self) -> dict[str, Point]:
        """Coordinates of every multiple point, keyed by point identifier."""
        out = {}
        for members in self.combinatorics.points:
            out[point_id(members)] = intersect(self.line(members[0]), self.line(members[1]))
        return out

    @classmethod
    def from_rows(cls, rows: Mapping[str, Sequence], order: int = 1) -> "Arrangement":
        """Convenience constructor: label -> (a, b, c) with ints, Fractions or CyclotomicNumbers."""
        lines = []
        for label, coeffs in rows.items():
            lines.append(ProjectiveLine(label, tuple(
                c.lift(order) if isinstance(c, K) else K(order, [c]) for c in coeffs)))
        return cls(order, tuple(lines))

    def to_json(self) -> dict:
        def enc(c: K):
            if c.is_rational():
                return format_rational(c.coeffs[0])
            return [format_rational(x) for x in c.coeffs]
        return {"cyclotomic_order": self.order,
                "lines": [{"label": l.label, "coeffs": [enc(c) for c in l.coeffs]} for l in self.lines]}

    @classmethod
    def from_json(cls, data: Mapping) -> "Arrangement":
        order = int(data.get("cyclotomic_order", 1))
        if order < 1:
            raise GeometryError("cyclotomic_order must be positive")
        lines = []
        for entry in data["lines"]:
            coeffs = entry["coeffs"]
            if len(coeffs) != 3:
                raise GeometryError(f"line {entry.get('label')} needs three coefficients")
            parsed = []
            for c in coeffs:
                if isinstance(c, list):
                    parsed.append(K(order, [parse_rational(x) for x in c]))
                else:
                    parsed.append(K(order, [parse_rational(c)]))
            lines.append(ProjectiveLine(str(entry["label"]), tuple(parsed)))
        return cls(order, tuple(lines))


def combinatorics_of(arr: Arrangement) -> Combinatorics:
    """Group pairwise intersections by coincidence; points in order of first occurrence."""
    groups: dict[Point, list[str]] = {}
    for a, b in itertools.combinations(arr.lines, 2):
        members = groups.setdefault(intersect(a, b), [])
        for l in (a.label, b.label):
            if l not in members:
                members.append(l)
    return Combinatorics(arr.labels, tuple(tuple(m) for m in groups.values()))


def check_realizes(arr: Arrangement, comb: Combinatorics) -> None:
    """Raise RealizationMismatch at the first pair of lines whose points differ."""
    if tuple(arr.labels) != tuple(comb.lines):
        raise RealizationMismatch(f"line labels differ: {list(arr.labels)} vs {list(comb.lines)}")
    actual = arr.combinatorics
    for a, b in itertools.combinations(comb.lines, 2):
        got, want = actual.joining(a, b), comb.joining(a, b)
        if got != want:
            raise RealizationMismatch(f"lines {a},{b} meet at {got}, expected {want}")


# ---------------------------------------------------------------------------
# projections


@dataclass(frozen=True)
class AffineLine:
    """y = slope * x + intercept in the affine chart of the frame."""

    label: str
    slope: K
    intercept: K

    def at(self, x: K) -> K:
        return self.slope * x + self.intercept


@dataclass(frozen=True)
class SingularPoint:
    point: str
    lines: tuple[str, ...]
    x: K
    y: K


@dataclass(frozen=True)
class ProjectionFrame:
    """Coordinates in which the infinity line is z = 0 and (x, y) -> x is generic.

    ``points`` lists the affine multiple points sorted by the real part of x.
    """

    infinity: str
    transform: tuple[tuple[K, K, K], ...]
    shear: tuple[tuple[Fraction, ...], ...]     # power-basis coefficients of alpha, s, r
    seed: int
    attempt: int
    lines: tuple[AffineLine, ...]
    points: tuple[SingularPoint, ...]

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(l.label for l in self.lines)

    def line(self, label: str) -> AffineLine:
        for l in self.lines:
            if l.label == label:
                return l
        raise KeyError(label)


def _matmul(a, b):
    n = len(b[0])
    return tuple(tuple(sum((a[i][k] * b[k][j] for k in range(len(b))), K(a[i][0].order))
                       for j in range(n)) for i in range(len(a)))


def _inverse3(m) -> tuple:
    order = m[0][0].order
    rows = [list(r) + [K(order, [int(i == j)]) for j in range(3)] for i, r in enumerate(m)]
    for col in range(3):
        pivot = next(r for r in range(col, 3) if not rows[r][col].is_zero())
        rows[col], rows[pivot] = rows[pivot], rows[col]
        inv = rows[col][col].inverse()
        rows[col] = [x * inv for x in rows[col]]
        for r in range(3):
            if r != col and not rows[r][col].is_zero():
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[col])]
    return tuple(tuple(r[3:]) for r in rows)


def _to_infinity(arr: Arrangement, infinity: str):
    """A coordinate change (new = M @ old) sending the infinity line to z = 0."""
    order = arr.order
    one, zero = K(order, [1]), K(order, [])
    e = [(one, zero, zero), (zero, one, zero), (zero, zero, one)]
    a, b, c = arr.line(infinity).coeffs
    if not c.is_zero():
        rows = (e[0], e[1], (a, b, c))
    elif not b.is_zero():
        rows = (e[0], e[2], (a, b, c))
    else:
        rows = (e[1], e[2], (a, b, c))
    return rows


def frame_for(arr: Arrangement, infinity: str, shear: tuple = ((1,), (0,), (0,)),
              seed: int = 0, attempt: int = 0) -> ProjectionFrame:
    """Projection frame for an explicit shear; raises GenericityError if not generic."""
    if infinity not in arr.labels:
        raise KeyError(f"unknown infinity line {infinity}")
    order = arr.order
    shear = tuple(tuple(Fraction(c) for c in part) for part in shear)
    alpha, s, r = (K(order, part) for part in shear)
    one, zero = K(order, [1]), K(order, [])
    # x' = alpha x + s y, y' = r x + y
    if (alpha - s * r).is_zero():
        raise GenericityError("singular chart change")
    shear_m = ((alpha, s, zero), (r, one, zero), (zero, zero, one))
    transform = _matmul(shear_m, _to_infinity(arr, infinity))
    inv = _inverse3(transform)
    affine = []
    for line in arr.lines:
        if line.label == infinity:
            continue
        a, b, c = (sum((line.coeffs[k] * inv[k][j] for k in range(3)), K(order)) for j in range(3))
        if b.is_zero():
            raise GenericityError(f"line {line.label} is vertical")
        binv = b.inverse()
        affine.append(AffineLine(line.label, -a * binv, -c * binv))
    comb = arr.combinatorics
    points = []
    for members in comb.points:
        if infinity in members:
            continue
        l1, l2 = (next(a for a in affine if a.label == m) for m in members[:2])
        x = (l2.intercept - l1.intercept) / (l1.slope - l2.slope)
        points.append(SingularPoint(point_id(members), members, x, l1.at(x)))
    _check_real_parts(points)
    points.sort(key=functools.cmp_to_key(lambda p, q: sign_re(p.x - q.x)))
    return ProjectionFrame(infinity, transform, shear, seed, attempt, tuple(affine), tuple(points))


def _check_real_parts(points: Sequence[SingularPoint]) -> None:
    for p, q in itertools.combinations(points, 2):
        if sign_re(p.x - q.x) == 0:
            raise GenericityError(f"points {p.point} and {q.point} have x-coordinates with equal real part")


def certify(frame: ProjectionFrame) -> None:
    """Re-check a frame from its affine lines alone; raises GenericityError."""
    groups: dict[tuple[K, K], set[str]] = {}
    for a, b in itertools.combinations(frame.lines, 2):
        if (a.slope - b.slope).is_zero():
            continue  # parallel: they meet on the infinity line
        x = (b.intercept - a.intercept) / (a.slope - b.slope)
        groups.setdefault((x, a.at(x)), set()).update((a.label, b.label))
    xs = [x for x, _ in groups]
    for i, j in itertools.combinations(range(len(xs)), 2):
        if sign_re(xs[i] - xs[j]) == 0:
            raise GenericityError("two multiple points project to the same real part")
    listed = {(p.x, p.y): set(p.lines) for p in frame.points}
    if listed != groups:
        raise GenericityError("frame points disagree with the affine lines")
    for p, q in zip(frame.points, frame.points[1:]):
        if sign_re(q.x - p.x) <= 0:
            raise GenericityError("frame points are not sorted by real part")


def projection_candidates(arr: Arrangement, infinity: str, seed: int = 0,
                          retries: int = 16) -> Iterator[ProjectionFrame]:
    """Generic frames from a seeded sequence of shears (at most ``retries`` tried)."""
    rng = random.Random(seed)
    # over a non-real field, points with real x-differences need a complex alpha
    degree = max(1, euler_phi(arr.order))
    for attempt in range(retries):
        # small denominators keep lattice points from sharing real parts
        shear = tuple(tuple(Fraction(rng.randint(-40, 40), rng.randint(1, 9)) for _ in range(degree))
                      for _ in range(3))
        try:
            yield frame_for(arr, infinity, shear, seed, attempt)
        except GenericityError:
            continue


def choose_projection(arr: Arrangement, infinity: str, seed: int = 0,
                      retries: int = 16) -> ProjectionFrame:
    for frame in projection_candidates(arr, infinity, seed, retries):
        return frame
    raise GenericityExhausted(f"no generic projection found in {retries} attempts (seed {seed})")
