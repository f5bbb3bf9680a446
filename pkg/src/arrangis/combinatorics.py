"""Line combinatorics, incidence graphs, characters and inner-cyclic conditions."""

from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Sequence

from .algebra import RootOfUnity, format_rational, parse_rational
from .graphs import spanning_forest

POINT_PREFIX = "P:"
DEFAULT_ENUM_CAP = 10**7


class InvalidCombinatorics(ValueError):
    pass


class InvalidCharacter(ValueError):
    pass


class MalformedCycle(ValueError):
    pass


class NotInnerCyclic(ValueError):
    """Raised with the number (1, 2 or 3) of the first failing condition."""

    def __init__(self, condition: int, detail: str) -> None:
        super().__init__(f"condition {condition} fails: {detail}")
        self.condition = condition
        self.detail = detail


class EnumerationCapExceeded(RuntimeError):
    pass


def point_id(members: Iterable[str]) -> str:
    return POINT_PREFIX + ":".join(members)


@dataclass(frozen=True)
class Combinatorics:
    lines: tuple[str, ...]
    points: tuple[tuple[str, ...], ...]

    def __post_init__(self) -> None:
        lines = tuple(self.lines)
        index = {l: i for i, l in enumerate(lines)}
        points = []
        for p in self.points:
            unknown = [l for l in p if l not in index]
            if unknown:
                raise InvalidCombinatorics(f"point {list(p)} uses unknown lines {unknown}")
            points.append(tuple(sorted(set(p), key=index.__getitem__)))
        object.__setattr__(self, "lines", lines)
        object.__setattr__(self, "points", tuple(points))

    @cached_property
    def index(self) -> dict[str, int]:
        return {l: i for i, l in enumerate(self.lines)}

    @cached_property
    def point_ids(self) -> tuple[str, ...]:
        return tuple(point_id(p) for p in self.points)

    @cached_property
    def members(self) -> dict[str, tuple[str, ...]]:
        return dict(zip(self.point_ids, self.points))

    @cached_property
    def _pair_point(self) -> dict[frozenset, str]:
        out = {}
        for pid, p in zip(self.point_ids, self.points):
            for a, b in itertools.combinations(p, 2):
                out.setdefault(frozenset((a, b)), pid)
        return out

    def joining(self, a: str, b: str) -> str:
        """Identifier of the unique point containing lines a and b."""
        try:
            return self._pair_point[frozenset((a, b))]
        except KeyError:
            raise InvalidCombinatorics(f"no point joins {a} and {b}") from None

    def points_on(self, line: str) -> list[str]:
        return [pid for pid, p in zip(self.point_ids, self.points) if line in p]

    def to_json(self) -> dict:
        return {"lines": list(self.lines), "points": [list(p) for p in self.points]}

    @classmethod
    def from_json(cls, data: Mapping) -> "Combinatorics":
        return cls(tuple(data["lines"]), tuple(tuple(p) for p in data["points"]))


def validate_combinatorics(comb: Combinatorics) -> None:
    """Raise InvalidCombinatorics unless both axioms of a line combinatorics hold."""
    if len(set(comb.lines)) != len(comb.lines):
        raise InvalidCombinatorics("duplicate line labels")
    for l in comb.lines:
        if l.startswith(POINT_PREFIX):
            raise InvalidCombinatorics(f"line label {l!r} clashes with point identifiers")
    seen: dict[frozenset, tuple] = {}
    for p in comb.points:
        if len(p) < 2:
            raise InvalidCombinatorics(f"point {list(p)} has fewer than two lines")
        for a, b in itertools.combinations(p, 2):
            key = frozenset((a, b))
            if key in seen:
                raise InvalidCombinatorics(
                    f"pair {a},{b} lies on two points {list(seen[key])} and {list(p)}")
            seen[key] = p
    for a, b in itertools.combinations(comb.lines, 2):
        if frozenset((a, b)) not in seen:
            raise InvalidCombinatorics(f"pair {a},{b} lies on no point")


# ---------------------------------------------------------------------------
# characters


@dataclass(frozen=True)
class Character:
    lines: tuple[str, ...]
    values: tuple[RootOfUnity, ...]

    def __post_init__(self) -> None:
        values = tuple(v if isinstance(v, RootOfUnity) else RootOfUnity(Fraction(v)) for v in self.values)
        object.__setattr__(self, "lines", tuple(self.lines))
        object.__setattr__(self, "values", values)
        if len(values) != len(self.lines):
            raise InvalidCharacter("one value per line is required")
        if sum(v.exponent for v in values) % 1 != 0:
            raise InvalidCharacter("the product of all values must be 1")

    @classmethod
    def from_exponents(cls, lines: Sequence[str], exponents: Iterable) -> "Character":
        return cls(tuple(lines), tuple(RootOfUnity(parse_rational(e) if isinstance(e, str) else Fraction(e))
                                       for e in exponents))

    @classmethod
    def trivial(cls, lines: Sequence[str]) -> "Character":
        return cls(tuple(lines), tuple(RootOfUnity() for _ in lines))

    def __getitem__(self, line: str) -> RootOfUnity:
        return self.as_dict[line]

    @cached_property
    def as_dict(self) -> dict[str, RootOfUnity]:
        return dict(zip(self.lines, self.values))

    @property
    def order(self) -> int:
        return math.lcm(1, *(v.order for v in self.values))

    def is_trivial(self) -> bool:
        return all(v.is_one() for v in self.values)

    def __mul__(self, other: "Character") -> "Character":
        return Character(self.lines, tuple(self[l] * other[l] for l in self.lines))

    def inverse(self) -> "Character":
        return Character(self.lines, tuple(v.inverse() for v in self.values))

    def to_json(self) -> dict:
        return {"order": self.order,
                "exponents": {l: format_rational(v.exponent) for l, v in zip(self.lines, self.values)}}

    @classmethod
    def from_json(cls, data: Mapping, lines: Sequence[str] | None = None) -> "Character":
        exps = data["exponents"]
        if lines is None:
            lines = list(exps)
        missing = [l for l in lines if l not in exps]
        if missing:
            raise InvalidCharacter(f"no value for lines {missing}")
        extra = [l for l in exps if l not in set(lines)]
        if extra:
            raise InvalidCharacter(f"values given for unknown lines {extra}")
        char = cls.from_exponents(lines, [exps[l] for l in lines])
        declared = data.get("order")
        if declared is not None and declared % char.order:
            raise InvalidCharacter(f"values are not {declared}-th roots of unity")
        return char


def point_value(xi: Character, comb: Combinatorics, point: str) -> RootOfUnity:
    """xi(p): product of the values on the lines through p."""
    try:
        members = comb.members[point]
    except KeyError:
        raise InvalidCombinatorics(f"unknown point {point}") from None
    out = RootOfUnity()
    for l in members:
        out = out * xi[l]
    return out


# ---------------------------------------------------------------------------
# incidence graph and cycles


@dataclass(frozen=True)
class IncidenceGraph:
    lines: tuple[str, ...]
    points: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]      # (line, point id)

    @property
    def vertices(self) -> tuple[str, ...]:
        return self.lines + self.points


def incidence_graph(comb: Combinatorics) -> IncidenceGraph:
    edges = tuple((l, pid) for pid, p in zip(comb.point_ids, comb.points) for l in p)
    edges = tuple(sorted(edges, key=lambda e: (comb.index[e[0]], comb.point_ids.index(e[1]))))
    return IncidenceGraph(comb.lines, comb.point_ids, edges)


@dataclass(frozen=True)
class Cycle:
    """Circular cycle l_1, p_1, l_2, ..., l_r, p_r; p_j joins l_j and l_{j+1}."""

    lines: tuple[str, ...]
    points: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "lines", tuple(self.lines))
        object.__setattr__(self, "points", tuple(self.points))
        if len(self.lines) != len(self.points):
            raise MalformedCycle("a cycle alternates lines and points")

    def __len__(self) -> int:
        return len(self.lines)

    @property
    def support(self) -> tuple[str, ...]:
        return self.lines

    def tokens(self) -> list[str]:
        return [x for pair in zip(self.lines, self.points) for x in pair]

    def __str__(self) -> str:
        return ",".join(self.tokens())

    def rotate_to(self, line: str) -> "Cycle":
        if line not in self.lines:
            raise MalformedCycle(f"{line} is not in the support of the cycle")
        k = self.lines.index(line)
        return Cycle(self.lines[k:] + self.lines[:k], self.points[k:] + self.points[:k])

    def reversed(self) -> "Cycle":
        r = len(self.lines)
        lines = tuple(self.lines[(-j) % r] for j in range(r))
        points = tuple(self.points[(-j - 1) % r] for j in range(r))
        return Cycle(lines, points)

    @classmethod
    def from_tokens(cls, tokens: Sequence[str], comb: Combinatorics | None = None) -> "Cycle":
        """Build from alternating tokens; ``*`` stands for the point joining the neighbours."""
        tokens = [t.strip() for t in tokens if t.strip()]
        if tokens and tokens[0].startswith(POINT_PREFIX):
            tokens = tokens[1:] + tokens[:1]
        if len(tokens) % 2:
            raise MalformedCycle("a cycle needs as many points as lines")
        lines = tokens[0::2]
        points = list(tokens[1::2])
        r = len(lines)
        for j, p in enumerate(points):
            if p == "*":
                if comb is None:
                    raise MalformedCycle("'*' points need the combinatorics")
                points[j] = comb.joining(lines[j], lines[(j + 1) % r])
        cycle = cls(tuple(lines), tuple(points))
        if comb is not None:
            check_cycle(comb, cycle)
        return cycle

    @classmethod
    def parse(cls, text: str, comb: Combinatorics | None = None) -> "Cycle":
        return cls.from_tokens(text.split(","), comb)


def check_cycle(comb: Combinatorics, cycle: Cycle) -> None:
    r = len(cycle.lines)
    if r < 3:
        raise MalformedCycle("a simple cycle of the incidence graph has at least three lines")
    if len(set(cycle.lines)) != r or len(set(cycle.points)) != r:
        raise MalformedCycle("repeated vertex in cycle")
    for j in range(r):
        a, b, p = cycle.lines[j], cycle.lines[(j + 1) % r], cycle.points[j]
        if a not in comb.index or b not in comb.index:
            raise MalformedCycle(f"unknown line in cycle: {a if a not in comb.index else b}")
        members = comb.members.get(p)
        if members is None:
            raise MalformedCycle(f"unknown point {p}")
        if a not in members or b not in members:
            raise MalformedCycle(f"{p} does not join {a} and {b}")


def cycle_from_vertices(vertices: Sequence[str]) -> Cycle:
    """Alternating line/point vertex walk (closing edge implicit) as a Cycle."""
    seq = list(vertices)
    if seq and seq[0].startswith(POINT_PREFIX):
        seq = seq[1:] + seq[:1]
    return Cycle(tuple(seq[0::2]), tuple(seq[1::2]))


def cycle_basis(graph: IncidenceGraph, root: str | None = None) -> list[Cycle]:
    forest = spanning_forest(graph.vertices, graph.edges, root)
    return [cycle_from_vertices(forest.fundamental_cycle(i)) for i in forest.non_tree]


def check_inner_cyclic(comb: Combinatorics, xi: Character, cycle: Cycle) -> None:
    """Raise NotInnerCyclic naming the first failing condition."""
    check_cycle(comb, cycle)
    for l in cycle.lines:
        if not xi[l].is_one():
            raise NotInnerCyclic(1, f"xi({l}) = {xi[l]} on a line of the cycle")
    for p in cycle.points:
        for l in comb.members[p]:
            if not xi[l].is_one():
                raise NotInnerCyclic(2, f"xi({l}) = {xi[l]} on a line through {p}")
    for l in cycle.lines:
        for p in comb.points_on(l):
            v = point_value(xi, comb, p)
            if not v.is_one():
                raise NotInnerCyclic(3, f"xi({p}) = {v} on a point of {l}")


def is_inner_cyclic(comb: Combinatorics, xi: Character, cycle: Cycle) -> bool:
    try:
        check_inner_cyclic(comb, xi, cycle)
    except NotInnerCyclic:
        return False
    return True


# ---------------------------------------------------------------------------
# blown-up dual graph


@dataclass(frozen=True)
class BlownUpGraph:
    """Dual graph after blowing up the points of multiplicity >= 3.

    Components are the lines (by label) followed by the exceptional divisors,
    which are named by the identifier of the point they lie over.  Each edge
    carries the point it comes from.
    """

    combinatorics: Combinatorics
    components: tuple[str, ...]
    edges: tuple[tuple[str, str, str], ...]     # (u, v, point id), index(u) < index(v)
    self_intersection: Mapping[str, int] = field(hash=False)

    @cached_property
    def index(self) -> dict[str, int]:
        return {c: i for i, c in enumerate(self.components)}

    def is_exceptional(self, component: str) -> bool:
        return component.startswith(POINT_PREFIX)

    def value(self, xi: Character, component: str) -> RootOfUnity:
        if self.is_exceptional(component):
            return point_value(xi, self.combinatorics, component)
        return xi[component]


def blow_up(comb: Combinatorics) -> BlownUpGraph:
    exceptional = [pid for pid, p in zip(comb.point_ids, comb.points) if len(p) >= 3]
    components = comb.lines + tuple(exceptional)
    index = {c: i for i, c in enumerate(components)}
    self_int = {l: 1 for l in comb.lines}
    edges = []
    for pid, p in zip(comb.point_ids, comb.points):
        if len(p) >= 3:
            self_int[pid] = -1
            for l in p:
                self_int[l] -= 1
                edges.append((l, pid, pid))
        else:
            a, b = p
            edges.append((a, b, pid))
    edges.sort(key=lambda e: (index[e[0]], index[e[1]]))
    return BlownUpGraph(comb, components, tuple(edges), self_int)


@dataclass(frozen=True)
class InnerUnramified:
    graph: BlownUpGraph
    components: tuple[str, ...]
    edges: tuple[tuple[str, str, str], ...]

    def forest(self, root: str | None = None):
        return spanning_forest(self.components, [(u, v) for u, v, _ in self.edges], root)

    @property
    def betti(self) -> int:
        return self.forest().betti

    def to_cycle(self, walk: Sequence[str]) -> Cycle:
        """Map a closed walk of components back to a cycle of the incidence graph."""
        tokens: list[str] = []
        m = len(walk)
        via = {}
        for u, v, p in self.edges:
            via[frozenset((u, v))] = p
        for i, c in enumerate(walk):
            nxt = walk[(i + 1) % m]
            tokens.append(c)
            if not self.graph.is_exceptional(c) and not self.graph.is_exceptional(nxt):
                tokens.append(via[frozenset((c, nxt))])
        return cycle_from_vertices(tokens)


def inner_unramified(graph: BlownUpGraph, xi: Character) -> InnerUnramified:
    unramified = {c for c in graph.components if graph.value(xi, c).is_one()}
    neighbours: dict[str, set] = {c: set() for c in graph.components}
    for u, v, _ in graph.edges:
        neighbours[u].add(v)
        neighbours[v].add(u)
    inner = {c for c in unramified if neighbours[c] <= unramified}
    comps = tuple(c for c in graph.components if c in inner)
    edges = tuple(e for e in graph.edges if e[0] in inner and e[1] in inner)
    return InnerUnramified(graph, comps, edges)


def enum_cap() -> int:
    raw = os.environ.get("ARRANGIS_ENUM_CAP")
    return int(raw) if raw else DEFAULT_ENUM_CAP


def _exponent_vectors(count: int, n: int) -> Iterator[tuple[int, ...]]:
    # free coordinates are all but the last; the last restores product 1
    for head in itertools.product(range(n), repeat=count - 1):
        yield head + ((-sum(head)) % n,)


def enumerate_inner_cyclic_characters(comb: Combinatorics, n: int,
                                      cap: int | None = None) -> list[tuple[Character, Cycle]]:
    """Non-trivial characters with values in <zeta_n> whose inner unramified
    graph has a cycle, each with a witness cycle of the incidence graph.

    Order is lexicographic in the exponent vectors (numerators over n).
    """
    if n < 1:
        raise ValueError("order bound must be positive")
    cap = enum_cap() if cap is None else cap
    count = len(comb.lines)
    if count == 0:
        return []
    total = n ** (count - 1)
    if total > cap:
        raise EnumerationCapExceeded(f"{total} characters exceed the enumeration cap {cap}")
    graph = blow_up(comb)
    out = []
    for vec in _exponent_vectors(count, n):
        if not any(vec):
            continue
        # a cycle of the blown-up graph passes through at least three lines
        if sum(1 for e in vec if e == 0) < 3:
            continue
        xi = Character(comb.lines, tuple(RootOfUnity(Fraction(e, n)) for e in vec))
        sub = inner_unramified(graph, xi)
        forest = sub.forest()
        if forest.betti <= 0:
            continue
        walk = forest.fundamental_cycle(forest.non_tree[0])
        out.append((xi, sub.to_cycle(walk)))
    return out
