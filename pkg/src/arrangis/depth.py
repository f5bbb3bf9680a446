"""Quasi-projective depth of a torsion character as the corank of A_xi."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .algebra import CyclotomicMatrix, CyclotomicNumber, RootOfUnity, embed_root, format_rational
from .combinatorics import Character, Cycle, InnerUnramified, blow_up, inner_unramified
from .geometry import Arrangement
from .graphs import SpanningForest
from .invariant import invariant


@dataclass(frozen=True)
class EdgeValue:
    edge: tuple[str, str]           # oriented from the lower-index component
    cycle: Cycle
    value: RootOfUnity


@dataclass(frozen=True)
class DepthReport:
    components: tuple[str, ...]
    forest_edges: tuple[tuple[str, str], ...]
    edge_values: tuple[EdgeValue, ...]
    matrix: CyclotomicMatrix
    depth: int

    def to_json(self) -> dict:
        return {
            "depth": self.depth,
            "components": list(self.components),
            "forest": [list(e) for e in self.forest_edges],
            "non_tree_edges": [
                {"edge": list(ev.edge), "cycle": str(ev.cycle), "value": format_rational(ev.value.exponent)}
                for ev in self.edge_values],
            "matrix": self.matrix.to_json(),
        }


def edge_cycle(sub: InnerUnramified, forest: SpanningForest, index: int) -> Cycle:
    """Fundamental cycle of a non-tree edge, as a cycle of the incidence graph."""
    return sub.to_cycle(forest.fundamental_cycle(index))


def build_A_xi(arr: Arrangement, xi: Character, root: str | None = None, seed: int = 0) -> DepthReport:
    graph = blow_up(arr.combinatorics)
    sub = inner_unramified(graph, xi)
    comps = sub.components
    forest = sub.forest(root)
    values: list[EdgeValue] = []
    for i in forest.non_tree:
        cycle = edge_cycle(sub, forest, i)
        values.append(EdgeValue(forest.edges[i], cycle, invariant(arr, xi, cycle, seed=seed).value))
    order = math.lcm(1, *(v.value.order for v in values))
    pos = {c: k for k, c in enumerate(comps)}
    one = CyclotomicNumber(order, [1])
    entries = [[CyclotomicNumber(order) for _ in comps] for _ in comps]
    for c in comps:
        entries[pos[c]][pos[c]] = CyclotomicNumber(order, [graph.self_intersection[c]])
    by_edge = {v.edge: v.value for v in values}
    for u, v in forest.edges:
        chi = by_edge.get((u, v))
        forward = one if chi is None else embed_root(chi, order)
        backward = one if chi is None else embed_root(chi.inverse(), order)
        entries[pos[u]][pos[v]] = entries[pos[u]][pos[v]] + forward
        entries[pos[v]][pos[u]] = entries[pos[v]][pos[u]] + backward
    matrix = CyclotomicMatrix(order, comps, tuple(tuple(r) for r in entries))
    tree_edges = tuple(forest.edges[i] for i in sorted(forest.tree))
    return DepthReport(comps, tree_edges, tuple(values), matrix, matrix.corank())


def quasi_projective_depth(arr: Arrangement, xi: Character, root: str | None = None, seed: int = 0) -> int:
    return build_A_xi(arr, xi, root, seed).depth
