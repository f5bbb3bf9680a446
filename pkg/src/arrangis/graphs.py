"""Breadth-first spanning forests and fundamental cycles on small labeled graphs."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Hashable, Sequence

Vertex = Hashable
Edge = tuple[Vertex, Vertex]


@dataclass(frozen=True)
class SpanningForest:
    vertices: tuple
    edges: tuple[Edge, ...]
    tree: frozenset[int]            # indices into edges
    parent: dict                    # vertex -> (parent vertex, edge index) or None for roots
    depth: dict

    @property
    def non_tree(self) -> list[int]:
        return [i for i in range(len(self.edges)) if i not in self.tree]

    @property
    def components(self) -> int:
        return sum(1 for v in self.vertices if self.parent[v] is None)

    @property
    def betti(self) -> int:
        return len(self.edges) - len(self.vertices) + self.components

    def fundamental_cycle(self, index: int) -> list:
        """Vertices of the cycle closing non-tree edge ``index``.

        The list starts with the edge's first vertex, continues with its second
        vertex and then follows the tree back; the closing step is implicit.
        """
        if index in self.tree:
            raise ValueError(f"edge {self.edges[index]} belongs to the spanning forest")
        u, v = self.edges[index]
        up_u, up_v = [u], [v]
        a, b = u, v
        while self.depth[a] > self.depth[b]:
            a = self.parent[a][0]
            up_u.append(a)
        while self.depth[b] > self.depth[a]:
            b = self.parent[b][0]
            up_v.append(b)
        while a != b:
            a = self.parent[a][0]
            b = self.parent[b][0]
            up_u.append(a)
            up_v.append(b)
        # up_u: u .. lca, up_v: v .. lca
        if up_v[-1] == u:
            up_v.pop()
        return [u] + up_v + list(reversed(up_u))[1:-1]


def spanning_forest(vertices: Sequence, edges: Sequence[Edge], root=None) -> SpanningForest:
    """BFS forest; roots are taken in vertex order (``root`` first if given),
    neighbours are visited in edge order."""
    adjacency: dict = {v: [] for v in vertices}
    for i, (u, v) in enumerate(edges):
        adjacency[u].append((v, i))
        adjacency[v].append((u, i))
    parent: dict = {}
    depth: dict = {}
    tree: set[int] = set()
    starts = list(vertices)
    if root is not None:
        starts.remove(root)
        starts.insert(0, root)
    for start in starts:
        if start in parent:
            continue
        parent[start] = None
        depth[start] = 0
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y, i in adjacency[x]:
                if y not in parent:
                    parent[y] = (x, i)
                    depth[y] = depth[x] + 1
                    tree.add(i)
                    queue.append(y)
    return SpanningForest(tuple(vertices), tuple(edges), frozenset(tree), parent, depth)
