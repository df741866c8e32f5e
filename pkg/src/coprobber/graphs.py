"""Finite simple graphs on integer vertices 0..n-1.

Graphs are immutable value objects: construction normalizes and validates
edges, equality and hashing follow (n, edge set), and adjacency structures
are computed once and cached.  Immutability is what makes it safe to share
one Graph between solver runs and worker threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable


class GraphError(ValueError):
    """Invalid graph construction or vertex out of range."""


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise GraphError(f"graph needs at least one vertex, got n={self.n}")
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise GraphError(f"edge ({u}, {v}) invalid for n={self.n}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph, normalizing edge endpoint order and deduplicating."""
        normalized = set()
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at vertex {u} not allowed")
            normalized.add((u, v) if u < v else (v, u))
        return cls(n, frozenset(normalized))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_list(self) -> tuple[tuple[int, int], ...]:
        """Edges sorted lexicographically; index into this is the canonical edge id."""
        return tuple(sorted(self.edges))

    @cached_property
    def adj(self) -> tuple[tuple[int, ...], ...]:
        """Open adjacency lists, sorted ascending."""
        lists: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            lists[u].append(v)
            lists[v].append(u)
        return tuple(tuple(sorted(l)) for l in lists)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adj)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self.edges

    def check_vertex(self, v: int) -> int:
        if not (0 <= v < self.n):
            raise GraphError(f"vertex {v} out of range for n={self.n}")
        return v

    @cached_property
    def components(self) -> tuple[tuple[int, ...], ...]:
        """Connected components as sorted vertex tuples, ordered by smallest member."""
        seen = [False] * self.n
        comps = []
        for start in range(self.n):
            if seen[start]:
                continue
            stack = [start]
            seen[start] = True
            comp = []
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in self.adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        stack.append(y)
            comps.append(tuple(sorted(comp)))
        return tuple(comps)

    def is_connected(self) -> bool:
        return len(self.components) == 1

    def induced_subgraph(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph; vertices are relabeled 0..len-1 in sorted order."""
        vs = sorted(set(vertices))
        for v in vs:
            self.check_vertex(v)
        if not vs:
            raise GraphError("induced subgraph needs at least one vertex")
        index = {v: i for i, v in enumerate(vs)}
        edges = [
            (index[u], index[v])
            for u, v in self.edges
            if u in index and v in index
        ]
        return Graph.from_edges(len(vs), edges)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def neighborhood(g: Graph, v: int, closed: bool = False) -> frozenset[int]:
    """Open or closed neighborhood of v as a vertex set."""
    g.check_vertex(v)
    nb = set(g.adj[v])
    if closed:
        nb.add(v)
    return frozenset(nb)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """Disjoint union; h's vertices are shifted up by g.n."""
    edges = list(g.edges) + [(u + g.n, v + g.n) for u, v in h.edges]
    return Graph.from_edges(g.n + h.n, edges)


def girth(g: Graph) -> int | None:
    """Length of a shortest cycle, or None for a forest."""
    best: int | None = None
    for src in range(g.n):
        # BFS from src; a non-tree edge at depths d1, d2 closes a cycle of
        # length d1 + d2 + 1 through src only if it is the BFS meeting point,
        # which still upper-bounds the girth correctly when scanned from all roots.
        dist = {src: 0}
        parent = {src: -1}
        queue = [src]
        qi = 0
        while qi < len(queue):
            x = queue[qi]
            qi += 1
            for y in g.adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    cyc = dist[x] + dist[y] + 1
                    if best is None or cyc < best:
                        best = cyc
    return best
