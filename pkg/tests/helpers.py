"""Shared test fixtures: deterministic graph corpora and crude bounds."""

from __future__ import annotations

import random

from coprobber.graphs import Graph
from coprobber.generators import generate


def greedy_dominating_set(g: Graph) -> list[int]:
    """Any dominating set caps the cop number: park one cop per member and
    the robber starts adjacent to a cop."""
    closed = [set(g.adj[v]) | {v} for v in range(g.n)]
    uncovered = set(range(g.n))
    chosen = []
    while uncovered:
        v = max(range(g.n), key=lambda u: (len(closed[u] & uncovered), -u))
        chosen.append(v)
        uncovered -= closed[v]
    return chosen


def apollonian(splits: int, seed: int) -> Graph:
    """Planar triangulation grown from K4 by repeated face subdivision."""
    rng = random.Random(seed)
    edges = {(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)}
    faces = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
    n = 4
    for _ in range(splits):
        a, b, c = faces.pop(rng.randrange(len(faces)))
        v = n
        n += 1
        edges |= {tuple(sorted(p)) for p in ((a, v), (b, v), (c, v))}
        faces += [(a, b, v), (a, c, v), (b, c, v)]
    return Graph.from_edges(n, edges)


def wheel(spokes: int) -> Graph:
    rim = [(1 + i, 1 + (i + 1) % spokes) for i in range(spokes)]
    return Graph.from_edges(spokes + 1, rim + [(0, 1 + i) for i in range(spokes)])


def planar_corpus() -> list[tuple[str, Graph]]:
    """Connected planar graphs, 20 vertices or fewer."""
    out = [
        ("k1", generate("complete", (1,))),
        ("k4", generate("complete", (4,))),
        ("cube", _cube()),
        ("octahedron", _octahedron()),
        ("dodecahedron", generate("dodecahedron")),
        ("icosahedron", generate("icosahedron")),
        ("path_9", generate("path", (9,))),
        ("cycle_12", generate("cycle", (12,))),
        ("wheel_7", wheel(7)),
        ("grid_3x4", generate("grid", (3, 4))),
        ("grid_4x5", generate("grid", (4, 5))),
    ]
    for i, splits in enumerate((5, 9, 16)):
        out.append((f"apollonian_{splits}", apollonian(splits, seed=100 + i)))
    assert all(g.n <= 20 for _, g in out)
    return out


def _cube() -> Graph:
    edges = []
    for v in range(8):
        for bit in (1, 2, 4):
            if v < v ^ bit:
                edges.append((v, v ^ bit))
    return Graph.from_edges(8, edges)


def _octahedron() -> Graph:
    edges = [
        (u, v)
        for u in range(6)
        for v in range(u + 1, 6)
        if u + v != 5
    ]
    return Graph.from_edges(6, edges)
