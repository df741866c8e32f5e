"""Graph isomorphism by backtracking with iterated degree refinement.

Intended for small instances (at most 30 vertices); the search refines vertex
colors Weisfeiler-Leman style, then assigns vertices in an order that keeps
the partial mapping maximally constrained.  Any witness found is re-verified
edge by edge before it is returned.
"""

from __future__ import annotations

from .graphs import Graph, GraphError

MAX_VERTICES = 30


def _refine_colors(g: Graph) -> list[int]:
    """Iterated neighbor-color refinement; returns a stable coloring."""
    colors = list(g.degrees)
    while True:
        signatures = [
            (colors[v], tuple(sorted(colors[w] for w in g.adj[v])))
            for v in range(g.n)
        ]
        palette = {sig: i for i, sig in enumerate(sorted(set(signatures)))}
        new = [palette[sig] for sig in signatures]
        if new == colors:
            return colors
        colors = new


def find_isomorphism(g: Graph, h: Graph) -> tuple[int, ...] | None:
    """A vertex bijection mapping g onto h, or None.

    The returned tuple maps vertex v of g to witness[v] of h and is verified
    against both edge sets before being returned.
    """
    if g.n > MAX_VERTICES or h.n > MAX_VERTICES:
        raise GraphError(f"isomorphism search limited to {MAX_VERTICES} vertices")
    if g.n != h.n or g.m != h.m:
        return None
    if sorted(g.degrees) != sorted(h.degrees):
        return None

    gc = _refine_colors(g)
    hc = _refine_colors(h)
    if sorted(gc) != sorted(hc):
        return None

    by_color: dict[int, list[int]] = {}
    for v in range(h.n):
        by_color.setdefault(hc[v], []).append(v)

    # Assign rare colors first, then grow a connected frontier so adjacency
    # constraints bite as early as possible.
    order: list[int] = []
    placed = [False] * g.n
    rarity = {v: (len(by_color[gc[v]]), gc[v]) for v in range(g.n)}
    while len(order) < g.n:
        frontier = [
            v for v in range(g.n)
            if not placed[v] and any(placed[w] for w in g.adj[v])
        ]
        pool = frontier if frontier else [v for v in range(g.n) if not placed[v]]
        nxt = min(pool, key=lambda v: (rarity[v], v))
        order.append(nxt)
        placed[nxt] = True

    mapping = [-1] * g.n
    used = [False] * h.n

    def extend(depth: int) -> bool:
        if depth == g.n:
            return True
        v = order[depth]
        for w in by_color[gc[v]]:
            if used[w]:
                continue
            ok = True
            for x in g.adj[v]:
                mx = mapping[x]
                if mx >= 0 and not h.has_edge(w, mx):
                    ok = False
                    break
            if ok:
                # non-edges must also map to non-edges
                for x in range(g.n):
                    mx = mapping[x]
                    if mx >= 0 and x != v and not g.has_edge(v, x) and h.has_edge(w, mx):
                        ok = False
                        break
            if ok:
                mapping[v] = w
                used[w] = True
                if extend(depth + 1):
                    return True
                mapping[v] = -1
                used[w] = False
        return False

    if not extend(0):
        return None

    witness = tuple(mapping)
    assert _verify_witness(g, h, witness), "isomorphism witness failed verification"
    return witness


def _verify_witness(g: Graph, h: Graph, witness: tuple[int, ...]) -> bool:
    if sorted(witness) != list(range(h.n)):
        return False
    mapped = {tuple(sorted((witness[u], witness[v]))) for u, v in g.edges}
    return mapped == set(h.edges)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return find_isomorphism(g, h) is not None
