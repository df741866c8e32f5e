"""Deterministic graph family generators.

Every family is referentially transparent: the same name, parameters and seed
produce the identical labeled graph on every run and platform.  The module
also provides exhaustive enumeration of all non-isomorphic graphs on a given
small vertex count, used by test harnesses that sweep the whole universe of
tiny graphs.
"""

from __future__ import annotations

import itertools
import random
from functools import lru_cache

import numpy as np

from .graphs import Graph, GraphError, disjoint_union


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise GraphError("complete bipartite graph needs both sides nonempty")
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def grid(rows: int, cols: int) -> Graph:
    """Cartesian grid; vertex (i, j) is labeled i*cols + j."""
    if rows < 1 or cols < 1:
        raise GraphError("grid needs positive dimensions")
    edges = []
    for i in range(rows):
        for j in range(cols):
            v = i * cols + j
            if j + 1 < cols:
                edges.append((v, v + 1))
            if i + 1 < rows:
                edges.append((v, v + cols))
    return Graph.from_edges(rows * cols, edges)


def petersen() -> Graph:
    """Petersen graph labeled as the Kneser graph K(5,2).

    Vertices are the 2-subsets of {0..4} in lexicographic order; two vertices
    are adjacent when the subsets are disjoint.
    """
    pairs = list(itertools.combinations(range(5), 2))
    edges = [
        (i, j)
        for i, j in itertools.combinations(range(len(pairs)), 2)
        if not set(pairs[i]) & set(pairs[j])
    ]
    return Graph.from_edges(10, edges)


def dodecahedron() -> Graph:
    """Dodecahedral skeleton labeled as the generalized Petersen graph GP(10,2).

    Vertices 0..9 form the outer 10-cycle, vertex 10+i is the inner partner
    of i, and inner vertices join at distance two around the ring.
    """
    edges = []
    for i in range(10):
        edges.append((i, (i + 1) % 10))
        edges.append((i, 10 + i))
        edges.append((10 + i, 10 + (i + 2) % 10))
    return Graph.from_edges(20, edges)


def icosahedron() -> Graph:
    """Icosahedral skeleton: two apexes (0 and 11) over an antiprism 1..10."""
    up = [1 + i for i in range(5)]
    lo = [6 + i for i in range(5)]
    edges = []
    for i in range(5):
        edges.append((0, up[i]))
        edges.append((11, lo[i]))
        edges.append((up[i], up[(i + 1) % 5]))
        edges.append((lo[i], lo[(i + 1) % 5]))
        edges.append((up[i], lo[i]))
        edges.append((up[i], lo[(i - 1) % 5]))
    return Graph.from_edges(12, edges)


def random_gnp(n: int, p: float, seed: int | None = None) -> Graph:
    """Erdos-Renyi G(n, p) with a deterministic, platform-stable stream."""
    if n < 1:
        raise GraphError("random_gnp needs n >= 1")
    if not (0.0 <= p <= 1.0):
        raise GraphError(f"edge probability {p} outside [0, 1]")
    rng = random.Random(seed if seed is not None else 0)
    edges = [
        (i, j) for i, j in itertools.combinations(range(n), 2) if rng.random() < p
    ]
    return Graph.from_edges(n, edges)


_FAMILIES = {
    "path": (path, 1),
    "cycle": (cycle, 1),
    "complete": (complete, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "grid": (grid, 2),
    "petersen": (petersen, 0),
    "dodecahedron": (dodecahedron, 0),
    "icosahedron": (icosahedron, 0),
}


def family_names() -> tuple[str, ...]:
    return tuple(sorted(_FAMILIES)) + ("random_gnp", "disjoint_union")


def generate(family: str, params: list[int] | tuple[int, ...] = (), seed: int | None = None) -> Graph:
    """Build a named family member from integer parameters.

    random_gnp takes (n, percent) where percent is the edge probability in
    whole percents; the seed defaults to 0.
    """
    if family == "random_gnp":
        if len(params) != 2:
            raise GraphError("random_gnp takes params (n, percent)")
        n, percent = params
        if not (0 <= percent <= 100):
            raise GraphError(f"percent {percent} outside 0..100")
        return random_gnp(n, percent / 100.0, seed)
    if family not in _FAMILIES:
        raise GraphError(
            f"unknown family {family!r}; known: {', '.join(family_names())}"
        )
    fn, arity = _FAMILIES[family]
    if len(params) != arity:
        raise GraphError(f"family {family!r} takes {arity} integer parameter(s)")
    return fn(*params)


def from_spec(spec: str) -> Graph:
    """Parse 'family:p1:p2:...' (random_gnp takes an optional trailing seed).

    disjoint_union composes comma-separated sub-specs:
    'disjoint_union:cycle:4,path:2'.
    """
    if spec.startswith("disjoint_union:"):
        parts = spec[len("disjoint_union:"):].split(",")
        if len(parts) < 2:
            raise GraphError("disjoint_union needs at least two comma-separated specs")
        g = from_spec(parts[0])
        for part in parts[1:]:
            g = disjoint_union(g, from_spec(part))
        return g
    bits = spec.split(":")
    family, args = bits[0], bits[1:]
    try:
        nums = [int(a) for a in args]
    except ValueError as exc:
        raise GraphError(f"non-integer parameter in spec {spec!r}") from exc
    if family == "random_gnp" and len(nums) == 3:
        return generate(family, nums[:2], seed=nums[2])
    return generate(family, nums)


# ----------------------------------------------------------------------------
# exhaustive enumeration of small graphs up to isomorphism


def _pair_gather(m: int) -> tuple[list[tuple[int, int]], np.ndarray]:
    """All vertex pairs of an m-vertex graph plus, per permutation, the gather
    table mapping pair slot -> permuted pair slot."""
    pairs = list(itertools.combinations(range(m), 2))
    index = {}
    for s, (i, j) in enumerate(pairs):
        index[(i, j)] = s
        index[(j, i)] = s
    perms = list(itertools.permutations(range(m)))
    gather = np.empty((len(perms), len(pairs)), dtype=np.int64)
    for r, sigma in enumerate(perms):
        for s, (i, j) in enumerate(pairs):
            gather[r, s] = index[(sigma[i], sigma[j])]
    return pairs, gather


@lru_cache(maxsize=None)
def enumerate_graphs(n: int) -> tuple[Graph, ...]:
    """All non-isomorphic simple graphs on exactly n vertices (n <= 7).

    Built by extending each (n-1)-vertex graph with one new vertex attached to
    every possible neighbor subset, then deduplicating by the minimum
    adjacency bitmask over all vertex permutations.
    """
    if not (1 <= n <= 7):
        raise GraphError("exhaustive enumeration supported for 1 <= n <= 7")
    if n == 1:
        return (Graph.from_edges(1, []),)

    smaller = enumerate_graphs(n - 1)
    pairs, gather = _pair_gather(n)
    npairs = len(pairs)
    prev_pairs = list(itertools.combinations(range(n - 1), 2))
    weights = (np.int64(1) << np.arange(npairs - 1, -1, -1)).astype(np.int64)

    canon_masks: set[int] = set()
    subset_count = 1 << (n - 1)
    new_pair_slot = [pairs.index((i, n - 1)) for i in range(n - 1)]
    prev_slot = [pairs.index(pq) for pq in prev_pairs]

    for g in smaller:
        base = np.zeros(npairs, dtype=bool)
        for s, (i, j) in enumerate(prev_pairs):
            if g.has_edge(i, j):
                base[prev_slot[s]] = True
        batch = np.tile(base, (subset_count, 1))
        for mask in range(subset_count):
            for i in range(n - 1):
                if (mask >> i) & 1:
                    batch[mask, new_pair_slot[i]] = True
        # canonical mask per candidate: minimum over all vertex permutations
        permuted = batch[:, gather]  # (subsets, perms, pairs)
        ranks = permuted.astype(np.int64) @ weights  # (subsets, perms)
        canon_masks.update(int(x) for x in ranks.min(axis=1))

    graphs = []
    for mask in sorted(canon_masks):
        edges = [
            pairs[s]
            for s in range(npairs)
            if (mask >> (npairs - 1 - s)) & 1
        ]
        graphs.append(Graph.from_edges(n, edges))
    return tuple(graphs)
