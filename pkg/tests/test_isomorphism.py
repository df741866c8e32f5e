import random

from coprobber.graphs import Graph
from coprobber.generators import generate, random_gnp
from coprobber.isomorphism import find_isomorphism, is_isomorphic


def _permuted(g: Graph, seed: int) -> tuple[Graph, list[int]]:
    rng = random.Random(seed)
    perm = list(range(g.n))
    rng.shuffle(perm)
    edges = [(perm[u], perm[v]) for u, v in g.edges]
    return Graph.from_edges(g.n, edges), perm


def test_identity_and_relabeling():
    for spec in (("cycle", (6,)), ("petersen", ()), ("grid", (3, 3))):
        g = generate(*spec)
        assert is_isomorphic(g, g)
        h, _ = _permuted(g, seed=11)
        witness = find_isomorphism(g, h)
        assert witness is not None
        for u, v in g.edges:
            assert h.has_edge(witness[u], witness[v])


def test_non_isomorphic_same_degree_sequence():
    # C6 vs two triangles: both 2-regular on 6 vertices
    c6 = generate("cycle", (6,))
    two_triangles = Graph.from_edges(
        6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]
    )
    assert not is_isomorphic(c6, two_triangles)
    assert find_isomorphism(c6, two_triangles) is None


def test_size_mismatch():
    assert not is_isomorphic(generate("path", (3,)), generate("path", (4,)))
    assert not is_isomorphic(generate("cycle", (5,)), generate("path", (5,)))


def test_random_permutations():
    rng = random.Random(3)
    for _ in range(25):
        n = rng.randint(2, 16)
        g = random_gnp(n, rng.random(), seed=rng.randint(0, 10**6))
        h, _ = _permuted(g, seed=rng.randint(0, 10**6))
        assert is_isomorphic(g, h)


def test_near_miss_edge_swap():
    rng = random.Random(9)
    hits = 0
    for _ in range(25):
        g = random_gnp(10, 0.4, seed=rng.randint(0, 10**6))
        if g.m < 2:
            continue
        edges = sorted(g.edges)
        # drop one edge, add a non-edge: usually not isomorphic
        non_edges = [
            (u, v)
            for u in range(10)
            for v in range(u + 1, 10)
            if not g.has_edge(u, v)
        ]
        if not non_edges:
            continue
        h = Graph.from_edges(10, edges[1:] + [non_edges[0]])
        if not is_isomorphic(g, h):
            hits += 1
    assert hits >= 15
