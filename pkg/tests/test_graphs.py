import pytest

from coprobber.graphs import Graph, GraphError, disjoint_union, girth, neighborhood
from coprobber.generators import (
    enumerate_graphs,
    family_names,
    from_spec,
    generate,
    random_gnp,
)


def test_from_edges_normalizes():
    g = Graph.from_edges(4, [(1, 0), (0, 1), (2, 3)])
    assert g.m == 2
    assert g.edge_list == ((0, 1), (2, 3))
    assert g.has_edge(1, 0) and not g.has_edge(0, 2)


def test_bad_graphs_rejected():
    with pytest.raises(GraphError):
        Graph.from_edges(0, [])
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 3)])
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(1, 1)])


def test_adjacency_and_degrees():
    g = generate("path", (4,))
    assert g.adj == ((1,), (0, 2), (1, 3), (2,))
    assert g.degrees == (1, 2, 2, 1)
    assert neighborhood(g, 1) == frozenset({0, 2})
    assert neighborhood(g, 1, closed=True) == frozenset({0, 1, 2})


def test_components_and_connectivity():
    g = disjoint_union(generate("cycle", (3,)), generate("path", (2,)))
    assert not g.is_connected()
    assert [sorted(c) for c in g.components] == [[0, 1, 2], [3, 4]]
    assert g.induced_subgraph([3, 4]).m == 1


def test_girth_values():
    assert girth(generate("path", (5,))) is None
    assert girth(generate("cycle", (7,))) == 7
    assert girth(generate("complete", (4,))) == 3
    assert girth(generate("petersen")) == 5
    assert girth(generate("dodecahedron")) == 5


def test_generators_sizes():
    cases = {
        "path:6": (6, 5),
        "cycle:6": (6, 6),
        "complete:5": (5, 10),
        "complete_bipartite:3:3": (6, 9),
        "grid:3:4": (12, 17),
        "petersen": (10, 15),
        "dodecahedron": (20, 30),
        "icosahedron": (12, 30),
    }
    for spec, (n, m) in cases.items():
        g = from_spec(spec)
        assert (g.n, g.m) == (n, m), spec


def test_petersen_is_kneser():
    # vertices are the 2-subsets of a 5-set, adjacent iff disjoint
    g = generate("petersen")
    assert g.degrees == (3,) * 10
    assert girth(g) == 5


def test_cubic_polyhedra_regularity():
    assert generate("dodecahedron").degrees == (3,) * 20
    assert generate("icosahedron").degrees == (5,) * 12


def test_random_gnp_seeded():
    a = random_gnp(12, 0.3, seed=5)
    b = random_gnp(12, 0.3, seed=5)
    c = random_gnp(12, 0.3, seed=6)
    assert a.edges == b.edges
    assert a.edges != c.edges


def test_from_spec_errors():
    with pytest.raises(GraphError):
        from_spec("nosuch:3")
    with pytest.raises(GraphError):
        from_spec("path:one")
    with pytest.raises(GraphError):
        from_spec("grid:3")
    assert "petersen" in family_names()


def test_enumerate_graphs_counts():
    # OEIS A000088: non-isomorphic simple graphs on n labeled-free vertices
    want = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34}
    for n, count in want.items():
        graphs = enumerate_graphs(n)
        assert len(graphs) == count
        assert all(g.n == n for g in graphs)


def test_disjoint_union_shifts():
    g = disjoint_union(generate("cycle", (3,)), generate("cycle", (4,)))
    assert g.n == 7 and g.m == 7
    assert g.has_edge(3, 4) and not g.has_edge(2, 3)
