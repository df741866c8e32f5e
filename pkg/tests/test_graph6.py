import random

import networkx as nx
import pytest

from coprobber.graphs import Graph
from coprobber.graph6 import (
    Graph6Error,
    parse_graph6,
    parse_graph6_file,
    write_graph6,
)
from coprobber.generators import generate, random_gnp


def test_known_literals():
    # C4 in canonical graph6 is "Cl"; K1 is "@"
    assert write_graph6(generate("cycle", (4,))) == "Cl"
    assert parse_graph6("@").n == 1
    g = parse_graph6("Cl")
    assert g.n == 4 and g.m == 4


def test_roundtrip_random():
    rng = random.Random(42)
    for _ in range(60):
        n = rng.randint(1, 40)
        g = random_gnp(n, rng.random(), seed=rng.randint(0, 10**6))
        assert parse_graph6(write_graph6(g)) == g


def test_networkx_agreement():
    rng = random.Random(7)
    for _ in range(40):
        n = rng.randint(1, 30)
        g = random_gnp(n, rng.random(), seed=rng.randint(0, 10**6))
        ours = write_graph6(g)
        h = nx.from_graph6_bytes(ours.encode())
        assert h.number_of_nodes() == g.n
        assert {tuple(sorted(e)) for e in h.edges()} == set(g.edges)
        theirs = nx.to_graph6_bytes(h, header=False).decode().strip()
        assert theirs == ours


def test_large_n_prefix():
    # 63 <= n <= 258047 uses the 4-byte prefix
    g = Graph.from_edges(100, [(0, 99)])
    text = write_graph6(g)
    assert parse_graph6(text) == g
    h = nx.from_graph6_bytes(text.encode())
    assert h.number_of_nodes() == 100 and h.has_edge(0, 99)


def test_reject_bad_input():
    with pytest.raises(Graph6Error):
        parse_graph6("")
    with pytest.raises(Graph6Error):
        parse_graph6("C" + chr(0x20))  # byte below printable range
    with pytest.raises(Graph6Error):
        parse_graph6("C")  # truncated edge bits


def test_parse_file_multiple_lines():
    lines = "\n".join(
        write_graph6(generate("cycle", (k,))) for k in (3, 4, 5)
    )
    graphs = parse_graph6_file(lines + "\n")
    assert [g.n for g in graphs] == [3, 4, 5]


def test_optional_header_prefix():
    text = ">>graph6<<" + write_graph6(generate("petersen"))
    assert parse_graph6(text).m == 15
