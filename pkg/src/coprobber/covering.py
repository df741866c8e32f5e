"""Covering maps between graphs.

The central construction is the canonical double cover of a signed
embedding scheme: each vertex v splits into sheets v and v+n, an edge uv
with positive signature lifts to two parallel sheet-preserving edges, a
negative edge to two sheet-crossing ones.  Rotations are inherited (in
reversed cyclic order on the minus sheet) and the cover signature is
all-positive, so the cover scheme is orientable by construction.  The
cover graph is connected exactly when the base scheme is non-orientable.

The weaker notion this module certifies is a weak cover: a vertex
surjection p with p(N(u)) = N(p(u)) for every u.  Cop strategies transfer
along certified weak covers, so certification is the single gate the game
engine trusts.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph
from .graph6 import parse_graph6, write_graph6
from .embedding import EmbeddingScheme, require_valid

TWO_SHEETED = "TwoSheeted"
WEAK_COVER = "WeakCover"


class CoverError(ValueError):
    """Covering-map construction or certification failed."""


@dataclass(frozen=True)
class CoveringMap:
    """Vertex map p from the source graph onto the target graph."""

    source: Graph
    target: Graph
    p: tuple[int, ...]
    kind: str


@dataclass(frozen=True)
class WeakCoverResult:
    ok: bool
    map: CoveringMap | None
    violations: tuple[str, ...]

    def __bool__(self) -> bool:
        return self.ok


def check_weak_cover(p, source: Graph, target: Graph) -> WeakCoverResult:
    """Certify p as a weak cover, or report every violation.

    A certificate carries the kind: TwoSheeted when all fibres have size 2
    and p is locally bijective, plain WeakCover otherwise.
    """
    p = tuple(int(x) for x in p)
    violations: list[str] = []
    if len(p) != source.n:
        violations.append(
            f"map has {len(p)} entries for {source.n} source vertices"
        )
        return WeakCoverResult(False, None, tuple(violations))
    bad = sorted({x for x in p if not (0 <= x < target.n)})
    if bad:
        violations.append(f"image values {bad} outside target vertex range")
        return WeakCoverResult(False, None, tuple(violations))

    missing = sorted(set(range(target.n)) - set(p))
    if missing:
        violations.append(f"not surjective, vertices {missing} have empty fibres")
    for u in range(source.n):
        image = {p[y] for y in source.adj[u]}
        want = set(target.adj[p[u]])
        if image != want:
            parts = [f"vertex {u}: p(N({u})) != N({p[u]})"]
            lost = sorted(want - image)
            extra = sorted(image - want)
            if lost:
                parts.append(f"missing {lost}")
            if extra:
                parts.append(f"extra {extra}")
            violations.append(", ".join(parts))
    if violations:
        return WeakCoverResult(False, None, tuple(violations))

    sizes = [0] * target.n
    for x in p:
        sizes[x] += 1
    locally_bijective = all(
        len({p[y] for y in source.adj[u]}) == len(source.adj[u])
        for u in range(source.n)
    )
    kind = TWO_SHEETED if all(c == 2 for c in sizes) and locally_bijective else WEAK_COVER
    return WeakCoverResult(True, CoveringMap(source, target, p, kind), ())


def fibre(m: CoveringMap, v: int) -> tuple[int, ...]:
    m.target.check_vertex(v)
    return tuple(u for u in range(m.source.n) if m.p[u] == v)


def double_cover(s: EmbeddingScheme) -> tuple[EmbeddingScheme, CoveringMap]:
    """Orientable double cover of a scheme, with its covering map.

    Cover vertex v is sheet + of base vertex v, cover vertex v+n is sheet -.
    Base edge j lifts to cover edges 2j (from sheet + of its first endpoint)
    and 2j+1 (from sheet -).  The cover graph is connected iff the base
    scheme is non-orientable; orientable bases yield two disjoint copies.
    """
    require_valid(s)
    n = s.n
    cover_edges: list[tuple[int, int]] = []
    for j, (u, v) in enumerate(s.edges):
        if s.signature[j] > 0:
            cover_edges.append((u, v))
            cover_edges.append((u + n, v + n))
        else:
            cover_edges.append((u, v + n))
            cover_edges.append((u + n, v))

    def lift_at(x: int, sheet: int, e: int) -> int:
        # the lift of base edge e incident to cover vertex x + sheet*n
        a, b = s.edges[e]
        if x == a:
            return 2 * e + sheet
        if s.signature[e] > 0:
            return 2 * e + sheet
        return 2 * e + (1 - sheet)

    rotation: list[tuple[int, ...]] = []
    for v in range(n):
        rotation.append(tuple(lift_at(v, 0, e) for e in s.rotation[v]))
    for v in range(n):
        rotation.append(
            tuple(lift_at(v, 1, e) for e in reversed(s.rotation[v]))
        )

    cover = EmbeddingScheme(
        2 * n,
        tuple(cover_edges),
        tuple(rotation),
        tuple([1] * len(cover_edges)),
    )
    require_valid(cover, connected=False)

    p = tuple(v % n for v in range(2 * n))
    result = check_weak_cover(p, cover.graph, s.graph)
    assert result.ok, f"double cover failed certification: {result.violations}"
    assert result.map.kind == TWO_SHEETED
    return cover, result.map


def deck_involution(m: CoveringMap) -> tuple[int, ...]:
    """The sheet swap v <-> v+n of a double cover, verified to be a
    fixed-point-free automorphism commuting with p."""
    n = m.target.n
    if m.kind != TWO_SHEETED or m.source.n != 2 * n or any(
        m.p[v] != v % n for v in range(m.source.n)
    ):
        raise CoverError("deck involution needs a map built by double_cover")
    perm = tuple((v + n) % (2 * n) for v in range(2 * n))
    for u, v in m.source.edges:
        if not m.source.has_edge(perm[u], perm[v]):
            raise CoverError(f"sheet swap does not preserve edge ({u},{v})")
    assert all(m.p[perm[v]] == m.p[v] for v in range(2 * n))
    assert all(perm[v] != v for v in range(2 * n))
    return perm


def quotient_by_involution(g: Graph, perm: tuple[int, ...]) -> tuple[Graph, tuple[int, ...]]:
    """Quotient graph identifying v with perm[v], plus the projection map.

    Only sensible for fixed-point-free involutions whose orbits contain no
    edges (deck involutions qualify); used to recover the base from a cover.
    """
    if any(perm[perm[v]] != v or perm[v] == v for v in range(g.n)):
        raise CoverError("quotient needs a fixed-point-free involution")
    rep: dict[int, int] = {}
    label = 0
    proj = [0] * g.n
    for v in range(g.n):
        key = min(v, perm[v])
        if key not in rep:
            rep[key] = label
            label += 1
        proj[v] = rep[key]
    edges = set()
    for u, v in g.edges:
        a, b = proj[u], proj[v]
        if a == b:
            raise CoverError(f"edge ({u},{v}) collapses inside an orbit")
        edges.add((min(a, b), max(a, b)))
    return Graph.from_edges(label, edges), tuple(proj)


def covering_map_to_json(m: CoveringMap) -> dict:
    return {
        "source_graph6": write_graph6(m.source),
        "target_graph6": write_graph6(m.target),
        "p": list(m.p),
        "kind": m.kind,
    }


def covering_map_from_json(data: dict) -> CoveringMap:
    source = parse_graph6(data["source_graph6"])
    target = parse_graph6(data["target_graph6"])
    result = check_weak_cover(data["p"], source, target)
    if not result.ok:
        raise CoverError(
            "stored map fails certification: " + "; ".join(result.violations)
        )
    stored = data.get("kind", result.map.kind)
    if stored != result.map.kind:
        raise CoverError(
            f"stored kind {stored} disagrees with certified {result.map.kind}"
        )
    return result.map
