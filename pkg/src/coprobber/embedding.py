"""Embedding schemes: rotation systems with edge signatures.

A scheme fixes, for every vertex, a cyclic order of its incident edge ids,
and gives every edge a sign.  Positive edges preserve local orientation,
negative edges reverse it.  Connected schemes describe cellular embeddings
of the graph into a closed surface; the surface is recovered by face
tracing and Euler's formula.

Face tracing walks directed edge sides carrying an orientation bit: arriving
along a negative edge flips the bit, and the bit chooses between successor
and predecessor in the arrival vertex's rotation.  Each face of the surface
yields exactly two such orbits (its two preimages in the orientable double
cover), mirror images of one another, so faces are reported once per mirror
pair and the face count is half the orbit count.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .graphs import Graph, GraphError

from . import _kernels_py

try:
    from . import _kernels as _default_kernels
except ImportError:
    _default_kernels = _kernels_py


class SchemeError(ValueError):
    """Scheme fails validation; message lists the violations."""


@dataclass(frozen=True)
class EmbeddingScheme:
    """n vertices, an indexed edge list, per-vertex rotations of edge ids,
    and a +1/-1 signature per edge."""

    n: int
    edges: tuple[tuple[int, int], ...]
    rotation: tuple[tuple[int, ...], ...]
    signature: tuple[int, ...]

    @classmethod
    def build(cls, n, edges, rotation, signature) -> "EmbeddingScheme":
        return cls(
            n,
            tuple((int(u), int(v)) for u, v in edges),
            tuple(tuple(int(e) for e in rot) for rot in rotation),
            tuple(int(s) for s in signature),
        )

    @cached_property
    def graph(self) -> Graph:
        return Graph.from_edges(self.n, self.edges)

    def edge_id(self, u: int, v: int) -> int:
        key = (u, v) if u < v else (v, u)
        for i, (a, b) in enumerate(self.edges):
            if ((a, b) if a < b else (b, a)) == key:
                return i
        raise SchemeError(f"no edge {u}-{v} in scheme")

    def other_end(self, e: int, v: int) -> int:
        a, b = self.edges[e]
        if v == a:
            return b
        if v == b:
            return a
        raise SchemeError(f"vertex {v} not an endpoint of edge {e}")


def _structural_violations(s: EmbeddingScheme) -> list[str]:
    problems: list[str] = []
    if s.n < 1:
        problems.append(f"vertex count {s.n} must be at least 1")
        return problems
    seen_pairs = set()
    for i, (u, v) in enumerate(s.edges):
        if not (0 <= u < s.n and 0 <= v < s.n):
            problems.append(f"edge {i} endpoints ({u},{v}) out of range")
        elif u == v:
            problems.append(f"edge {i} is a loop at {u}")
        else:
            key = (min(u, v), max(u, v))
            if key in seen_pairs:
                problems.append(f"edge {i} duplicates pair {key}")
            seen_pairs.add(key)
    if problems:
        return problems

    if len(s.rotation) != s.n:
        problems.append(f"rotation has {len(s.rotation)} entries for {s.n} vertices")
        return problems
    incident: list[list[int]] = [[] for _ in range(s.n)]
    for i, (u, v) in enumerate(s.edges):
        incident[u].append(i)
        incident[v].append(i)
    for v in range(s.n):
        if sorted(s.rotation[v]) != sorted(incident[v]):
            problems.append(
                f"rotation at vertex {v} is not a permutation of its incident edges"
            )
    if len(s.signature) != len(s.edges):
        problems.append(
            f"signature has {len(s.signature)} entries for {len(s.edges)} edges"
        )
    else:
        for i, sig in enumerate(s.signature):
            if sig not in (1, -1):
                problems.append(f"signature[{i}] = {sig} not in {{+1, -1}}")
    return problems


def validate_scheme(s: EmbeddingScheme) -> list[str]:
    """All violations, empty when the scheme is well formed.

    Never raises: this is the gate every other operation calls first.
    """
    problems = _structural_violations(s)
    if not problems and not s.graph.is_connected():
        problems.append("graph is disconnected, not cellular-capable")
    return problems


def require_valid(s: EmbeddingScheme, connected: bool = True) -> None:
    """connected=False relaxes the cellularity requirement; face tracing is
    still well defined per component (double covers of orientable schemes
    are legitimately disconnected)."""
    problems = validate_scheme(s) if connected else _structural_violations(s)
    if problems:
        raise SchemeError("; ".join(problems))


# ----------------------------------------------------------------------------
# face tracing


@dataclass(frozen=True)
class FaceSet:
    """Closed facial walks; each walk is a tuple of (tail, head, edge id)."""

    walks: tuple[tuple[tuple[int, int, int], ...], ...]

    @property
    def count(self) -> int:
        return len(self.walks)

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(len(w) for w in self.walks)


def _positions(s: EmbeddingScheme) -> list[dict[int, int]]:
    pos: list[dict[int, int]] = [dict() for _ in range(s.n)]
    for v in range(s.n):
        for slot, e in enumerate(s.rotation[v]):
            pos[v][e] = slot
    return pos


def _step(s, pos, e: int, tail: int, bit: int) -> tuple[int, int, int]:
    """One face-tracing step; returns (next edge, next tail, next bit)."""
    head = s.other_end(e, tail)
    if s.signature[e] < 0:
        bit ^= 1
    rot = s.rotation[head]
    slot = pos[head][e]
    slot = (slot + 1) % len(rot) if bit else (slot - 1) % len(rot)
    return rot[slot], head, bit


def trace_faces(s: EmbeddingScheme) -> FaceSet:
    """All faces, one walk per face.

    Orbits of the tracing step come in mirror pairs (same face walked from
    the other side); one representative per pair is emitted, so the sum of
    walk lengths is exactly twice the edge count.
    """
    require_valid(s, connected=False)
    if not s.edges:
        # edgeless scheme: one face per (isolated) vertex
        return FaceSet(tuple(() for _ in range(s.n)))
    pos = _positions(s)
    visited: set[tuple[int, int, int]] = set()
    walks = []
    for e0 in range(len(s.edges)):
        for tail0 in s.edges[e0]:
            for bit0 in (0, 1):
                if (e0, tail0, bit0) in visited:
                    continue
                walk = []
                e, tail, bit = e0, tail0, bit0
                while (e, tail, bit) not in visited:
                    visited.add((e, tail, bit))
                    # mirror state: same edge walked backwards on the other sheet
                    head = s.other_end(e, tail)
                    mbit = bit ^ 1 ^ (1 if s.signature[e] < 0 else 0)
                    visited.add((e, head, mbit))
                    walk.append((tail, head, e))
                    e, tail, bit = _step(s, pos, e, tail, bit)
                walks.append(tuple(walk))
    total = sum(len(w) for w in walks)
    assert total == 2 * len(s.edges), "face walks must cover each edge side once"
    return FaceSet(tuple(walks))


def _kernel_arrays(s: EmbeddingScheme):
    E = len(s.edges)
    eu = np.fromiter((e[0] for e in s.edges), dtype=np.int32, count=E)
    ev = np.fromiter((e[1] for e in s.edges), dtype=np.int32, count=E)
    sig = np.fromiter(s.signature, dtype=np.int32, count=E)
    rot_flat = np.fromiter(
        (e for rot in s.rotation for e in rot), dtype=np.int32, count=2 * E
    )
    rot_ptr = np.zeros(s.n + 1, dtype=np.int32)
    acc = 0
    for v in range(s.n):
        acc += len(s.rotation[v])
        rot_ptr[v + 1] = acc
    return eu, ev, sig, rot_flat, rot_ptr


def face_count(s: EmbeddingScheme, backend: str | None = None) -> int:
    """Face count via the compute kernel (compiled when available)."""
    require_valid(s, connected=False)
    if not s.edges:
        return s.n
    kernels = _kernels_py if backend == "python" else _default_kernels
    E = len(s.edges)
    eu, ev, sig, rot_flat, rot_ptr = _kernel_arrays(s)
    pos_u = np.zeros(E, dtype=np.int32)
    pos_v = np.zeros(E, dtype=np.int32)
    visited = np.zeros(4 * E, dtype=np.uint8)
    return int(
        kernels.face_count(s.n, E, eu, ev, sig, rot_flat, rot_ptr, pos_u, pos_v, visited)
    )


def euler_characteristic(s: EmbeddingScheme) -> int:
    """V - E + F; additive over components, so defined for disconnected
    schemes too (each component contributes the characteristic of its own
    surface)."""
    return s.n - len(s.edges) + face_count(s)


def euler_genus(s: EmbeddingScheme) -> int:
    """2 - V + E - F; 0 for the sphere, 1 for the projective plane, and so on."""
    require_valid(s)
    genus = 2 - euler_characteristic(s)
    assert genus >= 0, "Euler genus of a cellular scheme cannot be negative"
    return genus


# ----------------------------------------------------------------------------
# orientability and switching


def _switching_signs(s: EmbeddingScheme) -> tuple[list[int], bool]:
    """BFS vertex signs per component; second value says whether all edges
    are consistent, i.e. sig(e) == sign(u) * sign(v) everywhere, which is
    orientability."""
    signs = [0] * s.n
    adj: list[list[tuple[int, int]]] = [[] for _ in range(s.n)]
    for i, (u, v) in enumerate(s.edges):
        adj[u].append((v, i))
        adj[v].append((u, i))
    for root in range(s.n):
        if signs[root]:
            continue
        signs[root] = 1
        queue = [root]
        qi = 0
        while qi < len(queue):
            x = queue[qi]
            qi += 1
            for y, e in adj[x]:
                if signs[y] == 0:
                    signs[y] = signs[x] * s.signature[e]
                    queue.append(y)
    ok = all(
        s.signature[i] == signs[u] * signs[v] for i, (u, v) in enumerate(s.edges)
    )
    return signs, ok


def is_orientable_scheme(s: EmbeddingScheme) -> bool:
    """True when every cycle has positive sign product, equivalently when
    switching can make the signature all-positive."""
    require_valid(s, connected=False)
    return _switching_signs(s)[1]


def switch_vertex(s: EmbeddingScheme, v: int) -> EmbeddingScheme:
    """Flip the local orientation at v: negate the signs of its incident
    edges and reverse its rotation.  The embedded surface is unchanged."""
    require_valid(s)
    s.graph.check_vertex(v)
    signature = list(s.signature)
    for i, (a, b) in enumerate(s.edges):
        if v in (a, b):
            signature[i] = -signature[i]
    rotation = list(s.rotation)
    rotation[v] = tuple(reversed(rotation[v]))
    return EmbeddingScheme(s.n, s.edges, tuple(rotation), tuple(signature))


def to_all_positive(s: EmbeddingScheme) -> EmbeddingScheme:
    """Switch an orientable scheme into its all-positive form."""
    require_valid(s)
    signs, ok = _switching_signs(s)
    if not ok:
        raise SchemeError("scheme is not orientable, no all-positive form exists")
    out = s
    for v in range(s.n):
        if signs[v] < 0:
            out = switch_vertex(out, v)
    assert all(sig == 1 for sig in out.signature)
    return out


# ----------------------------------------------------------------------------
# crosscap addition


def add_crosscap(s: EmbeddingScheme) -> EmbeddingScheme:
    """Turn an orientable scheme into a non-orientable one of Euler genus at
    most one higher.

    The scheme is switched to all-positive form, then the signature of the
    smallest non-tree edge (by endpoint pair, against a BFS tree rooted at
    vertex 0) is flipped.  The fundamental cycle of that edge becomes
    negative, so the result is non-orientable; the Euler genus change is
    asserted on every call.
    """
    require_valid(s)
    if not is_orientable_scheme(s):
        raise SchemeError("add_crosscap needs an orientable scheme")
    if len(s.edges) < s.n:
        raise SchemeError("add_crosscap needs a cycle; trees have none")

    base = to_all_positive(s)
    g = base.graph
    in_tree = [False] * len(base.edges)
    seen = [False] * base.n
    seen[0] = True
    queue = [0]
    qi = 0
    edge_ids = {}
    for i, (u, v) in enumerate(base.edges):
        edge_ids[(u, v)] = i
        edge_ids[(v, u)] = i
    while qi < len(queue):
        x = queue[qi]
        qi += 1
        for y in g.adj[x]:
            if not seen[y]:
                seen[y] = True
                in_tree[edge_ids[(x, y)]] = True
                queue.append(y)
    non_tree = [
        i for i in range(len(base.edges)) if not in_tree[i]
    ]
    assert non_tree, "a connected graph with E >= V has a non-tree edge"
    flip = min(non_tree, key=lambda i: tuple(sorted(base.edges[i])))

    signature = list(base.signature)
    signature[flip] = -signature[flip]
    result = EmbeddingScheme(base.n, base.edges, base.rotation, tuple(signature))

    assert not is_orientable_scheme(result), "crosscap must break orientability"
    delta = euler_genus(result) - euler_genus(s)
    assert delta in (-1, 0, 1), f"crosscap changed Euler genus by {delta}"
    assert delta <= 1
    return result


# ----------------------------------------------------------------------------
# random schemes and construction helpers


def random_scheme(g: Graph, seed: int | None = None, orientable: bool | None = None) -> EmbeddingScheme:
    """Uniformly random rotations and signs on a connected graph.

    orientable=True forces an all-positive signature; None leaves the signs
    random (the result may or may not be orientable).
    """
    if not g.is_connected():
        raise SchemeError("random_scheme needs a connected graph")
    rng = random.Random(seed if seed is not None else 0)
    edge_list = g.edge_list
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(edge_list):
        incident[u].append(i)
        incident[v].append(i)
    rotation = []
    for v in range(g.n):
        rot = incident[v][:]
        rng.shuffle(rot)
        rotation.append(tuple(rot))
    if orientable:
        signature = [1] * len(edge_list)
    else:
        signature = [rng.choice((1, -1)) for _ in edge_list]
        if orientable is False and all(sig == 1 for sig in signature) and edge_list:
            signature[rng.randrange(len(edge_list))] = -1
    return EmbeddingScheme(g.n, tuple(edge_list), tuple(rotation), tuple(signature))


def scheme_from_faces(
    n: int, faces: list[list[int]]
) -> EmbeddingScheme:
    """Orientable scheme from a face list (each face a vertex cycle).

    Face orientations are aligned by propagation so that every edge is
    traversed once in each direction, then each vertex's rotation is read
    off from its corners.  Input must describe a closed oriented surface
    (every edge in exactly two faces).
    """
    edge_ids: dict[tuple[int, int], int] = {}
    edges: list[tuple[int, int]] = []

    def eid(u: int, v: int) -> int:
        key = (u, v) if u < v else (v, u)
        if key not in edge_ids:
            edge_ids[key] = len(edges)
            edges.append(key)
        return edge_ids[key]

    face_darts: list[list[tuple[int, int]]] = []
    dart_faces: dict[tuple[int, int], list[int]] = {}
    for fi, face in enumerate(faces):
        darts = []
        for a, b in zip(face, face[1:] + face[:1]):
            eid(a, b)
            darts.append((a, b))
        face_darts.append(darts)
        for a, b in darts:
            dart_faces.setdefault((min(a, b), max(a, b)), []).append(fi)

    for key, fs in dart_faces.items():
        if len(fs) != 2:
            raise SchemeError(f"edge {key} lies in {len(fs)} faces, need exactly 2")

    # orient faces consistently: adjacent faces must traverse a shared edge
    # in opposite directions
    flipped = [None] * len(faces)
    flipped[0] = False
    stack = [0]
    while stack:
        fi = stack.pop()
        darts = face_darts[fi]
        if flipped[fi]:
            darts = [(b, a) for a, b in reversed(darts)]
        directed = set(darts)
        for a, b in darts:
            for fj in dart_faces[(min(a, b), max(a, b))]:
                if fj == fi:
                    continue
                other = face_darts[fj]
                needs_flip = (a, b) not in {
                    (y, x) for x, y in other
                }
                if flipped[fj] is None:
                    flipped[fj] = needs_flip
                    stack.append(fj)
                else:
                    actual = other if not flipped[fj] else [(y, x) for x, y in other]
                    if (b, a) not in set(actual):
                        raise SchemeError(
                            "face list cannot be oriented consistently"
                        )
    if any(f is None for f in flipped):
        raise SchemeError("face list is not connected")

    successor: list[dict[int, int]] = [dict() for _ in range(n)]
    for fi, darts in enumerate(face_darts):
        if flipped[fi]:
            darts = [(b, a) for a, b in reversed(darts)]
        for (a, b), (b2, c) in zip(darts, darts[1:] + darts[:1]):
            assert b == b2
            successor[b][eid(a, b)] = eid(b, c)

    rotation = []
    for v in range(n):
        succ = successor[v]
        if not succ:
            raise SchemeError(f"vertex {v} appears in no face")
        start = min(succ)
        rot = [start]
        while True:
            nxt = succ[rot[-1]]
            if nxt == start:
                break
            rot.append(nxt)
        if len(rot) != len(succ):
            raise SchemeError(f"corners at vertex {v} do not close a single cycle")
        rotation.append(tuple(rot))

    scheme = EmbeddingScheme(
        n, tuple(edges), tuple(rotation), tuple([1] * len(edges))
    )
    require_valid(scheme)
    assert face_count(scheme) == len(faces), "scheme must reproduce the face list"
    return scheme


def relabel_scheme(s: EmbeddingScheme, perm) -> EmbeddingScheme:
    """Rename vertex v to perm[v]; edges are re-indexed in sorted endpoint
    order.  Pure relabeling, so faces, genus and orientability persist."""
    require_valid(s, connected=False)
    perm = tuple(int(x) for x in perm)
    if sorted(perm) != list(range(s.n)):
        raise SchemeError("perm must be a permutation of the vertices")
    new_pairs = [
        (min(perm[u], perm[v]), max(perm[u], perm[v])) for u, v in s.edges
    ]
    order = sorted(range(len(new_pairs)), key=lambda i: new_pairs[i])
    new_id = {old: new for new, old in enumerate(order)}
    rotation: list[tuple[int, ...] | None] = [None] * s.n
    for v in range(s.n):
        rotation[perm[v]] = tuple(new_id[e] for e in s.rotation[v])
    return EmbeddingScheme(
        s.n,
        tuple(new_pairs[i] for i in order),
        tuple(rotation),
        tuple(s.signature[i] for i in order),
    )


# ----------------------------------------------------------------------------
# serialization


def scheme_to_json(s: EmbeddingScheme) -> dict:
    return {
        "n": s.n,
        "edges": [list(e) for e in s.edges],
        "rotation": [list(r) for r in s.rotation],
        "signature": list(s.signature),
    }


def scheme_from_json(data: dict) -> EmbeddingScheme:
    return EmbeddingScheme.build(
        data["n"], data["edges"], data["rotation"], data["signature"]
    )
