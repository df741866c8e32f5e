"""Exhaustive minimum Euler genus search.

Every cellular embedding of a connected graph is described by some scheme,
and every scheme is switching-equivalent to one whose signature is positive
on a fixed spanning tree.  Enumerating all rotation systems (with one
incident edge pinned per vertex to quotient out cyclic relabeling) times
all tree-positive signatures therefore visits every embedding up to
equivalence.  The search space has size prod_v (deg(v)-1)! * 2^(E-V+1).

With tree-positive signatures, orientability is simply "no negative edge":
any negative non-tree edge closes a negative fundamental cycle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import permutations, product

import numpy as np

from .graphs import Graph
from .embedding import EmbeddingScheme, SchemeError, require_valid
from .solver import CapacityError

from . import _kernels_py

try:
    from . import _kernels as _default_kernels
except ImportError:
    _default_kernels = _kernels_py


DEFAULT_GENUS_BUDGET = 10_000_000

MODES = ("orientable", "nonorientable", "any")


@dataclass(frozen=True)
class MinGenusResult:
    genus: int
    scheme: EmbeddingScheme
    mode: str
    space_size: int

    @property
    def orientable_genus(self) -> int:
        if self.genus % 2 != 0:
            raise ValueError("odd Euler genus has no orientable genus")
        return self.genus // 2


def search_space_size(g: Graph) -> int:
    size = 1
    for d in g.degrees:
        size *= math.factorial(max(d - 1, 0))
    size *= 2 ** (len(g.edges) - g.n + 1)
    return size


def euler_genus_lower_bound(g: Graph, mode: str = "any") -> int:
    """Euler-formula floor on the genus of any cellular embedding.

    Faces of simple graphs have length >= 3 except for the single length-2
    face of K2, so F <= max(1, 2E/3) and genus >= 2 - V + E - F.
    """
    n, e = g.n, len(g.edges)
    if e == 0:
        lb = 0
    elif n == 2:
        lb = 0
    else:
        f_max = max(1, (2 * e) // 3)
        lb = max(0, 2 - n + e - f_max)
    if mode == "orientable" and lb % 2 != 0:
        lb += 1
    if mode == "nonorientable":
        lb = max(lb, 1)
    return lb


def _spanning_tree_edges(g: Graph) -> set[int]:
    edge_ids = {}
    for i, (u, v) in enumerate(g.edge_list):
        edge_ids[(u, v)] = i
        edge_ids[(v, u)] = i
    seen = [False] * g.n
    seen[0] = True
    queue = [0]
    qi = 0
    tree = set()
    while qi < len(queue):
        x = queue[qi]
        qi += 1
        for y in g.adj[x]:
            if not seen[y]:
                seen[y] = True
                tree.add(edge_ids[(x, y)])
                queue.append(y)
    return tree


def min_euler_genus(
    g: Graph,
    mode: str = "any",
    budget: int = DEFAULT_GENUS_BUDGET,
    backend: str | None = None,
) -> MinGenusResult:
    """Minimum Euler genus over all cellular embeddings, with a witness.

    mode restricts the signature classes searched: "orientable" keeps only
    the all-positive class, "nonorientable" keeps classes with a negative
    non-tree edge, "any" keeps both.  Raises CapacityError when the search
    space exceeds the budget, SchemeError when the mode is unsatisfiable
    (non-orientable embeddings need a cycle).
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    if not g.is_connected():
        raise SchemeError("minimum genus search needs a connected graph")

    space = search_space_size(g)
    if space > budget:
        raise CapacityError(
            f"genus search space {space} exceeds budget {budget}"
        )

    edges = g.edge_list
    n_edges = len(edges)
    tree = _spanning_tree_edges(g)
    non_tree = [i for i in range(n_edges) if i not in tree]
    if mode == "nonorientable" and not non_tree:
        raise SchemeError(
            "graph has no cycles, every embedding is orientable"
        )

    incident: list[list[int]] = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(edges):
        incident[u].append(i)
        incident[v].append(i)
    rotation_choices = []
    for v in range(g.n):
        inc = incident[v]
        if not inc:
            rotation_choices.append([()])
        else:
            first, rest = inc[0], inc[1:]
            rotation_choices.append(
                [(first,) + perm for perm in permutations(rest)]
            )

    if mode == "orientable":
        sig_choices = [tuple([1] * len(non_tree))]
    else:
        sig_choices = list(product((1, -1), repeat=len(non_tree)))
        if mode == "nonorientable":
            sig_choices = [s for s in sig_choices if -1 in s]

    kernels = _kernels_py if backend == "python" else _default_kernels
    eu = np.fromiter((e[0] for e in edges), dtype=np.int32, count=n_edges)
    ev = np.fromiter((e[1] for e in edges), dtype=np.int32, count=n_edges)
    rot_ptr = np.zeros(g.n + 1, dtype=np.int32)
    acc = 0
    for v in range(g.n):
        acc += len(incident[v])
        rot_ptr[v + 1] = acc
    rot_flat = np.zeros(2 * n_edges, dtype=np.int32)
    sig = np.ones(n_edges, dtype=np.int32)
    pos_u = np.zeros(max(n_edges, 1), dtype=np.int32)
    pos_v = np.zeros(max(n_edges, 1), dtype=np.int32)
    visited = np.zeros(max(4 * n_edges, 1), dtype=np.uint8)

    lb = euler_genus_lower_bound(g, mode)
    best = None
    best_rotation = None
    best_sig = None

    if n_edges == 0:
        # single vertex, one embedding: the sphere
        best, best_rotation, best_sig = 0, ((),) if g.n == 1 else None, ()
        assert g.n == 1
    else:
        done = False
        for rotation in product(*rotation_choices):
            pos = 0
            for rot in rotation:
                for e in rot:
                    rot_flat[pos] = e
                    pos += 1
            for sig_choice in sig_choices:
                sig[:] = 1
                for idx, s in zip(non_tree, sig_choice):
                    sig[idx] = s
                f = int(
                    kernels.face_count(
                        g.n, n_edges, eu, ev, sig, rot_flat, rot_ptr,
                        pos_u, pos_v, visited,
                    )
                )
                genus = 2 - (g.n - n_edges + f)
                if best is None or genus < best:
                    best = genus
                    best_rotation = rotation
                    best_sig = sig_choice
                    if best == lb:
                        done = True
                        break
            if done:
                break

    signature = [1] * n_edges
    for idx, s in zip(non_tree, best_sig):
        signature[idx] = s
    witness = EmbeddingScheme(
        g.n, tuple(edges), tuple(best_rotation), tuple(signature)
    )
    require_valid(witness)
    return MinGenusResult(best, witness, mode, space)
