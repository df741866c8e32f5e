"""Independent cop-game oracle: memoized depth-bounded minimax.

Deliberately shares nothing with the package solver beyond the Graph type.
Cop positions are multisets (sorted tuples), the robber placement sees the
cop placement, and capture is checked after every half-move.  A game the
cop side can win at all can be won without ever repeating a (position,
turn) pair, so minimax with the state count as depth budget decides the
infinite game exactly.

The memo exploits monotonicity in the depth budget: for each state it
keeps the largest budget known to lose and the smallest known to win, so
repeated probes converge instead of recomputing full subtrees.
"""

from __future__ import annotations

import math
import sys
from itertools import combinations_with_replacement, product


def _closed(graph):
    return [sorted(set(graph.adj[v]) | {v}) for v in range(graph.n)]


def minimax_copwin(graph, k: int) -> bool:
    """True when k cops win on graph under optimal play by both sides."""
    n = graph.n
    closed = _closed(graph)
    positions = math.comb(n + k - 1, k) * n * 2
    budget = positions + 2
    if sys.getrecursionlimit() < 4 * budget + 1000:
        sys.setrecursionlimit(4 * budget + 1000)

    lose_upto: dict = {}
    win_from: dict = {}

    def cop_moves(cops):
        seen = set()
        for dest in product(*(closed[c] for c in cops)):
            seen.add(tuple(sorted(dest)))
        return sorted(seen)

    def win(cops, robber, cop_turn, depth):
        if robber in cops:
            return True
        if depth <= 0:
            return False
        state = (cops, robber, cop_turn)
        if win_from.get(state, depth + 1) <= depth:
            return True
        if lose_upto.get(state, -1) >= depth:
            return False
        if cop_turn:
            value = any(
                win(c2, robber, False, depth - 1) for c2 in cop_moves(cops)
            )
        else:
            value = all(
                win(cops, r2, True, depth - 1) for r2 in closed[robber]
            )
        if value:
            win_from[state] = min(win_from.get(state, depth), depth)
        else:
            lose_upto[state] = max(lose_upto.get(state, depth), depth)
        return value

    for placement in combinations_with_replacement(range(n), k):
        if all(win(placement, r, True, budget) for r in range(n)):
            return True
    return False


def minimax_cop_number(graph) -> int:
    for k in range(1, graph.n + 1):
        if minimax_copwin(graph, k):
            return k
    raise AssertionError("k = n always wins")
