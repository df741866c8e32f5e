"""Cop number computation by retrograde analysis.

The game: k cops pick a placement (a multiset of vertices), the robber sees
it and picks a vertex, then the sides alternate starting with the cops.  On
a cop turn any subset of cops may each slide to a neighbor simultaneously;
the robber moves to a neighbor or stays.  Capture is the robber sharing a
vertex with a cop, checked after placements and after every half-move.

solve_k_copwin classifies the entire state space; a state's rank is the
number of half-moves to capture under optimal play by both sides.  The sweep
itself runs in a compiled kernel when available, with a pure-Python fallback
selected at import time.
"""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, NamedTuple

import numpy as np

from .graph6 import write_graph6
from .graphs import Graph, GraphError

from . import _kernels_py

try:
    from . import _kernels as _default_kernels
except ImportError:  # extension not built; pure fallback carries the load
    _default_kernels = _kernels_py

DEFAULT_CAPACITY = 200_000_000

COP_TURN = 0
ROBBER_TURN = 1


class CapacityError(RuntimeError):
    """State space exceeds the configured capacity bound."""


class NoWinningStrategyError(RuntimeError):
    """Cop strategy requested for a position the cops cannot win."""


class StrategyHoleError(KeyError):
    """A strategy was consulted at a state it does not cover."""


class GameState(NamedTuple):
    cops: tuple[int, ...]
    robber: int
    turn: int

    def canonical(self) -> "GameState":
        return GameState(tuple(sorted(self.cops)), self.robber, self.turn)


def default_backend_name() -> str:
    return _default_kernels.BACKEND_NAME


def available_backends() -> tuple[str, ...]:
    names = ["python"]
    if _default_kernels is not _kernels_py:
        names.append("cython")
    return tuple(names)


def _kernels_for(backend: str | None):
    if backend is None:
        return _default_kernels
    if backend == "python":
        return _kernels_py
    if backend == "cython":
        if _default_kernels is _kernels_py:
            raise ValueError("compiled kernel backend not available")
        return _default_kernels
    raise ValueError(f"unknown backend {backend!r}")


def _binom_flat(n: int, k: int) -> np.ndarray:
    rows, cols = n + k, k + 1
    table = np.zeros(rows * cols, dtype=np.int64)
    for x in range(rows):
        for t in range(cols):
            table[x * cols + t] = math.comb(x, t)
    return table


def _colex_rank(cops: tuple[int, ...], binom: np.ndarray, k: int) -> int:
    bcols = k + 1
    total = 0
    for j, c in enumerate(cops):
        total += int(binom[(c + j) * bcols + j + 1])
    return total


def _configs(n: int, k: int, m_configs: int, binom: np.ndarray) -> np.ndarray:
    cfg = np.empty((m_configs, k), dtype=np.int32)
    for tup in itertools.combinations_with_replacement(range(n), k):
        cfg[_colex_rank(tup, binom, k)] = tup
    return cfg


def _closed_csr(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    indptr = np.zeros(g.n + 1, dtype=np.int32)
    flat: list[int] = []
    for v in range(g.n):
        closed = sorted(set(g.adj[v]) | {v})
        flat.extend(closed)
        indptr[v + 1] = len(flat)
    return indptr, np.array(flat, dtype=np.int32)


@dataclass(eq=False)
class SolveResult:
    """Full classification of the k-cop game on a graph.

    ranks[state] is the half-move distance to capture, -1 where the robber
    survives forever.  State indexing matches the kernel contract.
    """

    graph: Graph
    k: int
    m_configs: int
    ranks: np.ndarray
    backend: str
    elapsed_ms: float
    _binom: np.ndarray = field(repr=False)

    @property
    def num_states(self) -> int:
        return int(self.ranks.shape[0])

    def state_index(self, cops, robber: int, turn: int) -> int:
        cops = tuple(sorted(cops))
        if len(cops) != self.k:
            raise GraphError(f"expected {self.k} cops, got {len(cops)}")
        for c in cops:
            self.graph.check_vertex(c)
        self.graph.check_vertex(robber)
        if turn not in (COP_TURN, ROBBER_TURN):
            raise GraphError(f"turn must be 0 or 1, got {turn}")
        cfgi = _colex_rank(cops, self._binom, self.k)
        return (cfgi * self.graph.n + robber) * 2 + turn

    def state_rank(self, cops, robber: int, turn: int) -> int:
        """Half-moves to capture, or -1 when the robber wins this state."""
        return int(self.ranks[self.state_index(cops, robber, turn)])

    def is_copwin_state(self, cops, robber: int, turn: int) -> bool:
        return self.state_rank(cops, robber, turn) >= 0

    @cached_property
    def _cfg(self) -> np.ndarray:
        return _configs(self.graph.n, self.k, self.m_configs, self._binom)

    @cached_property
    def _winning_placements(self) -> np.ndarray:
        view = self.ranks.reshape(self.m_configs, self.graph.n, 2)
        return np.flatnonzero((view[:, :, COP_TURN] >= 0).all(axis=1))

    @cached_property
    def copwin(self) -> bool:
        return bool(self._winning_placements.size)

    @cached_property
    def best_placement(self) -> tuple[int, ...] | None:
        """Lexicographically smallest winning placement, None if not copwin."""
        if not self.copwin:
            return None
        rows = self._cfg[self._winning_placements]
        return min(tuple(int(x) for x in row) for row in rows)

    def ranks_histogram(self) -> dict[str, int]:
        out: dict[str, int] = {}
        positive = self.ranks[self.ranks >= 0]
        counts = np.bincount(positive) if positive.size else np.array([], dtype=np.int64)
        for value, count in enumerate(counts):
            if count:
                out[str(value)] = int(count)
        robber_wins = int((self.ranks < 0).sum())
        if robber_wins:
            out["robber_win"] = robber_wins
        return out

    def placements(self) -> Iterator[tuple[int, ...]]:
        for row in self._cfg:
            yield tuple(int(x) for x in row)


def solve_k_copwin(
    g: Graph,
    k: int,
    capacity: int = DEFAULT_CAPACITY,
    backend: str | None = None,
) -> SolveResult:
    """Classify all states of the k-cop game on g."""
    if k < 1:
        raise GraphError(f"need at least one cop, got k={k}")
    n = g.n
    m_configs = math.comb(n + k - 1, k)
    states = m_configs * n * 2
    if states > capacity:
        raise CapacityError(
            f"state space {states} exceeds capacity {capacity} (n={n}, k={k})"
        )
    kernels = _kernels_for(backend)
    binom = _binom_flat(n, k)
    indptr, nbrs = _closed_csr(g)
    cfg = _configs(n, k, m_configs, binom)
    start = time.perf_counter()
    ranks = kernels.solve_rank_table(
        n, k, indptr, nbrs, np.ascontiguousarray(cfg.reshape(-1)), binom, m_configs
    )
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    return SolveResult(
        graph=g,
        k=k,
        m_configs=m_configs,
        ranks=ranks,
        backend=kernels.BACKEND_NAME,
        elapsed_ms=elapsed_ms,
        _binom=binom,
    )


def cop_number(
    g: Graph,
    capacity: int = DEFAULT_CAPACITY,
    backend: str | None = None,
) -> tuple[int, SolveResult]:
    """Smallest k for which g is k-copwin, plus the solve at that k.

    k=1 is settled through dismantlability, which characterizes one-cop
    graphs; the ascent then starts at k=2.  k=n always wins (the robber must
    place on a cop), so the loop terminates.
    """
    if dismantle(g).dismantlable:
        return 1, solve_k_copwin(g, 1, capacity=capacity, backend=backend)
    for k in range(2, g.n + 1):
        result = solve_k_copwin(g, k, capacity=capacity, backend=backend)
        if result.copwin:
            return k, result
    raise AssertionError("unreachable: placing a cop on every vertex wins")


# ----------------------------------------------------------------------------
# dismantlability


@dataclass(frozen=True)
class DismantleResult:
    dismantlable: bool
    order: tuple[int, ...] | None
    core_vertices: tuple[int, ...] | None
    core: Graph | None


def dismantle(g: Graph) -> DismantleResult:
    """Iteratively strip dominated vertices.

    A vertex u is dominated when some other vertex v has N[u] contained in
    N[v] within the current subgraph.  Reaching a single vertex proves the
    graph one-cop-win; otherwise the stuck subgraph is returned as a witness.
    The smallest dominated vertex is removed first, making the order
    deterministic (success does not depend on the choice).
    """
    closed: dict[int, set[int]] = {
        v: set(g.adj[v]) | {v} for v in range(g.n)
    }
    alive = set(range(g.n))
    order: list[int] = []
    while len(alive) > 1:
        dominated = None
        for u in sorted(alive):
            nu = closed[u]
            for v in alive:
                if v != u and nu <= closed[v]:
                    dominated = u
                    break
            if dominated is not None:
                break
        if dominated is None:
            core_vertices = tuple(sorted(alive))
            return DismantleResult(
                False, None, core_vertices, g.induced_subgraph(core_vertices)
            )
        alive.remove(dominated)
        order.append(dominated)
        for v in alive:
            closed[v].discard(dominated)
    order.extend(alive)
    return DismantleResult(True, tuple(order), None, None)


# ----------------------------------------------------------------------------
# strategies


def cop_moves(g: Graph, cops: tuple[int, ...]) -> list[tuple[int, ...]]:
    """All distinct sorted cop multisets reachable in one simultaneous move."""
    options = [sorted(set(g.adj[c]) | {c}) for c in cops]
    seen = set()
    for combo in itertools.product(*options):
        seen.add(tuple(sorted(combo)))
    return sorted(seen)


@dataclass
class CopStrategy:
    """Positional cop strategy: placement plus a move per reachable state.

    moves maps (sorted cop tuple, robber) to the next sorted cop tuple; every
    prescribed move lowers the state rank by exactly one.
    """

    k: int
    graph6: str
    placement: tuple[int, ...]
    moves: dict[tuple[tuple[int, ...], int], tuple[int, ...]]

    def move(self, cops: tuple[int, ...], robber: int) -> tuple[int, ...]:
        key = (tuple(sorted(cops)), robber)
        try:
            return self.moves[key]
        except KeyError:
            raise StrategyHoleError(
                f"cop strategy undefined at cops={key[0]}, robber={robber}"
            ) from None


class RobberStrategy:
    """Maximally evasive robber derived from a solve: prefer states the
    robber wins outright, otherwise maximize the capture distance."""

    def __init__(self, result: SolveResult):
        self.result = result

    def _score(self, cops: tuple[int, ...], r: int) -> tuple[int, int]:
        rank = self.result.state_rank(cops, r, COP_TURN)
        # robber-win states sort above every finite rank
        return (1, 0) if rank < 0 else (0, rank)

    def place(self, cops: tuple[int, ...]) -> int:
        n = self.result.graph.n
        return max(range(n), key=lambda r: (self._score(cops, r), -r))

    def move(self, cops: tuple[int, ...], robber: int) -> int:
        g = self.result.graph
        options = sorted(set(g.adj[robber]) | {robber})
        return max(options, key=lambda r: (self._score(cops, r), -r))


def extract_strategies(result: SolveResult) -> tuple[CopStrategy, RobberStrategy]:
    """Winning cop strategy from the best placement, plus the evasive robber.

    The cop move from each reachable cop-turn state is the lexicographically
    smallest successor whose rank is exactly one lower.
    """
    if not result.copwin:
        raise NoWinningStrategyError(
            f"graph is not {result.k}-copwin; no cop strategy exists"
        )
    g = result.graph
    placement = result.best_placement
    assert placement is not None
    moves: dict[tuple[tuple[int, ...], int], tuple[int, ...]] = {}

    start_states = [(placement, r) for r in range(g.n) if r not in placement]
    pending = list(start_states)
    seen = set(start_states)
    while pending:
        cops, robber = pending.pop()
        rank = result.state_rank(cops, robber, COP_TURN)
        assert rank > 0, "reachable non-capture cop-turn state must be a cop win"
        target = None
        for succ in cop_moves(g, cops):
            if result.state_rank(succ, robber, ROBBER_TURN) == rank - 1:
                target = succ
                break
        assert target is not None, "rank recurrence guarantees a descending move"
        moves[(cops, robber)] = target
        if robber in target:
            continue
        for r2 in sorted(set(g.adj[robber]) | {robber}):
            if r2 in target:
                continue  # suicide move ends the game immediately
            state = (target, r2)
            if state not in seen:
                seen.add(state)
                pending.append(state)

    cop_strategy = CopStrategy(
        k=result.k,
        graph6=write_graph6(g),
        placement=placement,
        moves=moves,
    )
    return cop_strategy, RobberStrategy(result)


def extract_robber_strategy(result: SolveResult) -> RobberStrategy:
    return RobberStrategy(result)


# ----------------------------------------------------------------------------
# strategy serialization


def strategy_to_json(strategy: CopStrategy) -> dict:
    moves = [
        {"cops": list(cops), "robber": robber, "to": list(target)}
        for (cops, robber), target in sorted(strategy.moves.items())
    ]
    return {
        "k": strategy.k,
        "graph6": strategy.graph6,
        "placement": list(strategy.placement),
        "moves": moves,
    }


def strategy_from_json(data: dict) -> CopStrategy:
    moves = {
        (tuple(entry["cops"]), int(entry["robber"])): tuple(entry["to"])
        for entry in data["moves"]
    }
    return CopStrategy(
        k=int(data["k"]),
        graph6=data["graph6"],
        placement=tuple(data["placement"]),
        moves=moves,
    )
