"""Game play-outs, exhaustive strategy verification, and strategy transfer.

Play alternates cop and robber half-moves after the two placements, cops
first, and ends at the first coincidence of the robber with a cop.  Capture
is checked after the robber's placement and after every half-move.

Strategy transfer runs a cover-graph strategy on the base graph: a lifted
robber is maintained in the fibre of the actual robber, the cover strategy
chases the lifted robber, and the cover cops' images are played on the
base.  The weak-cover condition p(N(u)) = N(p(u)) guarantees every robber
move lifts; capture upstairs projects to capture downstairs, so a winning
cover strategy wins on the base.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph
from .graph6 import write_graph6
from .solver import CopStrategy, StrategyHoleError
from .covering import CoveringMap, CoverError, check_weak_cover

CAPTURE = "capture"
TIMEOUT = "timeout"

DEFAULT_PLAY_LIMIT = 10_000


class IllegalMoveError(RuntimeError):
    """A strategy produced a move the game rules forbid."""


@dataclass(frozen=True)
class Transcript:
    """Full record of one play-out.

    moves holds half-moves in order, each ("cops", sorted tuple) or
    ("robber", vertex).  capture_index is the half-move after which capture
    held, with 0 meaning capture at placement; None on timeout.
    """

    graph6: str
    k: int
    cop_placement: tuple[int, ...]
    robber_placement: int | None
    moves: tuple[tuple[str, object], ...]
    outcome: str
    capture_index: int | None


def transcript_to_json(t: Transcript) -> dict:
    return {
        "graph6": t.graph6,
        "k": t.k,
        "placements": {
            "cops": list(t.cop_placement),
            "robber": t.robber_placement,
        },
        "moves": [
            {"by": by, "to": list(to) if isinstance(to, tuple) else to}
            for by, to in t.moves
        ],
        "outcome": t.outcome,
        "capture_index": t.capture_index,
    }


def legal_cop_move(g: Graph, old: tuple[int, ...], new: tuple[int, ...]) -> bool:
    """Whether the cop multiset old can become new in one simultaneous move
    (some assignment moves every cop within its closed neighborhood)."""
    if len(old) != len(new):
        return False
    slots = list(new)
    used = [False] * len(slots)

    def match(i: int) -> bool:
        if i == len(old):
            return True
        allowed = set(g.adj[old[i]]) | {old[i]}
        tried = set()
        for j, t in enumerate(slots):
            if used[j] or t in tried or t not in allowed:
                continue
            tried.add(t)
            used[j] = True
            if match(i + 1):
                return True
            used[j] = False
        return False

    return match(0)


def play(g: Graph, cop_strategy, robber_strategy, limit: int = DEFAULT_PLAY_LIMIT) -> Transcript:
    """Play the two strategies against each other for at most limit
    half-moves after placement.

    Raises StrategyHoleError when a strategy is undefined at a reached
    state and IllegalMoveError when one breaks the rules.
    """
    if limit < 1:
        raise ValueError("limit must be at least 1")
    cops = tuple(sorted(cop_strategy.placement))
    if not cops:
        raise IllegalMoveError("cop strategy places no cops")
    for c in cops:
        g.check_vertex(c)
    k = len(cops)

    robber = robber_strategy.place(cops)
    g.check_vertex(robber)
    moves: list[tuple[str, object]] = []

    def finish(outcome: str, capture_index: int | None) -> Transcript:
        return Transcript(
            graph6=write_graph6(g),
            k=k,
            cop_placement=cops0,
            robber_placement=robber,
            moves=tuple(moves),
            outcome=outcome,
            capture_index=capture_index,
        )

    cops0 = cops
    if robber in cops:
        return finish(CAPTURE, 0)

    index = 0
    while index < limit:
        index += 1
        new_cops = tuple(sorted(cop_strategy.move(cops, robber)))
        if not legal_cop_move(g, cops, new_cops):
            raise IllegalMoveError(
                f"cop move {cops} -> {new_cops} is not a legal simultaneous move"
            )
        cops = new_cops
        moves.append(("cops", cops))
        if robber in cops:
            return finish(CAPTURE, index)
        if index >= limit:
            break

        index += 1
        new_robber = robber_strategy.move(cops, robber)
        if new_robber != robber and not g.has_edge(robber, new_robber):
            raise IllegalMoveError(
                f"robber move {robber} -> {new_robber} is not along an edge"
            )
        robber = new_robber
        moves.append(("robber", robber))
        if robber in cops:
            return finish(CAPTURE, index)

    return finish(TIMEOUT, None)


# ----------------------------------------------------------------------------
# strategy transfer along covering maps


class SimulatedCopStrategy:
    """Cover-graph cop strategy replayed on the base graph.

    Keeps the cover cops and a lifted robber as mutable simulation state;
    a fresh instance is needed for each play-out.  The transition itself is
    the pure method respond(), which exhaustive verification drives
    directly so it can branch over robber behaviors.
    """

    def __init__(self, cover_map: CoveringMap, cover_strategy: CopStrategy):
        result = check_weak_cover(
            cover_map.p, cover_map.source, cover_map.target
        )
        if not result.ok:
            raise CoverError(
                "map fails weak-cover certification: "
                + "; ".join(result.violations)
            )
        if cover_strategy.graph6 != write_graph6(cover_map.source):
            raise CoverError(
                "strategy was extracted for a different graph than the "
                "covering graph of the map"
            )
        self.map = cover_map
        self.cover_strategy = cover_strategy
        self.cover_placement = tuple(sorted(cover_strategy.placement))
        for c in self.cover_placement:
            cover_map.source.check_vertex(c)
        self.placement = tuple(
            sorted(cover_map.p[c] for c in self.cover_placement)
        )
        self.k = len(self.cover_placement)
        self._cover_cops = self.cover_placement
        self._lifted: int | None = None

    # pure core, also used by verify_winning
    def initial_state(self):
        return (self.cover_placement, None)

    def _advance_lift(self, lifted: int | None, robber: int) -> int:
        p = self.map.p
        src = self.map.source
        if lifted is None:
            options = [s for s in range(src.n) if p[s] == robber]
        elif p[lifted] == robber:
            return lifted
        else:
            options = [s for s in src.adj[lifted] if p[s] == robber]
        if not options:
            raise CoverError(
                f"no lift of robber vertex {robber}; broken weak-cover certificate"
            )
        return min(options)

    def respond(self, state, cops: tuple[int, ...], robber: int):
        """(simulation state, base cops, base robber) -> (state', base cops')."""
        cover_cops, lifted = state
        p = self.map.p
        projected = tuple(sorted(p[c] for c in cover_cops))
        if tuple(sorted(cops)) != projected:
            raise IllegalMoveError(
                f"base cops {cops} are not the projection {projected} of the simulated cover cops"
            )
        lifted = self._advance_lift(lifted, robber)
        assert p[lifted] == robber
        new_cover = tuple(sorted(self.cover_strategy.move(cover_cops, lifted)))
        new_base = tuple(sorted(p[c] for c in new_cover))
        return (new_cover, lifted), new_base

    # mutable wrapper used by play()
    def move(self, cops: tuple[int, ...], robber: int) -> tuple[int, ...]:
        state = (self._cover_cops, self._lifted)
        (self._cover_cops, self._lifted), new_base = self.respond(
            state, cops, robber
        )
        return new_base


def transfer_strategy(cover_map: CoveringMap, cover_strategy: CopStrategy) -> SimulatedCopStrategy:
    """Base-graph strategy that simulates cover_strategy upstairs.

    The map is re-certified as a weak cover; transfer refuses anything
    weaker, since the lifting of robber moves depends on it.
    """
    return SimulatedCopStrategy(cover_map, cover_strategy)


# ----------------------------------------------------------------------------
# exhaustive verification


@dataclass(frozen=True)
class VerifyResult:
    ok: bool
    reason: str | None
    max_cop_moves: int | None
    states: int

    def __bool__(self) -> bool:
        return self.ok


def _pure_interface(strategy):
    if isinstance(strategy, SimulatedCopStrategy):
        return (
            strategy.initial_state(),
            tuple(sorted(strategy.placement)),
            strategy.respond,
        )
    placement = tuple(sorted(strategy.placement))

    def respond(state, cops, robber):
        return None, tuple(sorted(strategy.move(cops, robber)))

    return None, placement, respond


def verify_winning(g: Graph, strategy, k: int | None = None) -> VerifyResult:
    """Exhaustively check that the strategy captures every robber behavior.

    Traverses the reachable graph of (strategy state, cop positions, robber
    position) nodes, branching over all robber placements and moves.  The
    strategy is winning iff no reachable cycle avoids capture and no
    reachable state falls outside its domain.  max_cop_moves is the longest
    capture over all behaviors, in cop half-moves.
    """
    state0, placement, respond = _pure_interface(strategy)
    for c in placement:
        g.check_vertex(c)
    if k is not None and len(placement) != k:
        return VerifyResult(
            False, f"strategy places {len(placement)} cops, expected {k}", None, 0
        )

    GRAY, BLACK = 1, 2
    color: dict = {}
    depth: dict = {}

    def children_of(node):
        state, cops, robber = node
        nstate, ncops = respond(state, cops, robber)
        if not legal_cop_move(g, cops, ncops):
            raise IllegalMoveError(
                f"strategy move {cops} -> {ncops} is not legal"
            )
        if robber in ncops:
            return []
        kids = []
        for r2 in sorted(set(g.adj[robber]) | {robber}):
            if r2 in ncops:
                continue  # robber stepping onto a cop ends the game at once
            kids.append((nstate, ncops, r2))
        return kids

    roots = [
        (state0, placement, r) for r in range(g.n) if r not in placement
    ]
    for root in roots:
        if color.get(root) == BLACK:
            continue
        color[root] = GRAY
        frames: list[list] = [[root, None, []]]
        while frames:
            frame = frames[-1]
            node, it, kid_depths = frame
            if it is None:
                try:
                    kids = children_of(node)
                except StrategyHoleError as e:
                    return VerifyResult(
                        False, f"strategy hole: {e.args[0]}", None, len(color)
                    )
                except (IllegalMoveError, CoverError) as e:
                    return VerifyResult(False, str(e), None, len(color))
                it = frame[1] = iter(kids)
            descended = False
            for kid in it:
                c = color.get(kid)
                if c == GRAY:
                    return VerifyResult(
                        False,
                        "robber evades forever: cycle through "
                        f"cops={kid[1]}, robber={kid[2]}",
                        None,
                        len(color),
                    )
                if c == BLACK:
                    kid_depths.append(depth[kid])
                    continue
                color[kid] = GRAY
                frames.append([kid, None, []])
                descended = True
                break
            if descended:
                continue
            color[node] = BLACK
            depth[node] = 1 + (max(kid_depths) if kid_depths else 0)
            frames.pop()
            if frames:
                frames[-1][2].append(depth[node])

    max_depth = max((depth[r] for r in roots), default=0)
    return VerifyResult(True, None, max_depth, len(color))
