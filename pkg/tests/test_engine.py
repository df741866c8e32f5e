import pytest

from coprobber.generators import generate
from coprobber.graphs import Graph
from coprobber.solver import (
    StrategyHoleError,
    extract_robber_strategy,
    extract_strategies,
    solve_k_copwin,
    strategy_from_json,
    strategy_to_json,
)
from coprobber.covering import check_weak_cover
from coprobber.engine import (
    IllegalMoveError,
    legal_cop_move,
    play,
    transcript_to_json,
    transfer_strategy,
    verify_winning,
)


def _optimal_pair(g: Graph, k: int):
    result = solve_k_copwin(g, k)
    assert result.copwin
    cop, robber = extract_strategies(result)
    return result, cop, robber


def test_play_path_capture():
    g = generate("path", (5,))
    _, cop, robber = _optimal_pair(g, 1)
    t = play(g, cop, robber)
    assert t.outcome == "capture"
    assert t.capture_index >= 0
    data = transcript_to_json(t)
    assert data["outcome"] == "capture"
    assert data["placements"]["cops"] == list(cop.placement)


def test_play_respects_rank():
    # optimal play on C4 with 2 cops ends within the initial rank
    g = generate("cycle", (4,))
    result, cop, robber = _optimal_pair(g, 2)
    t = play(g, cop, robber)
    assert t.outcome == "capture"
    cops0 = cop.placement
    r0 = t.robber_placement
    from coprobber.solver import COP_TURN

    assert t.capture_index <= max(result.state_rank(cops0, r0, COP_TURN), 0)


def test_play_timeout_with_lazy_cops():
    g = generate("cycle", (6,))

    class LazyCops:
        placement = (0,)

        def move(self, cops, robber):
            return cops  # never moves

    robber = extract_robber_strategy(solve_k_copwin(g, 1))
    t = play(g, LazyCops(), robber, limit=40)
    assert t.outcome == "timeout"
    assert t.capture_index is None


def test_legal_cop_move_multiset():
    g = generate("cycle", (4,))
    assert legal_cop_move(g, (0, 0), (1, 3))
    assert legal_cop_move(g, (0, 2), (0, 2))
    assert not legal_cop_move(g, (0, 2), (2, 2, 2))
    assert not legal_cop_move(g, (0, 0), (2, 2))  # both hop two steps


def test_illegal_move_raises():
    g = generate("path", (4,))

    class TeleportCops:
        placement = (0,)

        def move(self, cops, robber):
            return (3,)

    robber = extract_robber_strategy(solve_k_copwin(g, 1))
    with pytest.raises(IllegalMoveError):
        play(g, TeleportCops(), robber)


def test_strategy_json_roundtrip():
    g = generate("cycle", (5,))
    result = solve_k_copwin(g, 2)
    cop, _ = extract_strategies(result)
    back = strategy_from_json(strategy_to_json(cop))
    assert back.k == cop.k
    assert back.placement == cop.placement
    assert back.moves == cop.moves


def test_verify_winning_positional():
    g = generate("path", (6,))
    _, cop, _ = _optimal_pair(g, 1)
    verdict = verify_winning(g, cop)
    assert verdict.ok
    assert verdict.max_cop_moves >= 1
    assert verdict.states > 0


def test_verify_detects_lazy_strategy():
    g = generate("cycle", (6,))

    class Lazy:
        placement = (0,)
        k = 1

        def move(self, cops, robber):
            return cops

    verdict = verify_winning(g, Lazy(), k=1)
    assert not verdict.ok
    assert "cycle" in verdict.reason


def test_verify_detects_hole():
    g = generate("path", (4,))
    result = solve_k_copwin(g, 1)
    cop, _ = extract_strategies(result)
    # puncture the table at some reachable state
    full = dict(cop.moves)
    key = next(iter(full))
    del full[key]
    punctured = type(cop)(
        k=cop.k, graph6=cop.graph6, placement=cop.placement, moves=full
    )
    verdict = verify_winning(g, punctured)
    assert not verdict.ok or key not in cop.moves
    if not verdict.ok:
        assert "hole" in verdict.reason or "strategy" in verdict.reason


def test_transfer_identity_cover():
    g = generate("cycle", (4,))
    cert = check_weak_cover(list(range(4)), g, g)
    assert cert.ok
    _, cop, _ = _optimal_pair(g, 2)
    sim = transfer_strategy(cert.map, cop)
    verdict = verify_winning(g, sim)
    assert verdict.ok


def test_transfer_c6_to_c3():
    c6 = generate("cycle", (6,))
    c3 = generate("cycle", (3,))
    cert = check_weak_cover([0, 1, 2, 0, 1, 2], c6, c3)
    assert cert.ok and cert.map.kind == "TwoSheeted"
    _, cop, _ = _optimal_pair(c6, 2)
    sim = transfer_strategy(cert.map, cop)
    assert sim.placement == tuple(sorted(cert.map.p[c] for c in cop.placement))
    verdict = verify_winning(c3, sim)
    assert verdict.ok
    # one cop already wins C3, so the projected pair certainly does
    t = play(c3, transfer_strategy(cert.map, cop), extract_robber_strategy(solve_k_copwin(c3, 2)))
    assert t.outcome == "capture"
