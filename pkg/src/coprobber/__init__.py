"""Cops-and-robber games on finite graphs, embedding schemes and covers.

The package computes cop numbers by retrograde analysis over the full game
state space, checks dismantlability, extracts and verifies positional
strategies, represents signed rotation systems with face tracing and Euler
genus, builds orientable double covers, certifies weak covers, transfers cop
strategies along two-sheeted covers, and reproduces a family of closed-form
cop-number bounds.  Everything operates on immutable graphs with integer
vertices 0..n-1.
"""

__version__ = "0.1.0"

from .graphs import Graph, GraphError, disjoint_union, neighborhood
from .graph6 import parse_graph6, write_graph6, Graph6Error
from .generators import generate, random_gnp, enumerate_graphs
from .isomorphism import find_isomorphism, is_isomorphic
from .solver import (
    CapacityError,
    CopStrategy,
    GameState,
    NoWinningStrategyError,
    RobberStrategy,
    SolveResult,
    StrategyHoleError,
    cop_number,
    dismantle,
    extract_strategies,
    solve_k_copwin,
)
from .embedding import (
    EmbeddingScheme,
    FaceSet,
    SchemeError,
    add_crosscap,
    euler_characteristic,
    euler_genus,
    face_count,
    is_orientable_scheme,
    random_scheme,
    scheme_from_faces,
    switch_vertex,
    trace_faces,
    validate_scheme,
)
from .genus_search import MinGenusResult, min_euler_genus
from .covering import (
    CoverError,
    CoveringMap,
    WeakCoverResult,
    check_weak_cover,
    deck_involution,
    double_cover,
    fibre,
)
from .engine import (
    IllegalMoveError,
    SimulatedCopStrategy,
    Transcript,
    VerifyResult,
    play,
    transfer_strategy,
    verify_winning,
)
from . import bounds
