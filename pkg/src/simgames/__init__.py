"""Exact solvers for two-player games with a costly simulate-the-opponent action."""

from .games import (
    Game,
    GameFormatError,
    ActionCapExceeded,
    VerificationError,
    MixedStrategy,
    Profile,
    parse_game,
    game_to_dict,
    expected_utility,
    best_response_set,
    pure_nash_equilibria,
    maxmin,
    pure_commitment_equilibria,
    has_br_tiebreaking,
    is_generic,
    is_nash,
)
from .rational import Rat, as_rat, format_rational, parse_rational
from .simulation import (
    BestResponsePolicy,
    SimulationGame,
    build,
    build_all_policies,
    default_policy,
    enumerate_pure_policies,
    mix_policies,
    solve_all_policies,
)
from .equilibria import NEComponent, SupportPair, all_nash_equilibria
from .voi import VoiReport, voi_of, persistence_threshold
from .sweep import (
    BreakpointSet,
    TrajectorySegment,
    LimitEquilibrium,
    CheapNEDecomposition,
    breakpoints,
    trajectories,
    limit_equilibria,
    extreme_regimes,
    decompose_cheap_ne,
)
from .fastpath import TripletCandidate, GenericityError, suitable_triplets, fast_cheap_ne
from .welfare import ClassificationReport, classify, construct_trust_sim_ne, zero_sum_bounds, welfare_report

__version__ = "0.1.0"
