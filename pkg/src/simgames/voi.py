"""Value of information of simulation and the NE persistence threshold.

VoI compares P1's clairvoyant payoff (best-responding to P2's realized
action) with the best fixed response against the same mix.  Embedding a
base-game NE into the simulation game stays an equilibrium exactly when
the cost is at least the VoI of P2's strategy.
"""

from __future__ import annotations

from dataclasses import dataclass

from .games import Game, MixedStrategy, Profile, action_values, is_nash
from .rational import ZERO, Rat


@dataclass(frozen=True)
class VoiReport:
    strategy: MixedStrategy
    best_response_value: Rat
    clairvoyant_value: Rat
    voi: Rat


def voi_of(game: Game, pi2: MixedStrategy) -> VoiReport:
    """Exact value of information of simulating against pi2.

    ``game`` must be the base game: a strategy carrying a SIM coordinate
    from an augmented game must be restricted by the caller first.
    """
    if len(pi2.weights) != game.n2:
        raise ValueError("strategy does not match the game's P2 actions")
    clairvoyant = ZERO
    for j, q in enumerate(pi2.weights):
        if q == 0:
            continue
        clairvoyant += q * max(game.u1[i][j] for i in range(game.n1))
    best_fixed = max(action_values(game, 1, pi2))
    return VoiReport(pi2, best_fixed, clairvoyant, clairvoyant - best_fixed)


def persistence_threshold(game: Game, ne: Profile) -> Rat:
    """The cost threshold at which a base NE persists in the simulation game.

    Embedding ``ne`` with zero SIM weight into the augmented game is a NE
    exactly for costs at or above the returned value; that value is also
    always a breakpoint of the cost sweep.
    """
    if not is_nash(game, ne):
        raise ValueError("profile fails the exact Nash deviation check")
    return voi_of(game, ne.p2).voi
