"""Building simulation games: the base game plus a costly SIM action.

The SIM row pays P1 its best-response value minus the simulation cost c,
and pays P2 whatever a fixed best-response policy makes P1 play after
observing P2's realized action.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .games import Game, MixedStrategy, best_response_set
from .rational import ONE, ZERO, Rat, as_rat

SIM_LABEL = "SIM"


@dataclass(frozen=True)
class BestResponsePolicy:
    """One P1 response mix per P2 action, supported on best responses only."""

    responses: tuple[MixedStrategy, ...]

    def response(self, j: int) -> MixedStrategy:
        return self.responses[j]

    def is_pure(self) -> bool:
        return all(len(r.support()) == 1 for r in self.responses)


def _validate_policy(game: Game, policy: BestResponsePolicy) -> None:
    if len(policy.responses) != game.n2:
        raise ValueError("policy must assign a response to every P2 action")
    for j, resp in enumerate(policy.responses):
        if len(resp.weights) != game.n1:
            raise ValueError("policy responses must be P1 strategies for this game")
        br = set(best_response_set(game, 1, _pure2(game, j)))
        if not set(resp.support()) <= br:
            raise ValueError(
                f"policy response to P2 action {j} puts weight outside the best-response set"
            )


def _pure2(game: Game, j: int) -> MixedStrategy:
    return MixedStrategy(2, tuple(ONE if k == j else ZERO for k in range(game.n2)))


def default_policy(game: Game) -> BestResponsePolicy:
    """The lexicographic policy: lowest-index pure best response per action."""
    responses = []
    for j in range(game.n2):
        a = best_response_set(game, 1, _pure2(game, j))[0]
        responses.append(MixedStrategy(1, tuple(ONE if i == a else ZERO for i in range(game.n1))))
    return BestResponsePolicy(tuple(responses))


def enumerate_pure_policies(game: Game, cap: int = 64) -> list[BestResponsePolicy]:
    """All pure best-response policies, lexicographic; errors past the cap.

    The family is a product over per-action BR sets, hence exponential in
    the number of tied columns.
    """
    br_sets = [best_response_set(game, 1, _pure2(game, j)) for j in range(game.n2)]
    count = 1
    for s in br_sets:
        count *= len(s)
    if count > cap:
        raise ValueError(f"{count} pure best-response policies exceed the cap of {cap}")
    policies = []
    for choice in itertools.product(*br_sets):
        responses = tuple(
            MixedStrategy(1, tuple(ONE if i == a else ZERO for i in range(game.n1)))
            for a in choice
        )
        policies.append(BestResponsePolicy(responses))
    return policies


@dataclass(frozen=True)
class SimulationGame:
    """A base game with its SIM-augmented normal form at one fixed cost."""

    base: Game
    cost: Rat
    policy: BestResponsePolicy
    augmented: Game

    @property
    def sim_index(self) -> int:
        return self.base.n1  # SIM is always the appended last row


def sim_row_payoffs(game: Game, policy: BestResponsePolicy) -> tuple[tuple[Rat, ...], tuple[Rat, ...]]:
    """Zero-cost SIM payoffs: per column, (P1 best-response value, P2's
    expected payoff under the policy's response)."""
    row1 = []
    row2 = []
    for j in range(game.n2):
        row1.append(max(game.u1[i][j] for i in range(game.n1)))
        resp = policy.response(j)
        row2.append(sum((w * game.u2[i][j] for i, w in enumerate(resp.weights) if w != 0), ZERO))
    return tuple(row1), tuple(row2)


def build(game: Game, c, policy: BestResponsePolicy | None = None,
          label: str = SIM_LABEL) -> SimulationGame:
    """Augment a game with the SIM action at cost c for a fixed policy."""
    cost = as_rat(c)
    if policy is None:
        policy = default_policy(game)
    else:
        _validate_policy(game, policy)
    row1, row2 = sim_row_payoffs(game, policy)
    augmented = Game(
        p1_actions=game.p1_actions + (label,),
        p2_actions=game.p2_actions,
        u1=game.u1 + (tuple(v - cost for v in row1),),
        u2=game.u2 + (row2,),
    )
    return SimulationGame(game, cost, policy, augmented)


def build_all_policies(game: Game, c, policy_cap: int = 64,
                       label: str = SIM_LABEL) -> tuple[Game, tuple[BestResponsePolicy, ...]]:
    """The all-policies variant: one simulate action per pure policy.

    Every SIM copy pays P1 the same best-response value minus cost; the
    copies differ only in what P2 receives.  Labels carry the policy's
    response indices, e.g. "SIM[0,1]".
    """
    cost = as_rat(c)
    policies = tuple(enumerate_pure_policies(game, cap=policy_cap))
    u1_rows = list(game.u1)
    u2_rows = list(game.u2)
    labels = list(game.p1_actions)
    for policy in policies:
        row1, row2 = sim_row_payoffs(game, policy)
        u1_rows.append(tuple(v - cost for v in row1))
        u2_rows.append(row2)
        choice = ",".join(str(policy.response(j).support()[0]) for j in range(game.n2))
        labels.append(f"{label}[{choice}]")
    augmented = Game(tuple(labels), game.p2_actions, tuple(u1_rows), tuple(u2_rows))
    return augmented, policies


def mix_policies(policies, weights) -> BestResponsePolicy:
    """Convex combination of pure policies into one stochastic policy."""
    n2 = len(policies[0].responses)
    n1 = len(policies[0].responses[0].weights)
    responses = []
    for j in range(n2):
        combined = [ZERO] * n1
        for policy, w in zip(policies, weights):
            if w == 0:
                continue
            for i, v in enumerate(policy.response(j).weights):
                combined[i] += w * v
        responses.append(MixedStrategy(1, tuple(combined)))
    return BestResponsePolicy(tuple(responses))


@dataclass(frozen=True)
class AllPoliciesSolution:
    """Per-policy decomposition of the equilibria of the all-policies game."""

    policies: tuple[BestResponsePolicy, ...]
    new_equilibria: tuple[tuple, ...]  # per policy: profiles with SIM weight > 0
    base_equilibria: tuple  # components of the base game, reported once
    overlaps: tuple[tuple[int, int], ...]  # policy index pairs sharing a new profile


def solve_all_policies(game: Game, c, solver, policy_cap: int = 64) -> AllPoliciesSolution:
    """Solve the simulation game separately for every pure policy.

    ``solver`` maps a Game to its NE components (e.g.
    equilibria.all_nash_equilibria).  New equilibria are the component
    vertex profiles that put positive weight on SIM; the base game's own
    equilibria are reported once.  A new profile shared by two policies
    with genuinely different payoffs is flagged as a diagnostic: such
    profiles lift to distinct equilibria of the all-policies game (mass
    on different SIM copies), so sharing is possible in degenerate games,
    but it is worth surfacing.  Policies that build identical augmented
    games (ties that never move P2's payoff) overlap trivially and are
    not flagged.
    """
    cost = as_rat(c)
    policies = enumerate_pure_policies(game, cap=policy_cap)
    sim = game.n1
    per_policy: list[tuple] = []
    augmented_games = []
    profile_owner: dict[tuple, int] = {}
    overlaps: list[tuple[int, int]] = []
    for idx, policy in enumerate(policies):
        aug = build(game, cost, policy).augmented
        augmented_games.append(aug)
        new_profiles = []
        for comp in solver(aug):
            for v1 in comp.p1_vertices:
                if v1[sim] == 0:
                    continue
                for v2 in comp.p2_vertices:
                    new_profiles.append((v1, v2))
        new_profiles = sorted(set(new_profiles))
        for prof in new_profiles:
            owner = profile_owner.get(prof)
            if owner is None:
                profile_owner[prof] = idx
            elif augmented_games[owner] != aug:
                # two policies whose payoffs actually differ sharing a new
                # equilibrium would contradict the disjoint-union reduction;
                # identical augmented games are the duplicate-action case
                # and overlap trivially
                overlaps.append((owner, idx))
        per_policy.append(tuple(new_profiles))
    base_components = tuple(solver(game))
    return AllPoliciesSolution(tuple(policies), tuple(per_policy), base_components, tuple(overlaps))
