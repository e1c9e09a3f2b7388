"""Game classification and welfare effects of simulation across costs.

Covers the generalized-trust-game test (every optimal pure commitment
strictly Pareto-improves every equilibrium), the constructive equilibrium
showing simulation helps such games at low cost, the zero-sum welfare
bound, and per-cost welfare reports against the base game's equilibria.
"""

from __future__ import annotations

from dataclasses import dataclass

from .equilibria import NEComponent, all_nash_equilibria
from .games import (
    Game,
    MixedStrategy,
    Profile,
    VerificationError,
    expected_utility,
    has_br_tiebreaking,
    is_generic,
    is_nash,
    maxmin,
)
from .rational import ONE, ZERO, Rat, as_rat
from .simulation import BestResponsePolicy, build, default_policy
from .voi import voi_of


@dataclass(frozen=True)
class ClassificationReport:
    is_zero_sum: bool
    is_generic: bool
    has_br_tiebreaking: bool
    is_generalized_trust_game: bool
    upper_threshold: Rat


def component_utilities(game: Game, comp: NEComponent) -> list[tuple[Rat, Rat]]:
    """Exact utility pairs at every vertex profile of a component."""
    out = []
    for v1 in comp.p1_vertices:
        for v2 in comp.p2_vertices:
            out.append(expected_utility(game, Profile(MixedStrategy(1, v1), MixedStrategy(2, v2))))
    return out


def classify(game: Game, policy: BestResponsePolicy | None = None) -> ClassificationReport:
    """Structural flags plus the generalized-trust-game test.

    The GTG test compares every optimal pure-commitment outcome (P2
    leading, responses under the fixed policy) against every NE component
    vertex; strict dominance at the vertices extends to the whole product
    polytope by bilinearity.
    """
    policy = policy if policy is not None else default_policy(game)
    zero_cost = build(game, ZERO, policy)
    sim_u2 = zero_cost.augmented.u2[zero_cost.sim_index]
    commit_value = max(sim_u2)
    outcomes = []
    for b in range(game.n2):
        if sim_u2[b] == commit_value:
            br_value = max(game.u1[i][b] for i in range(game.n1))
            outcomes.append((br_value, sim_u2[b]))
    gtg = True
    for comp in all_nash_equilibria(game):
        for u1, u2 in component_utilities(game, comp):
            if not all(cu1 > u1 and cu2 > u2 for cu1, cu2 in outcomes):
                gtg = False
                break
        if not gtg:
            break
    return ClassificationReport(
        is_zero_sum=game.is_zero_sum(),
        is_generic=is_generic(game)[0],
        has_br_tiebreaking=has_br_tiebreaking(game),
        is_generalized_trust_game=gtg,
        upper_threshold=max(v for row in game.u1 for v in row) - maxmin(game, 1)[0],
    )


@dataclass(frozen=True)
class TrustConstruction:
    """One constructed simulation equilibrium plus its derivation trace."""

    case: str  # "A" (no universal best response) or "B"
    profile: Profile  # in the augmented game
    utilities: tuple[Rat, Rat]
    optimal_commitments: tuple[int, ...]
    universal_best_responses: tuple[int, ...]
    auxiliary_game: Game | None
    auxiliary_ne: tuple[tuple[Rat, ...], tuple[Rat, ...]] | None
    sim_prob: Rat | None
    alpha: Rat | None
    eta_bound: Rat | None


def construct_trust_sim_ne(game: Game, c, policy: BestResponsePolicy | None = None) -> list[TrustConstruction]:
    """Build the theorem's Pareto-improving equilibria for a trust game.

    Case (A): the optimal commitments share no best response, so P1
    simulates outright and P2 randomizes uniformly over them.  Case (B):
    solve the auxiliary regret/ratio game restricted to universal best
    responses and non-optimal columns, then mix its equilibrium with the
    commitment baseline.  Every candidate is verified exactly; a failure
    means the cost is above the theorem's "sufficiently low" regime and
    raises with the failing deviation visible.
    """
    cost = as_rat(c)
    if cost <= 0:
        raise ValueError("the construction needs a positive simulation cost")
    policy = policy if policy is not None else default_policy(game)
    report = classify(game, policy)
    if not report.is_generalized_trust_game:
        raise VerificationError("the game is not a generalized trust game")
    if report.has_br_tiebreaking:
        raise VerificationError("the construction requires no BR utility tiebreaking")
    sim_game = build(game, cost, policy)
    aug = sim_game.augmented
    sim = sim_game.sim_index
    sim_u2 = build(game, ZERO, policy).augmented.u2[sim]
    commit_value = max(sim_u2)
    oc = tuple(b for b in range(game.n2) if sim_u2[b] == commit_value)
    br_sets = []
    for b in range(game.n2):
        col = [game.u1[i][b] for i in range(game.n1)]
        top = max(col)
        br_sets.append({i for i in range(game.n1) if col[i] == top})
    ubr = tuple(sorted(set.intersection(*(br_sets[b] for b in oc))))

    if not ubr:
        # Case (A): always simulate; P2 uniform over optimal commitments.
        weights1 = tuple(ONE if a == sim else ZERO for a in range(aug.n1))
        share = Rat(1, len(oc))
        weights2 = tuple(share if b in oc else ZERO for b in range(game.n2))
        profile = Profile(MixedStrategy(1, weights1), MixedStrategy(2, weights2))
        _verify(aug, profile, cost)
        return [
            TrustConstruction(
                case="A",
                profile=profile,
                utilities=expected_utility(aug, profile),
                optimal_commitments=oc,
                universal_best_responses=ubr,
                auxiliary_game=None,
                auxiliary_ne=None,
                sim_prob=None,
                alpha=None,
                eta_bound=voi_of(game, profile.p2).voi,
            )
        ]

    # Case (B): auxiliary game over universal best responses x deviations.
    deviations = tuple(d for d in range(game.n2) if d not in oc)
    if not deviations:
        raise VerificationError(
            "every P2 action is an optimal commitment; no deviation column exists"
        )
    zero_sim_u1 = build(game, ZERO, policy).augmented.u1[sim]
    w1 = tuple(
        tuple(-(zero_sim_u1[d] - game.u1[a][d]) for d in deviations) for a in ubr
    )
    w2 = tuple(
        tuple((game.u2[a][d] - commit_value) / (commit_value - sim_u2[d]) for d in deviations)
        for a in ubr
    )
    auxiliary = Game(
        p1_actions=tuple(game.p1_actions[a] for a in ubr),
        p2_actions=tuple(game.p2_actions[d] for d in deviations),
        u1=w1,
        u2=w2,
    )
    share = Rat(1, len(oc))
    constructions = []
    for comp in all_nash_equilibria(auxiliary):
        for rho1 in comp.p1_vertices:
            for rho2 in comp.p2_vertices:
                baseline1 = [ZERO] * game.n1
                for k, a in enumerate(ubr):
                    baseline1[a] = rho1[k]
                deviation2 = [ZERO] * game.n2
                for k, d in enumerate(deviations):
                    deviation2[d] = rho2[k]
                # P2's indifference between commitments and the deviation mix
                # pins P1's SIM probability; P1's indifference between the
                # baseline and SIM pins the deviation mass alpha*c.
                unsim = ZERO
                simulated = ZERO
                regret = ZERO
                for d in deviations:
                    if deviation2[d] == 0:
                        continue
                    row_mix = sum((baseline1[a] * game.u2[a][d] for a in ubr), ZERO)
                    unsim += deviation2[d] * row_mix
                    simulated += deviation2[d] * sim_u2[d]
                    regret += deviation2[d] * (
                        zero_sim_u1[d] - sum((baseline1[a] * game.u1[a][d] for a in ubr), ZERO)
                    )
                if unsim <= commit_value or commit_value <= simulated:
                    raise VerificationError(
                        "auxiliary equilibrium does not give P2 a profitable unsimulated deviation"
                    )
                p = (unsim - commit_value) / (unsim - simulated)
                alpha = ONE / regret
                q = alpha * cost
                if not (0 < q < 1):
                    raise VerificationError(
                        f"deviation mass alpha*c = {q} leaves the simplex; cost too high"
                    )
                weights1 = [ZERO] * aug.n1
                for a in ubr:
                    weights1[a] = (1 - p) * baseline1[a]
                weights1[sim] = p
                weights2 = [
                    (1 - q) * (share if b in oc else ZERO) + q * deviation2[b]
                    for b in range(game.n2)
                ]
                profile = Profile(
                    MixedStrategy(1, tuple(weights1)), MixedStrategy(2, tuple(weights2))
                )
                _verify(aug, profile, cost)
                eta = min(
                    zero_sim_u1[d] - sum((baseline1[a] * game.u1[a][d] for a in ubr), ZERO)
                    for d in deviations
                    if deviation2[d] != 0
                )
                constructions.append(
                    TrustConstruction(
                        case="B",
                        profile=profile,
                        utilities=expected_utility(aug, profile),
                        optimal_commitments=oc,
                        universal_best_responses=ubr,
                        auxiliary_game=auxiliary,
                        auxiliary_ne=(tuple(rho1), tuple(rho2)),
                        sim_prob=p,
                        alpha=alpha,
                        eta_bound=eta,
                    )
                )
    return constructions


def _verify(aug: Game, profile: Profile, cost: Rat) -> None:
    base_value = expected_utility(aug, profile)
    from .games import action_values

    for player, strategy in ((1, profile.p2), (2, profile.p1)):
        values = action_values(aug, player, strategy)
        own = base_value[player - 1]
        for idx, v in enumerate(values):
            if v > own:
                raise VerificationError(
                    f"cost {cost} is above the construction's validity: player {player} "
                    f"gains by deviating to action {idx} ({v} > {own})"
                )


@dataclass(frozen=True)
class ZeroSumVerdict:
    value: Rat
    margins: tuple[tuple[Rat, Rat], ...]  # per component vertex: (u1 - v, -v - u2)
    holds: bool


def zero_sum_bounds(game: Game, c, policy: BestResponsePolicy | None = None) -> ZeroSumVerdict:
    """Check u1 >= v and u2 <= -v on every NE of the simulation game."""
    if not game.is_zero_sum():
        raise ValueError("the welfare bound applies to zero-sum games only")
    cost = as_rat(c)
    value = maxmin(game, 1)[0]
    aug = build(game, cost, policy if policy is not None else default_policy(game)).augmented
    margins = []
    holds = True
    for comp in all_nash_equilibria(aug):
        for u1, u2 in component_utilities(aug, comp):
            m1 = u1 - value
            m2 = -value - u2
            margins.append((m1, m2))
            if m1 < 0 or m2 < 0:
                holds = False
    return ZeroSumVerdict(value, tuple(margins), holds)


@dataclass(frozen=True)
class WelfareEntry:
    cost: Rat
    support_p1: tuple[int, ...]
    support_p2: tuple[int, ...]
    u1_range: tuple[Rat, Rat]
    u2_range: tuple[Rat, Rat]
    verdict: str


@dataclass(frozen=True)
class WelfareReport:
    base_utilities: tuple[tuple[Rat, Rat], ...]
    grid: tuple[WelfareEntry, ...]


_VERDICTS = {
    (True, True): "pareto_better",
    (True, False): "p1_better",
    (False, True): "p2_better",
    (False, False): "pareto_worse",
}


def welfare_report(game: Game, policy: BestResponsePolicy | None = None,
                   c_values=()) -> WelfareReport:
    """Solve the simulation game on a cost grid and compare against base NE.

    Components are tagged by comparing their whole utility range against
    the whole base range: strictly above on both coordinates is a Pareto
    improvement, mixed strict orders favor one player, anything else
    (including overlap or equality) is incomparable.
    """
    policy = policy if policy is not None else default_policy(game)
    base_utils = []
    for comp in all_nash_equilibria(game):
        base_utils.extend(component_utilities(game, comp))
    base_u1_max = max(u for u, _ in base_utils)
    base_u1_min = min(u for u, _ in base_utils)
    base_u2_max = max(u for _, u in base_utils)
    base_u2_min = min(u for _, u in base_utils)
    entries = []
    for raw_c in c_values:
        cost = as_rat(raw_c)
        aug = build(game, cost, policy).augmented
        for comp in all_nash_equilibria(aug):
            utils = component_utilities(aug, comp)
            u1_lo = min(u for u, _ in utils)
            u1_hi = max(u for u, _ in utils)
            u2_lo = min(u for _, u in utils)
            u2_hi = max(u for _, u in utils)
            better1 = u1_lo > base_u1_max
            better2 = u2_lo > base_u2_max
            worse1 = u1_hi < base_u1_min
            worse2 = u2_hi < base_u2_min
            if better1 and better2:
                verdict = "pareto_better"
            elif worse1 and worse2:
                verdict = "pareto_worse"
            elif better1 and worse2:
                verdict = "p1_better"
            elif better2 and worse1:
                verdict = "p2_better"
            else:
                verdict = "incomparable"
            entries.append(
                WelfareEntry(
                    cost=cost,
                    support_p1=comp.support.s1,
                    support_p2=comp.support.s2,
                    u1_range=(u1_lo, u1_hi),
                    u2_range=(u2_lo, u2_hi),
                    verdict=verdict,
                )
            )
    return WelfareReport(tuple(base_utils), tuple(entries))
