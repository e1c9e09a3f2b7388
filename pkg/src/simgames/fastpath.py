"""Linear-time equilibrium computation for generic games with cheap simulation.

In a generic game every NE of the augmented game on the first cost
interval is pure or has both supports of size two, and the mixed ones
come from "suitable triplets": a baseline pair (a, b) where a is P1's
unique best response to b and b is P2's best commitment among columns
answered by a, plus a deviation column d maximizing an attractiveness
ratio.  Two matrix passes find the best responses; everything after runs
on per-row/per-column aggregates, so the whole search is linear in the
size of the payoff matrix.
"""

from __future__ import annotations

from dataclasses import dataclass

from .games import Game, MixedStrategy, Profile, is_generic, is_nash
from .rational import ONE, ZERO, Rat, as_rat
from .simulation import build, default_policy

CLASS_GREATER = "greater"
CLASS_LESS = "less"


class GenericityError(RuntimeError):
    """The game violates a genericity assumption the fast path relies on."""


@dataclass
class OpCounter:
    """Instrumentation for the linearity claim of the triplet search."""

    br_ops: int = 0
    triplet_ops: int = 0


@dataclass(frozen=True)
class TripletCandidate:
    """A baseline/deviation triple with its ratio and mixing threshold.

    ``p_threshold`` is P1's SIM probability that leaves P2 indifferent
    between the baseline column and the deviation; it does not depend on
    the simulation cost.
    """

    baseline_a: int
    baseline_b: int
    deviation_d: int
    ratio: Rat
    dev_class: str
    p_threshold: Rat


def _unique_best_rows(game: Game, counter: OpCounter) -> list[int]:
    """Per column, P1's unique best-response row (genericity assumed)."""
    out = []
    for j in range(game.n2):
        best, best_i = None, -1
        for i in range(game.n1):
            counter.br_ops += 1
            v = game.u1[i][j]
            if best is None or v > best:
                best, best_i = v, i
        out.append(best_i)
    return out


def _unique_best_cols(game: Game, counter: OpCounter) -> list[int]:
    """Per row, P2's unique best-response column."""
    out = []
    for i in range(game.n1):
        best, best_j = None, -1
        for j in range(game.n2):
            counter.br_ops += 1
            v = game.u2[i][j]
            if best is None or v > best:
                best, best_j = v, j
        out.append(best_j)
    return out


def classify_deviation(game: Game, baseline: tuple[int, int], d: int,
                       br_rows: list[int] | None = None) -> str | None:
    """The (D2) sign trichotomy for a deviation column, or None.

    Compares P2's payoff against the baseline row, at the baseline, and
    under P1's best response to d.  Mixed signs mean d can never appear
    in a cheap-simulation equilibrium with this baseline.
    """
    a, b = baseline
    if d == b:
        raise ValueError("the baseline column itself is not a deviation")
    if br_rows is None:
        br_rows = _unique_best_rows(game, OpCounter())
    unsimulated = game.u2[a][d]
    baseline_value = game.u2[a][b]
    simulated = game.u2[br_rows[d]][d]
    if unsimulated > baseline_value > simulated:
        return CLASS_GREATER
    if unsimulated < baseline_value < simulated:
        return CLASS_LESS
    return None


def attractiveness_ratio(game: Game, baseline: tuple[int, int], d: int) -> tuple[str, Rat]:
    """Classify a deviation and return its attractiveness ratio.

    Class "greater" returns r_d = gain-if-unsimulated / loss-if-simulated;
    class "less" returns the inverse ratio.  A deviation hitting the
    equality case in a game claimed generic is a genericity contradiction.
    """
    a, b = baseline
    counter = OpCounter()
    br_rows = _unique_best_rows(game, counter)
    if br_rows[b] != a:
        raise ValueError("baseline row must be the unique best response to the baseline column")
    dev_class = classify_deviation(game, baseline, d, br_rows)
    unsimulated = game.u2[a][d]
    baseline_value = game.u2[a][b]
    simulated = game.u2[br_rows[d]][d]
    if dev_class == CLASS_GREATER:
        return dev_class, (unsimulated - baseline_value) / (baseline_value - simulated)
    if dev_class == CLASS_LESS:
        return dev_class, (simulated - baseline_value) / (baseline_value - unsimulated)
    if unsimulated == baseline_value or simulated == baseline_value:
        raise GenericityError(
            f"deviation {d} ties the baseline payoff; the sign trichotomy needs strict comparisons"
        )
    return "none", ZERO


def threshold_probability(game: Game, baseline: tuple[int, int], d: int, dev_class: str) -> Rat:
    """P1's SIM probability making P2 indifferent between b and d."""
    a, b = baseline
    br_rows = _unique_best_rows(game, OpCounter())
    unsimulated = game.u2[a][d]
    baseline_value = game.u2[a][b]
    simulated = game.u2[br_rows[d]][d]
    if dev_class == CLASS_GREATER:
        gain = unsimulated - baseline_value
        loss = baseline_value - simulated
        return gain / (gain + loss)
    if dev_class == CLASS_LESS:
        drop = baseline_value - unsimulated
        rise = simulated - baseline_value
        return drop / (drop + rise)
    raise ValueError(f"unknown deviation class {dev_class!r}")


def suitable_triplets(game: Game, counter: OpCounter | None = None) -> list[TripletCandidate]:
    """All baseline/deviation triplets that can carry a mixed simulation NE.

    Two matrix passes produce the unique best responses; the candidate
    baselines are at most one column per row (the best commitment among
    columns b with br(b) = a), and each baseline admits at most one
    deviation per class (the ratio maximizer).  Ties anywhere contradict
    genericity and raise.
    """
    generic, violations = is_generic(game)
    if not generic:
        raise GenericityError("; ".join(violations))
    counter = counter if counter is not None else OpCounter()
    br_rows = _unique_best_rows(game, counter)
    _unique_best_cols(game, counter)  # pure-NE pass; kept for the complexity contract
    # Group columns by their best-response row and pick, per row, the
    # commitment P2 prefers among them ((B1) then (B2)).
    best_commitment: dict[int, int] = {}
    for b in range(game.n2):
        counter.triplet_ops += 1
        a = br_rows[b]
        cur = best_commitment.get(a)
        if cur is None or game.u2[a][b] > game.u2[a][cur]:
            best_commitment[a] = b
    z_values = []  # per column: P2's payoff when P1 best-responds to it
    for d in range(game.n2):
        counter.triplet_ops += 1
        z_values.append(game.u2[br_rows[d]][d])
    triplets: list[TripletCandidate] = []
    for a in sorted(best_commitment):
        b = best_commitment[a]
        baseline_value = game.u2[a][b]
        best_greater: tuple[Rat, int] | None = None
        best_less: tuple[Rat, int] | None = None
        for d in range(game.n2):
            counter.triplet_ops += 1
            if d == b:
                continue
            unsimulated = game.u2[a][d]
            simulated = z_values[d]
            if unsimulated > baseline_value > simulated:
                r = (unsimulated - baseline_value) / (baseline_value - simulated)
                if best_greater is not None and r == best_greater[0]:
                    raise GenericityError(f"attractiveness ratio tie at columns {best_greater[1]} and {d}")
                if best_greater is None or r > best_greater[0]:
                    best_greater = (r, d)
            elif unsimulated < baseline_value < simulated:
                r = (simulated - baseline_value) / (baseline_value - unsimulated)
                if best_less is not None and r == best_less[0]:
                    raise GenericityError(f"inverse ratio tie at columns {best_less[1]} and {d}")
                if best_less is None or r > best_less[0]:
                    best_less = (r, d)
        for dev_class, found in ((CLASS_GREATER, best_greater), (CLASS_LESS, best_less)):
            if found is None:
                continue
            r, d = found
            triplets.append(
                TripletCandidate(
                    baseline_a=a,
                    baseline_b=b,
                    deviation_d=d,
                    ratio=r,
                    dev_class=dev_class,
                    p_threshold=threshold_probability(game, (a, b), d, dev_class),
                )
            )
    return triplets


def ratio_tie_violations(game: Game) -> list[str]:
    """Attractiveness-ratio ties per baseline candidate, as messages.

    Used by the genericity check: distinct payoffs rule out best-response
    ties, but two deviations can still share a ratio by coincidence.
    """
    counter = OpCounter()
    br_rows = _unique_best_rows(game, counter)
    best_commitment: dict[int, int] = {}
    for b in range(game.n2):
        a = br_rows[b]
        cur = best_commitment.get(a)
        if cur is None or game.u2[a][b] > game.u2[a][cur]:
            best_commitment[a] = b
    violations = []
    for a, b in sorted(best_commitment.items()):
        baseline_value = game.u2[a][b]
        seen: dict[str, dict[Rat, int]] = {CLASS_GREATER: {}, CLASS_LESS: {}}
        for d in range(game.n2):
            if d == b:
                continue
            unsimulated = game.u2[a][d]
            simulated = game.u2[br_rows[d]][d]
            if unsimulated > baseline_value > simulated:
                r = (unsimulated - baseline_value) / (baseline_value - simulated)
                cls = CLASS_GREATER
            elif unsimulated < baseline_value < simulated:
                r = (simulated - baseline_value) / (baseline_value - unsimulated)
                cls = CLASS_LESS
            else:
                continue
            if r in seen[cls]:
                violations.append(
                    f"baseline ({a},{b}): deviations {seen[cls][r]} and {d} share ratio {r}"
                )
            else:
                seen[cls][r] = d
    return violations


def fast_cheap_ne(game: Game, c) -> list[Profile]:
    """All NE of the simulation game at a cheap cost, without enumeration.

    Valid for generic games and 0 < c below the first breakpoint; the
    assembled candidates are verified by exact deviation checks, so a
    cost outside that range degrades to correct (possibly smaller)
    output rather than a wrong one.  Profiles live in the augmented game
    (SIM last).
    """
    cost = as_rat(c)
    generic, violations = is_generic(game)
    if not generic:
        raise GenericityError("; ".join(violations))
    if cost <= 0:
        raise ValueError("the fast path needs a strictly positive cost")
    sim_game = build(game, cost, default_policy(game))
    aug = sim_game.augmented
    sim = sim_game.sim_index
    out: list[Profile] = []
    # Pure equilibria of the base game survive (their VoI is zero); the
    # deviation check still runs as part of the self-validation contract.
    counter = OpCounter()
    br_rows = _unique_best_rows(game, counter)
    best_cols = _unique_best_cols(game, counter)
    for j in range(game.n2):
        i = br_rows[j]
        if best_cols[i] == j:
            profile = Profile(
                MixedStrategy(1, tuple(ONE if k == i else ZERO for k in range(aug.n1))),
                MixedStrategy(2, tuple(ONE if k == j else ZERO for k in range(aug.n2))),
            )
            if is_nash(aug, profile):
                out.append(profile)
    for triplet in suitable_triplets(game):
        a, b, d = triplet.baseline_a, triplet.baseline_b, triplet.deviation_d
        # P1's indifference between a and SIM pins P2's deviation weight at
        # alpha*c, with alpha from the regret of facing d unprepared.
        alpha = ONE / (game.u1[br_rows[d]][d] - game.u1[a][d])
        q = alpha * cost
        if not (0 < q < 1):
            continue
        p = triplet.p_threshold
        w1 = [ZERO] * aug.n1
        w1[a] = ONE - p
        w1[sim] = p
        w2 = [ZERO] * aug.n2
        w2[b] = ONE - q
        w2[d] = q
        profile = Profile(MixedStrategy(1, tuple(w1)), MixedStrategy(2, tuple(w2)))
        if is_nash(aug, profile):
            out.append(profile)
    out.sort(key=lambda pr: (pr.p1.weights, pr.p2.weights))
    return out
