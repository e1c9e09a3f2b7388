"""Exact breakpoints and equilibrium trajectories over the simulation cost.

The simulation game at cost c is the zero-cost augmented game with -c on
the SIM row moved to the right-hand side of each support pair's
indifference system.  P1's side of every system is cost-free, so P1's
equilibrium strategies are constant between breakpoints while P2's
polytope vertices move affinely in c.  Candidate breakpoints are the
feasibility-interval endpoints of all parametric basic solutions; they
over-approximate, so each candidate is kept only when the equilibrium
structure verifiably changes there.
"""

from __future__ import annotations

import csv
import os
from dataclasses import dataclass

from .equilibria import SupportPair, expand_vertex, indifference_system, support_pairs
from .games import (
    ActionCapExceeded,
    Game,
    MixedStrategy,
    Profile,
    VerificationError,
    action_cap,
    best_response_set,
    expected_utility,
    has_br_tiebreaking,
    is_nash,
    maxmin,
    pure_strategy,
)
from .linsys import (
    Interval,
    LinearSystem,
    ParametricSolution,
    Reduced,
    Unsolvable,
    parametric_solutions,
    row_reduce,
    vertices_at,
)
from .rational import ONE, ZERO, Rat, as_rat, format_rational
from .simulation import BestResponsePolicy, build, default_policy

Vec = tuple[Rat, ...]
AffineVec = tuple[Vec, Vec]  # (base, slope)


@dataclass(frozen=True)
class BreakpointSet:
    """Sorted breakpoint values (0 always included) plus sweep metadata."""

    values: tuple[Rat, ...]
    upper_threshold: Rat
    clip_hi: Rat
    context: str
    dropped: tuple[tuple[Rat, str], ...] = ()

    def __post_init__(self):
        if not self.values or self.values[0] != 0:
            raise ValueError("breakpoint sets start at 0")
        if any(a >= b for a, b in zip(self.values, self.values[1:])):
            raise ValueError("breakpoints must be strictly increasing")

    def fences(self) -> tuple[Rat, ...]:
        """Interval fences over the sweep range: breakpoints plus clip_hi."""
        if self.values[-1] == self.clip_hi:
            return self.values
        return self.values + (self.clip_hi,)


@dataclass(frozen=True)
class TrajectorySegment:
    """One equilibrium branch on a cost interval: constant P1, affine P2."""

    interval: tuple[Rat, Rat]
    p1: MixedStrategy
    p2_base: Vec
    p2_slope: Vec
    support: SupportPair

    def p2_at(self, c: Rat) -> Vec:
        return tuple(b + c * s for b, s in zip(self.p2_base, self.p2_slope))

    def profile_at(self, c: Rat) -> Profile:
        return Profile(self.p1, MixedStrategy(2, self.p2_at(c)))


@dataclass(frozen=True)
class LimitEquilibrium:
    """An equilibrium at c = 0 that extends rightward along a segment."""

    profile: Profile
    witness_segment: TrajectorySegment


@dataclass(frozen=True)
class CommitmentOutcome:
    action: int
    label: str
    response: MixedStrategy
    base_utilities: tuple[Rat, Rat]


@dataclass(frozen=True)
class NegativeCostRegime:
    """What every equilibrium collapses to when simulation is subsidized:
    P1 always simulates and P2 picks an optimal pure commitment."""

    commitment_value: Rat
    outcomes: tuple[CommitmentOutcome, ...]


@dataclass(frozen=True)
class CheapNEDecomposition:
    """Baseline/deviation decomposition of a cheap-simulation equilibrium."""

    baseline: Profile  # in the base game (no SIM coordinate)
    deviation: MixedStrategy
    alpha: Rat
    sim_prob: Rat
    deviation_class: tuple[tuple[int, str], ...]


@dataclass(frozen=True)
class _PairData:
    support: SupportPair
    p1_vertices: tuple[Vec, ...]
    p2_solutions: tuple[tuple[AffineVec, Interval], ...]
    p2_only_at: tuple[tuple[Rat, tuple[Vec, ...]], ...]


class SweepAnalysis:
    """Parametric analysis of one simulation game over c in [0, clip].

    Built once per game: P1-side polytopes are cost-free and P2-side
    parametric solutions carry their full feasibility intervals, so the
    structure at any particular cost is a cheap lookup afterwards.
    """

    def __init__(self, game: Game, policy: BestResponsePolicy | None = None,
                 cap: int | None = None):
        cap = action_cap() if cap is None else cap
        if game.n1 > cap or game.n2 > cap:
            raise ActionCapExceeded(
                f"game is {game.n1}x{game.n2}, above the per-player action cap {cap}"
            )
        self.game = game
        self.policy = policy if policy is not None else default_policy(game)
        zero_cost = build(game, ZERO, self.policy)
        self.aug0 = zero_cost.augmented
        self.sim = zero_cost.sim_index
        self.upper_threshold = (
            max(v for row in game.u1 for v in row) - maxmin(game, 1)[0]
        )
        self.clip_hi = self.upper_threshold + 1
        self.adjust = tuple(
            ONE if a == self.sim else ZERO for a in range(self.aug0.n1)
        )
        self._row_beats, self._col_beats = self._dominance_tables()
        self.pairs = self._analyze_pairs()

    # -- construction -------------------------------------------------

    def _dominance_tables(self):
        """Per-cell strict dominance bits, precomputed once.

        Row dominance uses the adjusted payoffs at both ends of the sweep
        range (the comparison is affine in c, so strictness at both ends
        gives strictness everywhere); column dominance is cost-free.
        """
        aug = self.aug0
        lo_rows = aug.u1
        hi_rows = tuple(
            tuple(v - self.clip_hi * self.adjust[a] for v in row)
            for a, row in enumerate(aug.u1)
        )
        row_beats = [
            [
                [
                    lo_rows[other][b] > lo_rows[a][b] and hi_rows[other][b] > hi_rows[a][b]
                    for b in range(aug.n2)
                ]
                for a in range(aug.n1)
            ]
            for other in range(aug.n1)
        ]
        col_beats = [
            [
                [aug.u2[a][other] > aug.u2[a][b] for a in range(aug.n1)]
                for b in range(aug.n2)
            ]
            for other in range(aug.n2)
        ]
        return row_beats, col_beats

    def _prune(self, support: SupportPair) -> bool:
        """Support pairs provably empty across the whole sweep range:
        some supported action is strictly dominated on the opponent's
        support by another action."""
        aug = self.aug0
        for a in support.s1:
            for other in range(aug.n1):
                if other != a and all(self._row_beats[other][a][b] for b in support.s2):
                    return True
        for b in support.s2:
            for other in range(aug.n2):
                if other != b and all(self._col_beats[other][b][a] for a in support.s1):
                    return True
        return False

    def _analyze_pairs(self) -> list[_PairData]:
        out = []
        for support in support_pairs(self.aug0.n1, self.aug0.n2):
            if self._prune(support):
                continue
            # the P2-side reduction is cheap and kills over-determined
            # supports before the costlier P1-side vertex enumeration
            p2_system = indifference_system(
                self.aug0, support, player=1, cost_adjust=self.adjust
            )
            reduced = row_reduce(p2_system)
            if isinstance(reduced, Unsolvable):
                continue
            p1_system = indifference_system(self.aug0, support, player=2)
            p1_vertices = tuple(
                sorted(
                    set(
                        expand_vertex(v, support.s1, self.aug0.n1)
                        for v in vertices_at(p1_system, ZERO)
                    )
                )
            )
            if not p1_vertices:
                continue
            solutions: list[tuple[AffineVec, Interval]] = []
            only_at: list[tuple[Rat, tuple[Vec, ...]]] = []
            if reduced.only_at is not None:
                c_star = reduced.only_at
                if 0 <= c_star <= self.clip_hi:
                    verts = tuple(
                        sorted(
                            set(
                                expand_vertex(v, support.s2, self.aug0.n2)
                                for v in vertices_at(reduced.system, c_star)
                            )
                        )
                    )
                    if verts:
                        only_at.append((c_star, verts))
            else:
                for sol in parametric_solutions(reduced.system):
                    window = sol.feasible_interval.intersect(
                        Interval.closed(ZERO, self.clip_hi)
                    )
                    if window.is_empty:
                        continue
                    base = expand_vertex(sol.value_base, support.s2, self.aug0.n2)
                    slope = expand_vertex(sol.value_slope, support.s2, self.aug0.n2)
                    solutions.append(((base, slope), sol.feasible_interval))
            if solutions or only_at:
                out.append(
                    _PairData(support, p1_vertices, tuple(solutions), tuple(only_at))
                )
        return out

    # -- lookups ------------------------------------------------------

    def raw_candidates(self) -> list[Rat]:
        """Interval endpoints and pinned costs inside [0, clip], plus 0."""
        found = {ZERO}
        for pair in self.pairs:
            for _, interval in pair.p2_solutions:
                for e in interval.finite_endpoints():
                    if 0 <= e <= self.clip_hi:
                        found.add(e)
            for c_star, _ in pair.p2_only_at:
                found.add(c_star)
        return sorted(found)

    def structure_at(self, c: Rat):
        """Affine component structure valid on a neighborhood of c."""
        out = {}
        for pair in self.pairs:
            maps = tuple(
                sorted(
                    {affine for affine, interval in pair.p2_solutions if interval.contains(c)}
                )
            )
            if maps:
                out[pair.support] = (pair.p1_vertices, maps)
        return out

    def inventory_at(self, c: Rat):
        """Concrete component vertices at exactly cost c."""
        out = {}
        for pair in self.pairs:
            values = {
                tuple(b + c * s for b, s in zip(base, slope))
                for (base, slope), interval in pair.p2_solutions
                if interval.contains(c)
            }
            for c_star, verts in pair.p2_only_at:
                if c_star == c:
                    values.update(verts)
            if values:
                out[pair.support] = (pair.p1_vertices, tuple(sorted(values)))
        return out

    @staticmethod
    def _evaluate_structure(structure, c: Rat):
        out = {}
        for support, (p1_vertices, maps) in structure.items():
            values = {
                tuple(b + c * s for b, s in zip(base, slope)) for base, slope in maps
            }
            out[support] = (p1_vertices, tuple(sorted(values)))
        return out

    # -- breakpoint assembly -------------------------------------------

    def breakpoints(self) -> BreakpointSet:
        """Candidate endpoints filtered down to true structure changes.

        A candidate is dropped when the affine structure on both adjacent
        intervals is identical and the exact inventory at the candidate
        itself matches the evaluated structure (no point-degenerate
        extras).  0 is always a breakpoint; candidates at or above the
        clip bound cannot be certified inside the range and lie beyond
        the dominance threshold anyway.
        """
        dropped: list[tuple[Rat, str]] = []
        cands = []
        for c in self.raw_candidates():
            if c < self.clip_hi:
                cands.append(c)
            else:
                dropped.append((c, "at or beyond the dominance threshold clip"))
        fences = cands + [self.clip_hi]
        structures = []
        for lo, hi in zip(fences, fences[1:]):
            structures.append(self.structure_at((lo + hi) / 2))
        kept = [ZERO]
        for idx in range(1, len(cands)):
            e = cands[idx]
            left, right = structures[idx - 1], structures[idx]
            if left != right:
                kept.append(e)
                continue
            if self.inventory_at(e) != self._evaluate_structure(left, e):
                kept.append(e)
                continue
            dropped.append((e, "no equilibrium component changes structure here"))
        return BreakpointSet(
            values=tuple(kept),
            upper_threshold=self.upper_threshold,
            clip_hi=self.clip_hi,
            context=f"{self.game.n1}x{self.game.n2} game, SIM policy fixed",
            dropped=tuple(dropped),
        )

    # -- trajectories ---------------------------------------------------

    def segments_on(self, lo: Rat, hi: Rat, verify: bool = True) -> list[TrajectorySegment]:
        """Verified trajectory segments covering the interval [lo, hi]."""
        mid = (lo + hi) / 2
        segments = []
        for support, (p1_vertices, maps) in sorted(
            self.structure_at(mid).items(), key=lambda kv: (len(kv[0].s1) + len(kv[0].s2), kv[0].s1, kv[0].s2)
        ):
            for v1 in p1_vertices:
                for base, slope in maps:
                    seg = TrajectorySegment(
                        interval=(lo, hi),
                        p1=MixedStrategy(1, v1),
                        p2_base=base,
                        p2_slope=slope,
                        support=support,
                    )
                    if verify:
                        self._verify_segment(seg)
                    segments.append(seg)
        return segments

    def _verify_segment(self, seg: TrajectorySegment) -> None:
        lo, hi = seg.interval
        for c in (lo, (lo + hi) / 2, hi):
            aug = build(self.game, c, self.policy).augmented
            if not is_nash(aug, seg.profile_at(c)):
                raise VerificationError(
                    f"segment {seg.support} fails the deviation check at c={format_rational(c)};"
                    " a breakpoint was missed"
                )


# ---------------------------------------------------------------------------
# Module-level operations


def breakpoints(game: Game, policy: BestResponsePolicy | None = None) -> BreakpointSet:
    return SweepAnalysis(game, policy).breakpoints()


def trajectories(
    game: Game, policy: BestResponsePolicy | None = None, interval_index: int = 0
) -> list[TrajectorySegment]:
    analysis = SweepAnalysis(game, policy)
    fences = analysis.breakpoints().fences()
    if interval_index < 0 or interval_index >= len(fences) - 1:
        raise ValueError(
            f"interval index {interval_index} out of range; {len(fences) - 1} intervals exist"
        )
    return analysis.segments_on(fences[interval_index], fences[interval_index + 1])


def limit_equilibria(
    game: Game, policy: BestResponsePolicy | None = None
) -> list[LimitEquilibrium]:
    """Equilibria at c = 0 reachable as limits from the right.

    These are the first interval's segments evaluated at 0; equilibria of
    the zero-cost game that exist only at 0 have no witnessing segment
    and are excluded by construction.
    """
    analysis = SweepAnalysis(game, policy)
    fences = analysis.breakpoints().fences()
    out = []
    seen = set()
    for seg in analysis.segments_on(fences[0], fences[1]):
        profile = seg.profile_at(ZERO)
        key = (profile.p1.weights, profile.p2.weights)
        if key in seen:
            continue
        seen.add(key)
        out.append(LimitEquilibrium(profile, seg))
    return out


def extreme_regimes(
    game: Game, policy: BestResponsePolicy | None = None
) -> tuple[NegativeCostRegime, Rat]:
    """The subsidized-cost collapse and the prohibitive-cost threshold.

    For c < 0 simulating strongly dominates, so P2 plays optimal pure
    commitments against the policy; above max u1 minus P1's maxmin, SIM
    is strictly dominated and the base game's equilibria are all there is.
    """
    policy = policy if policy is not None else default_policy(game)
    zero_cost = build(game, ZERO, policy)
    sim_row_u2 = zero_cost.augmented.u2[zero_cost.sim_index]
    value = max(sim_row_u2)
    outcomes = []
    for b in range(game.n2):
        if sim_row_u2[b] != value:
            continue
        br_value = max(game.u1[i][b] for i in range(game.n1))
        outcomes.append(
            CommitmentOutcome(
                action=b,
                label=game.p2_actions[b],
                response=policy.response(b),
                base_utilities=(br_value, sim_row_u2[b]),
            )
        )
    upper = max(v for row in game.u1 for v in row) - maxmin(game, 1)[0]
    return NegativeCostRegime(value, tuple(outcomes)), upper


def _convex_coefficients(vertices: tuple[Vec, ...], target: Vec) -> tuple[Rat, ...] | None:
    """Exact convex-combination weights expressing target over vertices."""
    n = len(target)
    rows = [tuple(ONE for _ in vertices)]
    base = [ONE]
    for coord in range(n):
        rows.append(tuple(v[coord] for v in vertices))
        base.append(target[coord])
    system = LinearSystem(
        rows=tuple(rows),
        rhs_base=tuple(base),
        rhs_slope=tuple(ZERO for _ in base),
        nonneg=tuple(True for _ in vertices),
    )
    candidates = vertices_at(system, ZERO)
    if not candidates:
        return None
    return candidates[0]


def decompose_cheap_ne(game: Game, c, ne: Profile,
                       policy: BestResponsePolicy | None = None) -> CheapNEDecomposition:
    """Split a cheap-simulation NE into baseline and deviation policies.

    Follows the structure theorem: P1 mixes a baseline with SIM at a
    cost-independent probability, P2 drifts from the baseline toward a
    deviation at rate alpha per unit of cost.  Every structural condition
    (mutual best response, commitment optimality, the sign trichotomy and
    ratio maximality) is verified exactly and failures raise.
    """
    cost = as_rat(c)
    policy = policy if policy is not None else default_policy(game)
    if has_br_tiebreaking(game):
        raise VerificationError("decomposition requires a game without BR utility tiebreaking")
    analysis = SweepAnalysis(game, policy)
    sim = analysis.sim
    if len(ne.p1.weights) != analysis.aug0.n1:
        raise ValueError("profile must live in the augmented game (SIM last)")
    p = ne.p1.weights[sim]
    if not (0 < p < 1):
        raise ValueError("decomposition needs 0 < SIM probability < 1")
    fences = analysis.breakpoints().fences()
    e1 = fences[1]
    if not (0 < cost < e1):
        raise ValueError(
            f"cost {format_rational(cost)} is not inside (0, {format_rational(e1)})"
        )
    aug_c = build(game, cost, policy).augmented
    if not is_nash(aug_c, ne):
        raise VerificationError("input profile fails the exact deviation check")

    trajectory = None
    for support, (p1_vertices, maps) in sorted(
        analysis.structure_at(cost).items(),
        key=lambda kv: (len(kv[0].s1) + len(kv[0].s2), kv[0].s1, kv[0].s2),
    ):
        if _convex_coefficients(p1_vertices, ne.p1.weights) is None:
            continue
        values = tuple(tuple(b + cost * s for b, s in zip(base, slope)) for base, slope in maps)
        lam = _convex_coefficients(values, ne.p2.weights)
        if lam is None:
            continue
        base_mix = tuple(
            sum((lam[k] * maps[k][0][j] for k in range(len(maps))), ZERO)
            for j in range(analysis.aug0.n2)
        )
        slope_mix = tuple(
            sum((lam[k] * maps[k][1][j] for k in range(len(maps))), ZERO)
            for j in range(analysis.aug0.n2)
        )
        trajectory = (base_mix, slope_mix)
        break
    if trajectory is None:
        raise VerificationError("no parametric component contains the profile")
    base_mix, slope_mix = trajectory
    pi_b2 = base_mix  # trajectory at c = 0
    pi_e2 = tuple(b + e1 * s for b, s in zip(base_mix, slope_mix))
    beta = min(pi_e2[j] / pi_b2[j] for j in range(len(pi_b2)) if pi_b2[j] > 0)
    tilde = tuple(e - beta * b for e, b in zip(pi_e2, pi_b2))
    mass = sum(tilde, ZERO)
    if mass == 0:
        raise VerificationError("P2's trajectory is constant; no deviation direction exists")
    pi_d2 = tuple(t / mass for t in tilde)
    alpha = (ONE - beta) / e1

    pi_b1 = tuple(w / (1 - p) for w in ne.p1.weights[:sim])
    baseline = Profile(MixedStrategy(1, pi_b1), MixedStrategy(2, pi_b2))
    deviation = MixedStrategy(2, pi_d2)

    _verify_decomposition(game, analysis, ne, baseline, deviation, alpha, p, cost)
    classes = _deviation_classes(game, analysis, baseline, deviation)
    return CheapNEDecomposition(baseline, deviation, alpha, p, tuple(sorted(classes.items())))


def _verify_decomposition(game, analysis, ne, baseline, deviation, alpha, p, cost):
    sim = analysis.sim
    if alpha <= 0:
        raise VerificationError("alpha must be positive")
    recon = tuple(
        (1 - alpha * cost) * b + alpha * cost * d
        for b, d in zip(baseline.p2.weights, deviation.weights)
    )
    if recon != ne.p2.weights:
        raise VerificationError("reconstruction identity fails for P2's strategy")
    br_sets = {
        b: set(best_response_set(game, 1, pure_strategy(2, b, game.n2)))
        for b in range(game.n2)
    }
    supp_b1 = baseline.p1.support()
    supp_b2 = baseline.p2.support()
    for a in supp_b1:
        for b in supp_b2:
            if a not in br_sets[b]:
                raise VerificationError(f"(B1) fails: row {a} is not a best response to column {b}")
    sim_u2 = analysis.aug0.u2[sim]
    compatible = [
        b for b in range(game.n2) if set(supp_b1) <= br_sets[b]
    ]
    best = max(sim_u2[b] for b in compatible)
    for b in supp_b2:
        if sim_u2[b] != best:
            raise VerificationError(f"(B2) fails: column {b} is not an optimal compatible commitment")
    supp_d = deviation.support()
    for a in supp_b1:
        if all(a in br_sets[d] for d in supp_d):
            raise VerificationError(f"(D1) fails: row {a} answers every deviation action")
    if not (0 < p < 1):
        raise VerificationError("SIM probability must be interior")


def _deviation_classes(game, analysis, baseline, deviation):
    """(D2) trichotomy tags plus (D3) ratio maximality for each deviation."""
    sim = analysis.sim
    sim_u2 = analysis.aug0.u2[sim]
    base_value = ZERO
    for a, w in enumerate(baseline.p1.weights):
        if w == 0:
            continue
        for b, q in enumerate(baseline.p2.weights):
            if q != 0:
                base_value += w * q * game.u2[a][b]

    def unsimulated(d: int) -> Rat:
        return sum(
            (w * game.u2[a][d] for a, w in enumerate(baseline.p1.weights) if w != 0), ZERO
        )

    classes: dict[int, str] = {}
    ratios_greater: dict[int, Rat] = {}
    ratios_less: dict[int, Rat] = {}
    for d in range(game.n2):
        u_un, u_sim = unsimulated(d), sim_u2[d]
        if u_un > base_value > u_sim:
            ratios_greater[d] = (u_un - base_value) / (base_value - u_sim)
        elif u_un < base_value < u_sim:
            ratios_less[d] = (u_sim - base_value) / (base_value - u_un)
    for d in deviation.support():
        u_un, u_sim = unsimulated(d), sim_u2[d]
        if d in ratios_greater:
            classes[d] = "greater"
            if ratios_greater[d] != max(ratios_greater.values()):
                raise VerificationError(f"(D3) fails: deviation {d} does not maximize the ratio")
        elif d in ratios_less:
            classes[d] = "less"
            if ratios_less[d] != max(ratios_less.values()):
                raise VerificationError(f"(D3) fails: deviation {d} does not maximize the inverse ratio")
        elif u_un == base_value == u_sim:
            classes[d] = "equal"
        else:
            raise VerificationError(f"(D2) fails: deviation {d} violates the sign trichotomy")
    return classes


# ---------------------------------------------------------------------------
# CSV export


def write_sweep_csvs(game: Game, policy: BestResponsePolicy | None = None,
                     out_dir: str = ".", samples: int = 64,
                     analysis: SweepAnalysis | None = None) -> dict[str, str]:
    """Write breakpoints.csv, segments.csv and samples.csv for one game.

    Rationals are exact "p/q" everywhere except samples.csv, which is the
    float-valued plotting surface.
    """
    if samples < 2:
        raise ValueError("need at least two samples per segment")
    if analysis is None:
        analysis = SweepAnalysis(game, policy)
    bps = analysis.breakpoints()
    fences = bps.fences()
    aug_labels = analysis.aug0.p1_actions
    p2_labels = analysis.aug0.p2_actions
    os.makedirs(out_dir, exist_ok=True)
    paths = {
        "breakpoints": os.path.join(out_dir, "breakpoints.csv"),
        "segments": os.path.join(out_dir, "segments.csv"),
        "samples": os.path.join(out_dir, "samples.csv"),
    }
    with open(paths["breakpoints"], "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["index", "c"])
        for idx, value in enumerate(bps.values):
            writer.writerow([idx, format_rational(value)])
    all_segments: list[tuple[str, TrajectorySegment]] = []
    for l in range(len(fences) - 1):
        for k, seg in enumerate(analysis.segments_on(fences[l], fences[l + 1])):
            all_segments.append((f"{l}.{k}", seg))
    with open(paths["segments"], "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(
            ["segment_id", "c_lo", "c_hi", "support_p1", "support_p2"]
            + [f"p1_{lbl}" for lbl in aug_labels]
            + [f"p2_base_{lbl}" for lbl in p2_labels]
            + [f"p2_slope_{lbl}" for lbl in p2_labels]
        )
        for seg_id, seg in all_segments:
            writer.writerow(
                [
                    seg_id,
                    format_rational(seg.interval[0]),
                    format_rational(seg.interval[1]),
                    "|".join(aug_labels[a] for a in seg.support.s1),
                    "|".join(p2_labels[b] for b in seg.support.s2),
                ]
                + [format_rational(w) for w in seg.p1.weights]
                + [format_rational(v) for v in seg.p2_base]
                + [format_rational(v) for v in seg.p2_slope]
            )
    with open(paths["samples"], "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(
            ["segment_id", "c"]
            + [f"pi1_{lbl}" for lbl in aug_labels]
            + [f"pi2_{lbl}" for lbl in p2_labels]
            + ["u1", "u2"]
        )
        for seg_id, seg in all_segments:
            lo, hi = seg.interval
            for k in range(samples):
                c = lo + (hi - lo) * Rat(k, samples - 1)
                aug = build(game, c, analysis.policy).augmented
                profile = seg.profile_at(c)
                v1, v2 = expected_utility(aug, profile)
                writer.writerow(
                    [seg_id, float(c)]
                    + [float(w) for w in profile.p1.weights]
                    + [float(w) for w in profile.p2.weights]
                    + [float(v1), float(v2)]
                )
    return paths
