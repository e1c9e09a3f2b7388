"""Acceptance suite: one test per release criterion, exact tolerances.

Each test prints a single PASS line (visible with `pytest -s`); the
assertions themselves are all exact rational comparisons plus a wall
clock budget per criterion.
"""

import random
import time

from conftest import random_game, random_generic_game

from simgames.corpus import (
    gen_cafes,
    gen_guess_number,
    gen_joint_project,
    gen_named,
    gen_trust,
)
from simgames.equilibria import all_nash_equilibria
from simgames.fastpath import fast_cheap_ne
from simgames.games import MixedStrategy, Profile, is_nash, maxmin
from simgames.rational import Rat, ZERO
from simgames.simulation import build, default_policy
from simgames.sweep import SweepAnalysis, breakpoints, extreme_regimes
from simgames.voi import voi_of
from simgames.welfare import component_utilities, construct_trust_sim_ne, zero_sum_bounds


def _corpus():
    return [
        ("trust", gen_trust()),
        ("cafes2", gen_cafes([1, 2], [1, 1])[0]),
        ("cafes3", gen_cafes([1, 2, 4], [1, 1, 1])[0]),
        ("guess2", gen_guess_number(2)),
        ("guess3", gen_guess_number(3)),
        ("guess4", gen_guess_number(4)),
        ("joint_project", gen_joint_project(26)),
        ("commitment", gen_named("commitment")),
        ("battle_of_sexes", gen_named("battle_of_sexes")),
        ("chicken", gen_named("chicken")),
        ("stag_hunt", gen_named("stag_hunt")),
    ]


def _profiles(game, components):
    return {
        (v1, v2)
        for comp in components
        for v1 in comp.p1_vertices
        for v2 in comp.p2_vertices
    }


def test_trust_game_regression():
    start = time.time()
    trust = gen_trust()
    aug = build(trust, 5).augmented
    comps = all_nash_equilibria(aug)
    mixed = [c for c in comps if c.support.s1 == (0, 2)]
    assert len(mixed) == 1
    assert mixed[0].p1_vertices == ((Rat(1, 6), ZERO, Rat(5, 6)),)
    assert mixed[0].p2_vertices == ((Rat(29, 30), Rat(1, 30)),)
    elapsed = time.time() - start
    assert elapsed < 1
    print(f"PASS trust-game regression: pi1=(1/6,0,5/6), pi2(D)=1/30 ({elapsed:.2f}s)")


def test_trust_breakpoints_and_segments():
    start = time.time()
    trust = gen_trust()
    analysis = SweepAnalysis(trust)
    bps = analysis.breakpoints()
    assert bps.values == (0, Rat(150, 7))
    assert bps.clip_hi == 26
    segments = analysis.segments_on(ZERO, Rat(150, 7))
    mixed = [s for s in segments if s.support.s1 == (0, 2)]
    assert len(mixed) == 1
    assert mixed[0].p1.weights == (Rat(1, 6), ZERO, Rat(5, 6))
    assert mixed[0].p2_slope == (Rat(-1, 150), Rat(1, 150))
    # strictly beyond the breakpoint, only base-game structure remains
    base = {
        (c.support.s1, c.support.s2, c.p1_vertices, c.p2_vertices)
        for c in all_nash_equilibria(trust)
    }
    for c in (Rat(150, 7) + Rat(1, 100), Rat(24), Rat(26)):
        aug_comps = all_nash_equilibria(build(trust, c).augmented)
        trimmed = set()
        for comp in aug_comps:
            assert all(v1[2] == 0 for v1 in comp.p1_vertices)
            trimmed.add(
                (
                    comp.support.s1,
                    comp.support.s2,
                    tuple(v1[:2] for v1 in comp.p1_vertices),
                    comp.p2_vertices,
                )
            )
        assert trimmed == base
    elapsed = time.time() - start
    assert elapsed < 5
    print(f"PASS trust-game breakpoints: exactly {{0, 150/7}} on [0,26] ({elapsed:.2f}s)")


def test_differential_fast_vs_enumeration():
    start = time.time()
    rng = random.Random(0xD1FF)
    sizes = (
        [(2, 2)] * 70
        + [(2, 3)] * 20
        + [(3, 3)] * 50
        + [(3, 4)] * 15
        + [(4, 4)] * 30
        + [(4, 5)] * 10
        + [(5, 5)] * 15
    )
    assert len(sizes) >= 200
    mismatches = 0
    for n1, n2 in sizes:
        game = random_generic_game(rng, n1, n2)
        analysis = SweepAnalysis(game)
        bps = analysis.breakpoints()
        e1 = bps.values[1] if len(bps.values) > 1 else bps.clip_hi
        c = e1 / 2
        fast = {(p.p1.weights, p.p2.weights) for p in fast_cheap_ne(game, c)}
        enum = _profiles(game, all_nash_equilibria(build(game, c).augmented))
        if fast != enum:
            mismatches += 1
        for w1, w2 in enum:
            s1 = sum(1 for w in w1 if w > 0)
            s2 = sum(1 for w in w2 if w > 0)
            assert (s1, s2) in {(1, 1), (2, 2)}
    assert mismatches == 0
    elapsed = time.time() - start
    assert elapsed < 120
    print(
        f"PASS differential test: {len(sizes)} generic games, 0 mismatches, "
        f"all supports pure or 2x2 ({elapsed:.1f}s)"
    )


def test_voi_persistence():
    start = time.time()
    rng = random.Random(0x501)
    games = 0
    checked_vertices = 0
    while games < 100:
        game = random_game(rng, rng.randint(2, 4), rng.randint(2, 4))
        comps = all_nash_equilibria(game)
        games += 1
        bps = breakpoints(game)
        for v1, v2 in _profiles(game, comps):
            thr = voi_of(game, MixedStrategy(2, v2)).voi
            assert thr in bps.values
            embedded = MixedStrategy(1, v1 + (ZERO,))
            pi2 = MixedStrategy(2, v2)
            for c, expected in ((thr, True), (thr + 1, True)):
                aug = build(game, c).augmented
                assert is_nash(aug, Profile(embedded, pi2)) is expected
            if thr > 0:
                aug = build(game, thr - Rat(1, 1000)).augmented
                assert not is_nash(aug, Profile(embedded, pi2))
            checked_vertices += 1
    elapsed = time.time() - start
    assert elapsed < 120
    print(
        f"PASS VoI persistence: {games} games, {checked_vertices} NE vertices, "
        f"thresholds exact and in breakpoints ({elapsed:.1f}s)"
    )


def test_extreme_regimes_on_corpus():
    start = time.time()
    for name, game in _corpus():
        policy = default_policy(game)
        sim = game.n1
        zero_cost = build(game, ZERO, policy)
        sim_u2 = zero_cost.augmented.u2[sim]
        commit_value = max(sim_u2)
        optimal = {b for b in range(game.n2) if sim_u2[b] == commit_value}
        # subsidized simulation: P1 always simulates, P2 commits optimally
        neg = all_nash_equilibria(build(game, -1, policy).augmented)
        assert neg, name
        for v1, v2 in _profiles(game, neg):
            assert v1[sim] == 1, name
            assert {j for j, w in enumerate(v2) if w > 0} <= optimal, name
        # prohibitive simulation: exactly the base equilibria remain
        _, upper = extreme_regimes(game, policy)
        base = {
            (c.support.s1, c.support.s2, c.p1_vertices, c.p2_vertices)
            for c in all_nash_equilibria(game)
        }
        high = all_nash_equilibria(build(game, upper + 1, policy).augmented)
        trimmed = set()
        for comp in high:
            assert all(v1[sim] == 0 for v1 in comp.p1_vertices), name
            trimmed.add(
                (
                    comp.support.s1,
                    comp.support.s2,
                    tuple(v1[:sim] for v1 in comp.p1_vertices),
                    comp.p2_vertices,
                )
            )
        assert trimmed == base, name
    elapsed = time.time() - start
    assert elapsed < 30
    print(f"PASS extreme regimes: corpus of {len(_corpus())} games ({elapsed:.1f}s)")


def test_zero_sum_bounds_guess_family():
    start = time.time()
    for n in (2, 3, 4, 5):
        game = gen_guess_number(n)
        value = maxmin(game, 1)[0]
        assert value == Rat(2, n) - 1
        _, upper = extreme_regimes(game)
        lo, hi = Rat(-1), upper + 1
        for k in range(10):
            c = lo + (hi - lo) * Rat(k, 9)
            verdict = zero_sum_bounds(game, c)
            assert verdict.value == value
            assert verdict.holds
            assert all(m1 >= 0 and m2 >= 0 for m1, m2 in verdict.margins)
    elapsed = time.time() - start
    assert elapsed < 30
    print(f"PASS zero-sum bounds: guess-the-number N=2..5, 10-point grids ({elapsed:.1f}s)")


def test_cafes_breakpoint_family():
    start = time.time()
    game, preds = gen_cafes([1, 2, 4], [1, 1, 1])
    bps = breakpoints(game)
    multi = [p for p in preds if len(p.subset) >= 2]
    assert len(multi) == 4
    for pred in multi:
        profile = Profile(MixedStrategy(1, pred.p1), MixedStrategy(2, pred.p2))
        assert is_nash(game, profile)
        assert voi_of(game, profile.p2).voi == pred.voi
        assert pred.voi in bps.values
    elapsed = time.time() - start
    assert elapsed < 30
    print(
        "PASS cafes breakpoints: all four (1-1/|I|)H(x_I) values verified as VoI "
        f"and present in the sweep ({elapsed:.2f}s)"
    )


def test_generalized_trust_construction():
    start = time.time()
    trust = gen_trust()
    base_utils = [
        u for comp in all_nash_equilibria(trust) for u in component_utilities(trust, comp)
    ]
    for c in (Rat(1), Rat(1, 2), Rat(1, 4), Rat(1, 8)):
        cons = construct_trust_sim_ne(trust, c)
        assert len(cons) == 1
        con = cons[0]
        assert con.alpha == Rat(1, 150)
        assert con.sim_prob == Rat(5, 6)
        aug = build(trust, c).augmented
        assert is_nash(aug, con.profile)
        u1, u2 = con.utilities
        assert all(u1 > b1 and u2 > b2 for b1, b2 in base_utils)
    elapsed = time.time() - start
    assert elapsed < 10
    print(
        "PASS generalized-trust construction: verified NE at c=1,1/2,1/4,1/8 with "
        f"alpha=1/150, p=5/6, strict Pareto improvement ({elapsed:.2f}s)"
    )


def test_piecewise_constancy_and_affinity():
    start = time.time()
    segment_count = 0
    for name, game in _corpus():
        analysis = SweepAnalysis(game)
        fences = analysis.breakpoints().fences()
        for lo, hi in zip(fences, fences[1:]):
            for seg in analysis.segments_on(lo, hi, verify=False):
                samples = [lo + (hi - lo) * Rat(k, 4) for k in (1, 2, 3)]
                p1_seen = set()
                p2_points = []
                for c in samples:
                    aug = build(game, c, analysis.policy).augmented
                    profile = seg.profile_at(c)
                    assert is_nash(aug, profile), (name, seg.support, c)
                    p1_seen.add(profile.p1.weights)
                    p2_points.append(profile.p2.weights)
                assert len(p1_seen) == 1, name
                for j in range(len(p2_points[0])):
                    det = (samples[1] - samples[0]) * (p2_points[2][j] - p2_points[0][j]) - (
                        samples[2] - samples[0]
                    ) * (p2_points[1][j] - p2_points[0][j])
                    assert det == 0, name
                segment_count += 1
    elapsed = time.time() - start
    print(
        f"PASS piecewise constancy/affinity: {segment_count} segments across the corpus, "
        f"P1 constant and P2 exactly affine ({elapsed:.1f}s)"
    )
