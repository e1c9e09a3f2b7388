import random

import pytest

from conftest import random_game

from simgames.corpus import gen_cafes, gen_trust
from simgames.equilibria import all_nash_equilibria
from simgames.games import (
    MixedStrategy,
    Profile,
    VerificationError,
    is_nash,
    make_game,
)
from simgames.rational import Rat, ZERO
from simgames.simulation import build
from simgames.sweep import (
    SweepAnalysis,
    breakpoints,
    decompose_cheap_ne,
    extreme_regimes,
    limit_equilibria,
    trajectories,
    write_sweep_csvs,
)


def test_trust_breakpoints(trust):
    bps = breakpoints(trust)
    assert bps.values == (0, Rat(150, 7))
    assert bps.upper_threshold == 25 and bps.clip_hi == 26


def test_breakpoints_start_at_zero_and_increase(trust):
    bps = breakpoints(trust)
    assert bps.values[0] == 0
    assert all(a < b for a, b in zip(bps.values, bps.values[1:]))


def test_dominant_row_game_has_only_zero():
    # top row strictly dominates and is the best response to every column,
    # so simulation never matters and the sweep is structureless
    game = make_game(["good", "bad"], ["x", "y"], [[9, 8], [1, 0]], [[5, 4], [3, 2]])
    assert breakpoints(game).values == (0,)


def test_cafes_breakpoints_contain_voi_family():
    game, preds = gen_cafes([1, 2, 4], [1, 1, 1])
    bps = breakpoints(game)
    for pred in preds:
        if len(pred.subset) >= 2:
            assert pred.voi in bps.values


def test_trust_trajectory_segments(trust):
    segs = trajectories(trust, interval_index=0)
    mixed = [s for s in segs if s.support.s1 == (0, 2)]
    assert len(mixed) == 1
    seg = mixed[0]
    assert seg.p1.weights == (Rat(1, 6), Rat(0), Rat(5, 6))
    assert seg.p2_base == (1, 0)
    assert seg.p2_slope == (Rat(-1, 150), Rat(1, 150))
    # the persistent walk-out equilibrium is a constant segment
    constant = [s for s in segs if s.support.s1 == (1,) and s.support.s2 == (1,)]
    assert constant[0].p2_slope == (0, 0)


def test_trajectories_beyond_threshold_match_base(trust):
    segs = trajectories(trust, interval_index=1)
    base_comps = {
        (c.support.s1, c.support.s2, c.p1_vertices, c.p2_vertices)
        for c in all_nash_equilibria(trust)
    }
    seg_comps = {
        (s.support.s1, s.support.s2, (s.p1.weights[:2],), (s.p2_base,))
        for s in segs
    }
    for s in segs:
        assert s.p1.weights[2] == 0  # SIM never used
        assert s.p2_slope == (0, 0)
    assert {(a, b) for a, b, _, _ in seg_comps} == {(a, b) for a, b, _, _ in base_comps}


def test_trajectories_bad_index(trust):
    with pytest.raises(ValueError):
        trajectories(trust, interval_index=9)


def test_limit_equilibria_trust(trust):
    limits = {(le.profile.p1.weights, le.profile.p2.weights) for le in limit_equilibria(trust)}
    assert ((Rat(1, 6), ZERO, Rat(5, 6)), (Rat(1), ZERO)) in limits
    assert ((ZERO, Rat(1), ZERO), (ZERO, Rat(1))) in limits
    # the always-simulate profile is a NE at exactly c = 0 but not a limit
    assert ((ZERO, ZERO, Rat(1)), (Rat(1), ZERO)) not in limits
    for le in limits:
        pass
    for le in limit_equilibria(trust):
        assert le.witness_segment.interval[0] == 0
        assert le.witness_segment.interval[1] > 0


def test_limit_equilibria_structureless_game():
    game = make_game(["good", "bad"], ["x", "y"], [[9, 8], [1, 0]], [[5, 4], [3, 2]])
    limits = limit_equilibria(game)
    base = all_nash_equilibria(game)
    base_profiles = {
        (v1 + (ZERO,), v2) for c in base for v1 in c.p1_vertices for v2 in c.p2_vertices
    }
    assert {(le.profile.p1.weights, le.profile.p2.weights) for le in limits} == base_profiles


def test_extreme_regimes_trust(trust):
    regime, upper = extreme_regimes(trust)
    assert upper == 25
    assert len(regime.outcomes) == 1
    outcome = regime.outcomes[0]
    assert outcome.label == "C" and outcome.response.weights == (1, 0)
    assert outcome.base_utilities == (25, 25)


def test_extreme_regimes_zero_sum_minimax():
    from simgames.corpus import gen_guess_number

    game = gen_guess_number(3)
    regime, _ = extreme_regimes(game)
    # P2's optimal commitment in a zero-sum game minimizes P1's BR value
    assert regime.commitment_value == -1
    assert {o.action for o in regime.outcomes} == {0, 1, 2}


def test_extreme_regimes_constant_game():
    game = make_game(["a"], ["x", "y"], [[2, 2]], [[0, 1]])
    _, upper = extreme_regimes(game)
    assert upper == 0


def test_decompose_trust_mixed_ne(trust):
    ne = Profile(
        MixedStrategy(1, (Rat(1, 6), ZERO, Rat(5, 6))),
        MixedStrategy(2, (Rat(29, 30), Rat(1, 30))),
    )
    dec = decompose_cheap_ne(trust, 5, ne)
    assert dec.baseline.p1.weights == (1, 0)
    assert dec.baseline.p2.weights == (1, 0)
    assert dec.deviation.weights == (0, 1)
    assert dec.alpha == Rat(1, 150)
    assert dec.sim_prob == Rat(5, 6)
    assert dec.deviation_class == ((1, "greater"),)


def test_decompose_rejects_zero_sim_weight(trust):
    ne = Profile(MixedStrategy(1, (ZERO, Rat(1), ZERO)), MixedStrategy(2, (ZERO, Rat(1))))
    with pytest.raises(ValueError):
        decompose_cheap_ne(trust, 5, ne)


def test_decompose_rejects_cost_outside_interval(trust):
    ne = Profile(
        MixedStrategy(1, (Rat(1, 6), ZERO, Rat(5, 6))),
        MixedStrategy(2, (Rat(29, 30), Rat(1, 30))),
    )
    with pytest.raises(ValueError):
        decompose_cheap_ne(trust, 23, ne)


def test_segment_p1_constant_p2_affine_verified(trust):
    # exact NE at three sampled costs per segment; P2 moves collinearly
    analysis = SweepAnalysis(trust)
    fences = analysis.breakpoints().fences()
    for lo, hi in zip(fences, fences[1:]):
        for seg in analysis.segments_on(lo, hi):
            samples = [lo + (hi - lo) * Rat(k, 4) for k in (1, 2, 3)]
            p2s = []
            for c in samples:
                aug = build(trust, c).augmented
                profile = seg.profile_at(c)
                assert is_nash(aug, profile)
                p2s.append(profile.p2.weights)
            for j in range(len(p2s[0])):
                det = (
                    (samples[1] - samples[0]) * (p2s[2][j] - p2s[0][j])
                    - (samples[2] - samples[0]) * (p2s[1][j] - p2s[0][j])
                )
                assert det == 0


def test_breakpoint_completeness_random_games():
    # between reported breakpoints, fixed-cost enumeration agrees with the
    # evaluated segments; this is the sweep's primary oracle
    rng = random.Random(31)
    for _ in range(8):
        game = random_game(rng, rng.randint(2, 3), rng.randint(2, 3))
        analysis = SweepAnalysis(game)
        fences = analysis.breakpoints().fences()
        for lo, hi in zip(fences, fences[1:]):
            for k in (1, 3):
                c = lo + (hi - lo) * Rat(k, 4)
                aug = build(game, c).augmented
                enum_profiles = {
                    (v1, v2)
                    for comp in all_nash_equilibria(aug)
                    for v1 in comp.p1_vertices
                    for v2 in comp.p2_vertices
                }
                seg_profiles = set()
                for seg in analysis.segments_on(lo, hi, verify=False):
                    profile = seg.profile_at(c)
                    seg_profiles.add((profile.p1.weights, profile.p2.weights))
                assert seg_profiles == enum_profiles, (game, c)


def test_write_sweep_csvs(tmp_path, trust):
    paths = write_sweep_csvs(trust, out_dir=str(tmp_path), samples=4)
    bp_lines = (tmp_path / "breakpoints.csv").read_text().strip().splitlines()
    assert bp_lines[0] == "index,c"
    assert bp_lines[1:] == ["0,0/1", "1,150/7"]
    seg_text = (tmp_path / "segments.csv").read_text()
    assert "p2_slope_D" in seg_text.splitlines()[0]
    assert "1/150" in seg_text
    sample_lines = (tmp_path / "samples.csv").read_text().strip().splitlines()
    assert sample_lines[0].startswith("segment_id,c,pi1_T")
    # four samples per segment, float-valued
    first = sample_lines[1].split(",")
    float(first[1]), float(first[2])
