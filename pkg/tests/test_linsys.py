import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from simgames.linsys import (
    Interval,
    LinearSystem,
    Reduced,
    Unsolvable,
    det_fraction_free,
    enumerate_bases,
    parametric_basic_solution,
    parametric_solutions,
    row_reduce,
    vertices_at,
)
from simgames.rational import ONE, ZERO, Rat


def system(rows, base, slope, nonneg):
    return LinearSystem(
        rows=tuple(tuple(Rat(v) for v in r) for r in rows),
        rhs_base=tuple(Rat(v) for v in base),
        rhs_slope=tuple(Rat(v) for v in slope),
        nonneg=tuple(nonneg),
    )


def test_row_reduce_drops_duplicate_row():
    s = system([[1, 0], [1, 0]], [1, 1], [0, 0], [True, True])
    out = row_reduce(s)
    assert isinstance(out, Reduced) and out.only_at is None
    assert out.system.nrows == 1


def test_row_reduce_drops_scalar_multiple():
    s = system([[1, 0], [2, 0]], [1, 2], [0, 0], [True, True])
    out = row_reduce(s)
    assert isinstance(out, Reduced) and out.system.nrows == 1


def test_row_reduce_detects_contradiction():
    s = system([[1, 0], [1, 0]], [1, 2], [0, 0], [True, True])
    assert isinstance(row_reduce(s), Unsolvable)


def test_row_reduce_pins_parameter():
    # second row equals the first but the rhs differs by 5 - c
    s = system([[1, 0], [1, 0]], [1, 6], [0, -1], [True, True])
    out = row_reduce(s)
    assert isinstance(out, Reduced) and out.only_at == 5


def test_enumerate_bases_skips_zero_column():
    s = system([[1, 0, 0], [0, 1, 0]], [1, 1], [0, 0], [True, True, True])
    assert enumerate_bases(s) == [(0, 1)]


def test_enumerate_bases_full_rank_2x3():
    s = system([[1, 1, 0], [0, 1, 1]], [1, 1], [0, 0], [True, True, True])
    bases = enumerate_bases(s)
    assert len(bases) == 3  # every pair of these columns is independent


def test_enumerate_bases_1x1():
    s = system([[5]], [1], [0], [True])
    assert enumerate_bases(s) == [(0,)]


def test_enumerate_bases_requires_free_columns():
    # x + v = 1 with v free: the only basis must contain v's column
    s = system([[1, 1], [1, 0]], [1, 1], [0, 0], [True, False])
    assert all(1 in b for b in enumerate_bases(s))


def test_parametric_single_constraint():
    # x = 1 - c, x >= 0
    s = system([[1]], [1], [-1], [True])
    sol = parametric_basic_solution(s, (0,))
    assert sol.feasible_interval == Interval.closed(None, Rat(1))
    assert sol.value_at(Rat(1)) == (0,)


def test_parametric_intersection():
    # x = c, y = 1 - 2c, both >= 0 -> c in [0, 1/2]
    s = system([[1, 0], [0, 1]], [0, 1], [1, -2], [True, True])
    sol = parametric_basic_solution(s, (0, 1))
    assert sol.feasible_interval == Interval.closed(Rat(0), Rat(1, 2))


def test_parametric_trust_support_system():
    # indifference system for the trust game support ({T,SIM},{C,D});
    # the solution must carry pi2(D) = c/150
    from simgames.corpus import gen_trust
    from simgames.equilibria import SupportPair, indifference_system
    from simgames.simulation import build

    aug0 = build(gen_trust(), 0).augmented
    adjust = (ZERO, ZERO, ONE)
    sys_ = indifference_system(aug0, SupportPair((0, 2), (0, 1)), player=1, cost_adjust=adjust)
    reduced = row_reduce(sys_)
    assert isinstance(reduced, Reduced) and reduced.only_at is None
    sols = parametric_solutions(reduced.system)
    assert len(sols) == 1
    sol = sols[0]
    assert sol.value_slope[1] == Rat(1, 150)  # pi2(D) slope
    assert sol.feasible_interval == Interval.closed(Rat(0), Rat(150, 7))


def test_vertices_simplex():
    s = system([[1, 1]], [1], [0], [True, True])
    assert vertices_at(s, ZERO) == [(0, 1), (1, 0)]


def test_vertices_infeasible():
    s = system([[1, 1], [1, 1]], [1, 2], [0, 0], [True, True])
    assert vertices_at(s, ZERO) == []


def test_vertices_trust_at_cost_five():
    from simgames.corpus import gen_trust
    from simgames.equilibria import SupportPair, indifference_system
    from simgames.simulation import build

    aug = build(gen_trust(), 5).augmented
    sys_ = indifference_system(aug, SupportPair((0, 2), (0, 1)), player=1)
    verts = vertices_at(sys_, ZERO)
    assert len(verts) == 1
    assert verts[0][:2] == (Rat(29, 30), Rat(1, 30))


def test_det_fraction_free_matches_cofactor():
    rng = random.Random(3)
    for _ in range(25):
        n = rng.randint(1, 4)
        m = [[Rat(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(n)] for _ in range(n)]
        assert det_fraction_free([row[:] for row in m]) == _cofactor_det(m)


def _cofactor_det(m):
    n = len(m)
    if n == 1:
        return m[0][0]
    total = Rat(0)
    for j in range(n):
        minor = [row[:j] + row[j + 1 :] for row in m[1:]]
        sign = Rat(1) if j % 2 == 0 else Rat(-1)
        total += sign * m[0][j] * _cofactor_det(minor)
    return total


@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_parametric_solutions_satisfy_system(data):
    nrows = data.draw(st.integers(1, 2), label="rows")
    ncols = data.draw(st.integers(nrows, 4), label="cols")
    rows = [
        [Rat(data.draw(st.integers(-3, 3))) for _ in range(ncols)] for _ in range(nrows)
    ]
    base = [Rat(data.draw(st.integers(-3, 3))) for _ in range(nrows)]
    slope = [Rat(data.draw(st.integers(-2, 2))) for _ in range(nrows)]
    s = LinearSystem(
        tuple(tuple(r) for r in rows), tuple(base), tuple(slope), tuple([True] * ncols)
    )
    reduced = row_reduce(s)
    if isinstance(reduced, Unsolvable) or reduced.only_at is not None:
        return
    for sol in parametric_solutions(reduced.system):
        iv = sol.feasible_interval
        if iv.is_empty:
            continue
        probes = []
        if iv.lo is not None:
            probes += [iv.lo, iv.lo + 1 if (iv.hi is None or iv.lo + 1 <= iv.hi) else iv.lo]
        if iv.hi is not None:
            probes.append(iv.hi)
        if iv.lo is None and iv.hi is None:
            probes = [Rat(-5), Rat(0), Rat(7)]
        for c in probes:
            x = sol.value_at(c)
            for row, b, sl in zip(s.rows, s.rhs_base, s.rhs_slope):
                assert sum((r * v for r, v in zip(row, x)), Rat(0)) == b + c * sl
            assert all(v >= 0 for v in x)
        # strictly outside a finite endpoint, some constraint must fail
        for c_out in ([iv.lo - 1] if iv.lo is not None else []) + (
            [iv.hi + 1] if iv.hi is not None else []
        ):
            assert any(v < 0 for v in sol.value_at(c_out))


def test_vertices_match_parametric_evaluations():
    rng = random.Random(11)
    for _ in range(30):
        nrows, ncols = 2, 4
        s = LinearSystem(
            tuple(tuple(Rat(rng.randint(-3, 3)) for _ in range(ncols)) for _ in range(nrows)),
            tuple(Rat(rng.randint(-2, 3)) for _ in range(nrows)),
            tuple(Rat(rng.randint(-2, 2)) for _ in range(nrows)),
            tuple([True] * ncols),
        )
        reduced = row_reduce(s)
        if isinstance(reduced, Unsolvable) or reduced.only_at is not None:
            continue
        c = Rat(rng.randint(-3, 3), rng.randint(1, 4))
        expected = {
            sol.value_at(c)
            for sol in parametric_solutions(reduced.system)
            if sol.feasible_interval.contains(c)
        }
        assert set(vertices_at(s, c)) == expected


def test_row_reduce_preserves_solutions():
    rng = random.Random(5)
    for _ in range(20):
        ncols = 4
        row = tuple(Rat(rng.randint(-3, 3)) for _ in range(ncols))
        mult = Rat(rng.randint(1, 3))
        s = LinearSystem(
            (row, tuple(mult * v for v in row), (ONE, ONE, ONE, ONE)),
            (Rat(2), Rat(2) * mult, Rat(1)),
            (ZERO, ZERO, ZERO),
            tuple([True] * ncols),
        )
        reduced = row_reduce(s)
        if isinstance(reduced, Unsolvable):
            continue
        for vertex in vertices_at(reduced.system, ZERO):
            for r, b in zip(s.rows, s.rhs_base):
                assert sum((x * v for x, v in zip(r, vertex)), ZERO) == b
