"""Shared fixtures and the independent Fraction-based oracle.

The oracle deliberately avoids the package's linear algebra: it uses
fractions.Fraction, Cramer-style solving and direct deviation checks, so
agreement with the solver is a genuine two-route test.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

import pytest

from simgames.corpus import gen_trust
from simgames.games import Game, make_game


@pytest.fixture
def trust() -> Game:
    return gen_trust()


def random_game(rng: random.Random, n1: int, n2: int, lo: int = -4, hi: int = 4) -> Game:
    """Small random game; the tight payoff range makes ties frequent."""
    return make_game(
        [f"a{i}" for i in range(n1)],
        [f"b{j}" for j in range(n2)],
        [[rng.randint(lo, hi) for _ in range(n2)] for _ in range(n1)],
        [[rng.randint(lo, hi) for _ in range(n2)] for _ in range(n1)],
    )


def random_generic_game(rng: random.Random, n1: int, n2: int) -> Game:
    """Random game with all-distinct integer payoffs per player, verified
    generic (distinct ratios included)."""
    from simgames.games import is_generic

    span = range(1, 8 * n1 * n2 + 60)
    while True:
        v1 = rng.sample(span, n1 * n2)
        v2 = rng.sample(span, n1 * n2)
        game = make_game(
            [f"a{i}" for i in range(n1)],
            [f"b{j}" for j in range(n2)],
            [v1[i * n2 : (i + 1) * n2] for i in range(n1)],
            [v2[i * n2 : (i + 1) * n2] for i in range(n1)],
        )
        if is_generic(game)[0]:
            return game


# ---------------------------------------------------------------------------
# Independent oracle machinery (Fraction-based, no simgames.linsys)


def frac_matrices(game: Game) -> tuple[list[list[Fraction]], list[list[Fraction]]]:
    u1 = [[Fraction(int(v.numerator), int(v.denominator)) for v in row] for row in game.u1]
    u2 = [[Fraction(int(v.numerator), int(v.denominator)) for v in row] for row in game.u2]
    return u1, u2


def frac_is_nash(game: Game, w1, w2) -> bool:
    """Deviation check reimplemented with Fractions."""
    u1, u2 = frac_matrices(game)
    w1 = [Fraction(x) for x in w1]
    w2 = [Fraction(x) for x in w2]
    v1 = sum(w1[i] * w2[j] * u1[i][j] for i in range(len(w1)) for j in range(len(w2)))
    v2 = sum(w1[i] * w2[j] * u2[i][j] for i in range(len(w1)) for j in range(len(w2)))
    for i in range(len(w1)):
        if sum(w2[j] * u1[i][j] for j in range(len(w2))) > v1:
            return False
    for j in range(len(w2)):
        if sum(w1[i] * u2[i][j] for i in range(len(w1))) > v2:
            return False
    return True


def solve_exact(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction] | None:
    """Gauss-Jordan over Fractions; None when inconsistent or underdetermined."""
    m, n = len(rows), len(rows[0]) if rows else 0
    aug = [row[:] + [rhs[i]] for i, row in enumerate(rows)]
    pivots = []
    r = 0
    for col in range(n):
        pv = next((i for i in range(r, m) if aug[i][col] != 0), None)
        if pv is None:
            continue
        aug[r], aug[pv] = aug[pv], aug[r]
        aug[r] = [v / aug[r][col] for v in aug[r]]
        for i in range(m):
            if i != r and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        pivots.append(col)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if aug[i][n] != 0:
            return None
    if len(pivots) < n:
        return None
    out = [Fraction(0)] * n
    for k, col in enumerate(pivots):
        out[col] = aug[k][n]
    return out


def in_convex_hull(point, vertices) -> bool:
    """Exact convex-combination membership via Caratheodory subsets."""
    point = [Fraction(x) for x in point]
    verts = [[Fraction(x) for x in v] for v in vertices]
    dim = len(point)
    for size in range(1, min(len(verts), dim + 1) + 1):
        for subset in itertools.combinations(verts, size):
            rows = [[Fraction(1)] * size] + [
                [v[coord] for v in subset] for coord in range(dim)
            ]
            lam = solve_exact(rows, [Fraction(1)] + point)
            if lam is not None and all(l >= 0 for l in lam):
                return True
    return False


def oracle_equilibria(game: Game, grid_steps: int = 4):
    """Grid search plus square-support Cramer refinement, all in Fractions.

    Returns every (w1, w2) found to be an exact NE.  Complete only in the
    sense needed by the tests: any equilibrium it finds must be covered
    by the solver's reported components.
    """
    n1, n2 = game.n1, game.n2
    u1, u2 = frac_matrices(game)
    found = set()

    def grid(n):
        cuts = [Fraction(k, grid_steps) for k in range(grid_steps + 1)]
        for combo in itertools.product(cuts, repeat=n - 1):
            rest = 1 - sum(combo)
            if rest >= 0:
                yield tuple(combo) + (rest,)

    for w1 in grid(n1):
        for w2 in grid(n2):
            if frac_is_nash(game, w1, w2):
                found.add((w1, w2))

    # Square mixed supports solved by exact elimination: the classic
    # textbook refinement of the grid.
    for k in range(1, min(n1, n2) + 1):
        for s1 in itertools.combinations(range(n1), k):
            for s2 in itertools.combinations(range(n2), k):
                # P2's weights make P1 indifferent on s1; normalization row.
                rows = [[u1[a][b] for b in s2] for a in s1]
                w2sub = _indifference(rows)
                rows_t = [[u2[a][b] for a in s1] for b in s2]
                w1sub = _indifference(rows_t)
                if w2sub is None or w1sub is None:
                    continue
                if any(v < 0 for v in w1sub + w2sub):
                    continue
                w1 = [Fraction(0)] * n1
                w2 = [Fraction(0)] * n2
                for idx, a in enumerate(s1):
                    w1[a] = w1sub[idx]
                for idx, b in enumerate(s2):
                    w2[b] = w2sub[idx]
                if frac_is_nash(game, w1, w2):
                    found.add((tuple(w1), tuple(w2)))
    return sorted(found)


def _indifference(rows: list[list[Fraction]]) -> list[Fraction] | None:
    """Solve for weights equalizing all row values, summing to one."""
    k = len(rows)
    if k == 1:
        return [Fraction(1)]
    system = [[rows[0][j] - rows[i][j] for j in range(k)] for i in range(1, k)]
    system.append([Fraction(1)] * k)
    rhs = [Fraction(0)] * (k - 1) + [Fraction(1)]
    return solve_exact(system, rhs)
