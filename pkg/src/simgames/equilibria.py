"""Complete Nash-equilibrium enumeration via support pairs.

For each support pair (S1, S2) the equilibria form a product of two
polytopes: P1's strategies that keep P2 indifferent on S2, and P2's
strategies that keep P1 indifferent on S1 (with slack inequalities for
out-of-support actions).  Components are the vertex sets of those
polytopes; the union over all support pairs is the full NE set.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .games import ActionCapExceeded, Game, MixedStrategy, Profile, action_cap, is_nash
from .linsys import LinearSystem, vertices_at
from .rational import ONE, ZERO, Rat

Vec = tuple[Rat, ...]


@dataclass(frozen=True)
class SupportPair:
    s1: tuple[int, ...]
    s2: tuple[int, ...]

    def __post_init__(self):
        if not self.s1 or not self.s2:
            raise ValueError("supports must be nonempty")


@dataclass(frozen=True)
class NEComponent:
    """A maximal product set of equilibria sharing one support pair.

    Every cross pairing of a P1 vertex with a P2 vertex is a Nash
    equilibrium; the full component is the convex product of the two
    vertex sets.
    """

    support: SupportPair
    p1_vertices: tuple[Vec, ...]
    p2_vertices: tuple[Vec, ...]

    def profiles(self) -> list[tuple[Vec, Vec]]:
        return [(v1, v2) for v1 in self.p1_vertices for v2 in self.p2_vertices]


def indifference_system(
    game: Game,
    support: SupportPair,
    player: int,
    cost_adjust: tuple[Rat, ...] | None = None,
) -> LinearSystem:
    """The linear system that pins the *opponent's* strategy.

    For ``player`` = 1 the variables are P2's weights on s2, one slack per
    P1 action outside s1, and the indifference value gamma; rows are the
    normalization plus one row per P1 action (equality inside the
    support, slack equality outside).  ``cost_adjust`` moves a per-action
    parametric payoff adjustment -c*alpha_a to the right-hand side, which
    is how the SIM action's cost enters parametric sweeps.
    """
    if player == 1:
        own_n, opp_n = game.n1, game.n2
        own_support, opp_support = support.s1, support.s2
        util = lambda a, b: game.u1[a][b]
        own_labels, opp_labels = game.p1_actions, game.p2_actions
    else:
        own_n, opp_n = game.n2, game.n1
        own_support, opp_support = support.s2, support.s1
        util = lambda b, a: game.u2[a][b]
        own_labels, opp_labels = game.p2_actions, game.p1_actions
    if cost_adjust is not None and len(cost_adjust) != own_n:
        raise ValueError("cost adjustment vector must cover the player's actions")
    in_support = set(own_support)
    out_actions = [a for a in range(own_n) if a not in in_support]
    slack_pos = {a: len(opp_support) + k for k, a in enumerate(out_actions)}
    ncols = len(opp_support) + len(out_actions) + 1
    gamma_col = ncols - 1
    names = tuple(
        [f"p:{opp_labels[b]}" for b in opp_support]
        + [f"w:{own_labels[a]}" for a in out_actions]
        + ["gamma"]
    )
    rows = [tuple(ONE if j < len(opp_support) else ZERO for j in range(ncols))]
    base = [ONE]
    slope = [ZERO]
    for a in range(own_n):
        row = [ZERO] * ncols
        for k, b in enumerate(opp_support):
            row[k] = util(a, b)
        if a in slack_pos:
            row[slack_pos[a]] = ONE
        row[gamma_col] = -ONE
        rows.append(tuple(row))
        base.append(ZERO)
        slope.append(cost_adjust[a] if cost_adjust is not None else ZERO)
    nonneg = tuple([True] * (ncols - 1) + [False])
    return LinearSystem(tuple(rows), tuple(base), tuple(slope), nonneg, names)


def expand_vertex(vertex: Vec, support: tuple[int, ...], n: int) -> Vec:
    """Lift a solution's support-ordered weights to the full action space."""
    full = [ZERO] * n
    for k, a in enumerate(support):
        full[a] = vertex[k]
    return tuple(full)


def _strictly_dominated_on(rows: list[list[Rat]], members: tuple[int, ...], cols: tuple[int, ...]) -> bool:
    """True when some member row is strictly dominated on cols by any row."""
    for a in members:
        for other, row in enumerate(rows):
            if other == a:
                continue
            if all(row[b] > rows[a][b] for b in cols):
                return True
    return False


def prune_support_pair(game: Game, support: SupportPair) -> bool:
    """Cheap certificate that a support pair admits no equilibrium.

    A supported action that is strictly dominated on the opponent's
    support (by any action, supported or not) can never be indifferent-
    optimal, so the pair's polytope is empty.
    """
    u1_rows = [list(r) for r in game.u1]
    if _strictly_dominated_on(u1_rows, support.s1, support.s2):
        return True
    u2_cols = [[game.u2[i][j] for i in range(game.n1)] for j in range(game.n2)]
    return _strictly_dominated_on(u2_cols, support.s2, support.s1)


def polytope_vertices(game: Game, support: SupportPair, player: int) -> list[Vec]:
    """Vertices of the strategy polytope pinned by a player's indifference.

    player=1 yields P2's strategies (full-length weight vectors); player=2
    yields P1's.
    """
    system = indifference_system(game, support, player)
    opp_support = support.s2 if player == 1 else support.s1
    opp_n = game.n2 if player == 1 else game.n1
    out = []
    for vertex in vertices_at(system, ZERO):
        out.append(expand_vertex(vertex, opp_support, opp_n))
    return sorted(set(out))


def component_for_support(game: Game, support: SupportPair) -> NEComponent | None:
    """Exact NE component for one support pair, or None when empty.

    Every cross pairing of vertices is re-verified with the full
    deviation check; the systems already guarantee this, so a failure
    would indicate a construction bug.
    """
    p1_vertices = polytope_vertices(game, support, player=2)
    if not p1_vertices:
        return None
    p2_vertices = polytope_vertices(game, support, player=1)
    if not p2_vertices:
        return None
    for v1 in p1_vertices:
        for v2 in p2_vertices:
            profile = Profile(MixedStrategy(1, v1), MixedStrategy(2, v2))
            if not is_nash(game, profile):
                return None
    return NEComponent(support, tuple(p1_vertices), tuple(p2_vertices))


def support_pairs(n1: int, n2: int):
    """All support pairs ordered by total size, then lexicographically."""
    subsets1 = [c for size in range(1, n1 + 1) for c in itertools.combinations(range(n1), size)]
    subsets2 = [c for size in range(1, n2 + 1) for c in itertools.combinations(range(n2), size)]
    pairs = [
        SupportPair(s1, s2)
        for s1 in subsets1
        for s2 in subsets2
    ]
    pairs.sort(key=lambda p: (len(p.s1) + len(p.s2), p.s1, p.s2))
    return pairs


def all_nash_equilibria(game: Game, cap: int | None = None) -> list[NEComponent]:
    """Every NE component of the game, by exhaustive support enumeration.

    Components whose vertex sets coincide are reported once (the union
    over support pairs may overlap); nested components are kept, since
    they describe genuinely different support structure.
    """
    cap = action_cap() if cap is None else cap
    if game.n1 > cap or game.n2 > cap:
        raise ActionCapExceeded(
            f"game is {game.n1}x{game.n2}, above the per-player action cap {cap}"
        )
    components = []
    seen: set[tuple] = set()
    for support in support_pairs(game.n1, game.n2):
        if prune_support_pair(game, support):
            continue
        comp = component_for_support(game, support)
        if comp is None:
            continue
        key = (comp.p1_vertices, comp.p2_vertices)
        if key in seen:
            continue
        seen.add(key)
        components.append(comp)
    return components
