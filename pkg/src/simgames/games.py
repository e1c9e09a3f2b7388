"""Two-player normal-form games with exact rational payoffs.

Everything here is an immutable value; operations are pure functions and
all comparisons are exact, so best-response sets and genericity checks
never depend on rounding.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass

from .linsys import LinearSystem, vertices_at
from .rational import ONE, ZERO, Rat, as_rat, format_rational

DEFAULT_ACTION_CAP = 12


class GameFormatError(ValueError):
    """Malformed game input (bad JSON, ragged matrices, bad rationals)."""


class ActionCapExceeded(RuntimeError):
    """A solver was asked for more actions than the configured cap."""


class VerificationError(RuntimeError):
    """An assembled profile failed its exact equilibrium verification."""


def action_cap() -> int:
    raw = os.environ.get("SIMGAME_ACTION_CAP")
    if raw is None:
        return DEFAULT_ACTION_CAP
    try:
        cap = int(raw)
    except ValueError as exc:
        raise GameFormatError(f"SIMGAME_ACTION_CAP must be an integer, got {raw!r}") from exc
    if cap < 1:
        raise GameFormatError("SIMGAME_ACTION_CAP must be positive")
    return cap


@dataclass(frozen=True)
class Game:
    """A bimatrix game: labels plus one dense payoff matrix per player."""

    p1_actions: tuple[str, ...]
    p2_actions: tuple[str, ...]
    u1: tuple[tuple[Rat, ...], ...]
    u2: tuple[tuple[Rat, ...], ...]

    def __post_init__(self):
        n1, n2 = len(self.p1_actions), len(self.p2_actions)
        if n1 < 1 or n2 < 1:
            raise GameFormatError("each player needs at least one action")
        if len(set(self.p1_actions)) != n1 or len(set(self.p2_actions)) != n2:
            raise GameFormatError("action labels must be unique per player")
        for mat in (self.u1, self.u2):
            if len(mat) != n1 or any(len(row) != n2 for row in mat):
                raise GameFormatError("payoff matrices must be n1 x n2 with equal shapes")

    @property
    def n1(self) -> int:
        return len(self.p1_actions)

    @property
    def n2(self) -> int:
        return len(self.p2_actions)

    def payoffs(self, i: int, j: int) -> tuple[Rat, Rat]:
        return self.u1[i][j], self.u2[i][j]

    def is_zero_sum(self) -> bool:
        return all(a + b == 0 for ra, rb in zip(self.u1, self.u2) for a, b in zip(ra, rb))


def make_game(p1_actions, p2_actions, u1, u2) -> Game:
    """Build a Game from nested lists of ints / "p/q" strings / rationals."""
    try:
        m1 = tuple(tuple(as_rat(v) for v in row) for row in u1)
        m2 = tuple(tuple(as_rat(v) for v in row) for row in u2)
    except ValueError as exc:
        raise GameFormatError(str(exc)) from exc
    return Game(tuple(p1_actions), tuple(p2_actions), m1, m2)


@dataclass(frozen=True)
class MixedStrategy:
    """A probability vector over one player's actions, exactly normalized."""

    player: int
    weights: tuple[Rat, ...]

    def __post_init__(self):
        if self.player not in (1, 2):
            raise ValueError("player must be 1 or 2")
        if any(w < 0 for w in self.weights):
            raise ValueError("strategy weights must be nonnegative")
        if sum(self.weights, ZERO) != 1:
            raise ValueError("strategy weights must sum to exactly 1")

    def support(self) -> tuple[int, ...]:
        return tuple(i for i, w in enumerate(self.weights) if w > 0)

    def __getitem__(self, i: int) -> Rat:
        return self.weights[i]


def pure_strategy(player: int, index: int, n: int) -> MixedStrategy:
    return MixedStrategy(player, tuple(ONE if i == index else ZERO for i in range(n)))


def mixed(player: int, weights) -> MixedStrategy:
    return MixedStrategy(player, tuple(as_rat(w) for w in weights))


@dataclass(frozen=True)
class Profile:
    p1: MixedStrategy
    p2: MixedStrategy

    def __post_init__(self):
        if self.p1.player != 1 or self.p2.player != 2:
            raise ValueError("profile strategies must be (player 1, player 2)")


def pure_profile(game: Game, i: int, j: int) -> Profile:
    return Profile(pure_strategy(1, i, game.n1), pure_strategy(2, j, game.n2))


# ---------------------------------------------------------------------------
# JSON interchange


def parse_game(text: str) -> Game:
    """Parse the JSON interchange schema into a Game.

    Schema: {"p1_actions": [...], "p2_actions": [...], "u1": [[...]],
    "u2": [[...]]}; payoff entries are integers or "p/q" strings.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GameFormatError(f"malformed JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise GameFormatError("game document must be a JSON object")
    missing = {"p1_actions", "p2_actions", "u1", "u2"} - doc.keys()
    if missing:
        raise GameFormatError(f"missing keys: {sorted(missing)}")
    labels1, labels2 = doc["p1_actions"], doc["p2_actions"]
    if not isinstance(labels1, list) or not isinstance(labels2, list):
        raise GameFormatError("action label lists must be JSON arrays")
    return make_game(labels1, labels2, doc["u1"], doc["u2"])


def game_to_dict(game: Game) -> dict:
    return {
        "p1_actions": list(game.p1_actions),
        "p2_actions": list(game.p2_actions),
        "u1": [[format_rational(v) for v in row] for row in game.u1],
        "u2": [[format_rational(v) for v in row] for row in game.u2],
    }


def game_to_json(game: Game) -> str:
    return json.dumps(game_to_dict(game), indent=2)


# ---------------------------------------------------------------------------
# Payoff evaluation and best responses


def expected_utility(game: Game, profile: Profile) -> tuple[Rat, Rat]:
    """Exact bilinear payoff pair for a mixed profile."""
    if len(profile.p1.weights) != game.n1 or len(profile.p2.weights) != game.n2:
        raise ValueError("profile dimensions do not match the game")
    v1 = ZERO
    v2 = ZERO
    for i, p in enumerate(profile.p1.weights):
        if p == 0:
            continue
        for j, q in enumerate(profile.p2.weights):
            if q == 0:
                continue
            v1 += p * q * game.u1[i][j]
            v2 += p * q * game.u2[i][j]
    return v1, v2


def action_values(game: Game, player: int, opponent: MixedStrategy) -> list[Rat]:
    """Expected utility of each pure action against an opponent mix."""
    if player == 1:
        if len(opponent.weights) != game.n2:
            raise ValueError("opponent strategy does not match the game")
        return [
            sum((q * game.u1[i][j] for j, q in enumerate(opponent.weights) if q != 0), ZERO)
            for i in range(game.n1)
        ]
    if len(opponent.weights) != game.n1:
        raise ValueError("opponent strategy does not match the game")
    return [
        sum((p * game.u2[i][j] for i, p in enumerate(opponent.weights) if p != 0), ZERO)
        for j in range(game.n2)
    ]


def best_response_set(game: Game, player: int, opponent: MixedStrategy) -> tuple[int, ...]:
    """Exact argmax set of a player's pure actions against an opponent mix."""
    values = action_values(game, player, opponent)
    top = max(values)
    return tuple(i for i, v in enumerate(values) if v == top)


def is_nash(game: Game, profile: Profile) -> bool:
    """Full unilateral-deviation check against every pure action."""
    v1, v2 = expected_utility(game, profile)
    for v in action_values(game, 1, profile.p2):
        if v > v1:
            return False
    for v in action_values(game, 2, profile.p1):
        if v > v2:
            return False
    return True


def pure_nash_equilibria(game: Game) -> list[Profile]:
    """All pure mutual best responses, found with two argmax passes."""
    best_rows = []  # per column: set of argmax rows for u1
    for j in range(game.n2):
        top = max(game.u1[i][j] for i in range(game.n1))
        best_rows.append({i for i in range(game.n1) if game.u1[i][j] == top})
    out = []
    for i in range(game.n1):
        top = max(game.u2[i][j] for j in range(game.n2))
        for j in range(game.n2):
            if game.u2[i][j] == top and i in best_rows[j]:
                out.append(pure_profile(game, i, j))
    return out


# ---------------------------------------------------------------------------
# Maxmin and commitment


def maxmin(game: Game, player: int) -> tuple[Rat, MixedStrategy]:
    """Exact maxmin value and a witnessing strategy.

    Encoded as a feasibility system over (weights, slacks, v) with v free:
    the optimum is the largest v coordinate over the system's vertices, so
    no LP objective machinery is needed.
    """
    if player == 1:
        own, opp = game.n1, game.n2
        util = lambda i, j: game.u1[i][j]
    else:
        own, opp = game.n2, game.n1
        util = lambda j, i: game.u2[i][j]
    ncols = own + opp + 1
    v_col = ncols - 1
    rows = [tuple(ONE if j < own else ZERO for j in range(ncols))]
    base = [ONE]
    for b in range(opp):
        row = [ZERO] * ncols
        for a in range(own):
            row[a] = util(a, b)
        row[own + b] = -ONE
        row[v_col] = -ONE
        rows.append(tuple(row))
        base.append(ZERO)
    system = LinearSystem(
        rows=tuple(rows),
        rhs_base=tuple(base),
        rhs_slope=tuple(ZERO for _ in rows),
        nonneg=tuple([True] * (own + opp) + [False]),
    )
    best: tuple[Rat, tuple[Rat, ...]] | None = None
    for vertex in vertices_at(system, ZERO):
        value = vertex[v_col]
        weights = vertex[:own]
        if best is None or value > best[0] or (value == best[0] and weights < best[1]):
            best = (value, weights)
    assert best is not None, "maxmin system always has vertices"
    return best[0], MixedStrategy(player, best[1])


@dataclass(frozen=True)
class CommitmentEquilibrium:
    """One optimal pure commitment: leader action, follower BR set and the
    utility ranges over that BR set (ties are reported, never broken)."""

    leader_action: int
    follower_br: tuple[int, ...]
    u1_range: tuple[Rat, Rat]
    u2_range: tuple[Rat, Rat]


def pure_commitment_equilibria(game: Game, leader: int) -> list[CommitmentEquilibrium]:
    """Optimal pure-commitment (Stackelberg) outcomes for the leader.

    A leader action is optimal when the best utility over the follower's
    exact BR set ties the global optimum; the full BR set and induced
    utility ranges are reported so callers can apply their own tie rule.
    """
    follower = 2 if leader == 1 else 1
    entries = []
    n_lead = game.n1 if leader == 1 else game.n2
    for act in range(n_lead):
        lead_strategy = pure_strategy(leader, act, n_lead)
        br = best_response_set(game, follower, lead_strategy)
        cells = [(act, f) if leader == 1 else (f, act) for f in br]
        us1 = [game.u1[i][j] for i, j in cells]
        us2 = [game.u2[i][j] for i, j in cells]
        lead_best = max(us1) if leader == 1 else max(us2)
        entries.append(
            (lead_best, CommitmentEquilibrium(act, br, (min(us1), max(us1)), (min(us2), max(us2))))
        )
    top = max(value for value, _ in entries)
    return [eq for value, eq in entries if value == top]


# ---------------------------------------------------------------------------
# Structural predicates


def has_br_tiebreaking(game: Game) -> bool:
    """True iff P1's choice among tied best responses can move P2's payoff."""
    for j in range(game.n2):
        top = max(game.u1[i][j] for i in range(game.n1))
        br_payoffs = {game.u2[i][j] for i in range(game.n1) if game.u1[i][j] == top}
        if len(br_payoffs) > 1:
            return True
    return False


def is_generic(game: Game) -> tuple[bool, list[str]]:
    """Exact genericity checks: distinct payoffs, unique pure best
    responses, and pairwise-distinct attractiveness ratios per baseline."""
    violations: list[str] = []
    for name, mat in (("u1", game.u1), ("u2", game.u2)):
        seen: dict[Rat, tuple[int, int]] = {}
        for i, row in enumerate(mat):
            for j, v in enumerate(row):
                if v in seen:
                    violations.append(f"duplicate payoff {v} in {name} at {seen[v]} and {(i, j)}")
                else:
                    seen[v] = (i, j)
    for j in range(game.n2):
        col = [game.u1[i][j] for i in range(game.n1)]
        if col.count(max(col)) > 1:
            violations.append(f"P1 best response to column {j} is not unique")
    for i in range(game.n1):
        row = list(game.u2[i])
        if row.count(max(row)) > 1:
            violations.append(f"P2 best response to row {i} is not unique")
    if not violations:
        from .fastpath import ratio_tie_violations

        violations.extend(ratio_tie_violations(game))
    return (not violations, violations)
