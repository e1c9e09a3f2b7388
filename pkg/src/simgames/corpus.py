"""Named game generators used as fixtures and regression anchors.

Each generator emits a plain Game in the standard JSON-compatible shape so
fixtures stay diffable.  The coordination family also returns its
closed-form predictions (mixed equilibria per support subset and their
values of information), which double as breakpoint stress tests.
"""

from __future__ import annotations

from dataclasses import dataclass

from .games import Game, GameFormatError, make_game
from .rational import ONE, ZERO, Rat, as_rat

FAMILIES = (
    "trust",
    "cafes",
    "guess_number",
    "joint_project",
    "commitment",
    "battle_of_sexes",
    "chicken",
    "stag_hunt",
)


def gen_trust(coop=25, defect_gain=150, defect_loss=150) -> Game:
    """The two-action trust game: trust/walk-out vs cooperate/defect.

    Cooperation splits a surplus (coop each); defection hands P2 the gain
    and costs P1 the loss; walking out zeroes everything.
    """
    coop, gain, loss = as_rat(coop), as_rat(defect_gain), as_rat(defect_loss)
    if coop <= 0 or gain <= 0 or loss <= 0:
        raise GameFormatError("trust game parameters must be positive")
    return Game(
        p1_actions=("T", "WO"),
        p2_actions=("C", "D"),
        u1=((coop, -loss), (ZERO, ZERO)),
        u2=((coop, gain), (ZERO, ZERO)),
    )


@dataclass(frozen=True)
class CafesPrediction:
    subset: tuple[int, ...]
    p1: tuple[Rat, ...]
    p2: tuple[Rat, ...]
    voi: Rat


def gen_cafes(x, y) -> tuple[Game, list[CafesPrediction]]:
    """Diagonal coordination game plus its closed-form equilibrium family.

    For every nonempty subset I of cafes there is a mixed NE supported on
    I with weights proportional to the excluded products, and its value
    of information is (1 - 1/|I|) times the harmonic mean of the P1
    payoffs on I.  With generic payoffs these values are all distinct,
    which makes the breakpoint set of the simulation game blow up.
    """
    xs = [as_rat(v) for v in x]
    ys = [as_rat(v) for v in y]
    if len(xs) != len(ys) or not xs:
        raise GameFormatError("cafe payoff vectors must be nonempty and equally long")
    if any(v <= 0 for v in xs + ys):
        raise GameFormatError("cafe payoffs must be positive")
    n = len(xs)
    labels = tuple(f"cafe{i + 1}" for i in range(n))
    u1 = tuple(tuple(xs[i] if i == j else ZERO for j in range(n)) for i in range(n))
    u2 = tuple(tuple(ys[i] if i == j else ZERO for j in range(n)) for i in range(n))
    game = Game(labels, labels, u1, u2)
    predictions = []
    for mask in range(1, 1 << n):
        subset = tuple(i for i in range(n) if mask & (1 << i))
        k = len(subset)
        w1 = [ZERO] * n
        w2 = [ZERO] * n
        for i in subset:
            prod_y = ONE
            prod_x = ONE
            for j in subset:
                if j != i:
                    prod_y *= ys[j]
                    prod_x *= xs[j]
            w1[i] = prod_y
            w2[i] = prod_x
        total1 = sum(w1, ZERO)
        total2 = sum(w2, ZERO)
        p1 = tuple(v / total1 for v in w1)
        p2 = tuple(v / total2 for v in w2)
        harmonic = Rat(k) / sum((ONE / xs[i] for i in subset), ZERO)
        voi = (ONE - Rat(1, k)) * harmonic
        predictions.append(CafesPrediction(subset, p1, p2, voi))
    predictions.sort(key=lambda pr: (len(pr.subset), pr.subset))
    return game, predictions


def gen_guess_number(n: int) -> Game:
    """Unfair guess-the-number: matching pays P1, anything else pays P2."""
    if n < 2:
        raise GameFormatError("guess-the-number needs at least two numbers")
    labels = tuple(str(i + 1) for i in range(n))
    u1 = tuple(tuple(ONE if i == j else -ONE for j in range(n)) for i in range(n))
    u2 = tuple(tuple(-v for v in row) for row in u1)
    return Game(labels, labels, u1, u2)


def gen_joint_project(password_space=26) -> Game:
    """Startup collaboration with a password-guessing betrayal option.

    P2 accepts or rejects; P1 can try to guess the password afterwards.
    The guess branch is collapsed to its expectation at success chance
    1/k: raw outcomes are 100/100 on cooperation, 200/-10 on a correct
    guess, -999/123 on a wrong one (jail) and 0/0 on rejection.
    """
    k = as_rat(password_space)
    if k < 1:
        raise GameFormatError("password space must be at least 1")
    guess_u1 = (as_rat(200) + (k - 1) * as_rat(-999)) / k
    guess_u2 = (as_rat(-10) + (k - 1) * as_rat(123)) / k
    return Game(
        p1_actions=("no_guess", "guess"),
        p2_actions=("accept", "reject"),
        u1=((as_rat(100), ZERO), (guess_u1, ZERO)),
        u2=((as_rat(100), ZERO), (guess_u2, ZERO)),
    )


def _commitment_game() -> Game:
    # Base play favors P1 at (U, L); P2's optimal commitment is R, which
    # only pays off when P1 can observe it -- i.e. once simulation exists.
    return make_game(
        ["U", "D"],
        ["L", "R"],
        [[4, 0], [3, 1]],
        [[2, 1], [5, 3]],
    )


def _battle_of_sexes() -> Game:
    return make_game(
        ["opera", "football"],
        ["opera", "football"],
        [[2, 0], [0, 1]],
        [[1, 0], [0, 2]],
    )


def _chicken() -> Game:
    return make_game(
        ["swerve", "straight"],
        ["swerve", "straight"],
        [[0, -1], [1, -10]],
        [[0, 1], [-1, -10]],
    )


def _stag_hunt() -> Game:
    return make_game(
        ["stag", "hare"],
        ["stag", "hare"],
        [[4, 0], [3, 3]],
        [[4, 3], [0, 3]],
    )


def gen_named(family: str, **params) -> Game:
    """Dispatch into the corpus by family name."""
    if family == "trust":
        return gen_trust(**params)
    if family == "cafes":
        return gen_cafes(**params)[0]
    if family == "guess_number":
        return gen_guess_number(**params)
    if family == "joint_project":
        return gen_joint_project(**params)
    if family == "commitment":
        return _commitment_game()
    if family == "battle_of_sexes":
        return _battle_of_sexes()
    if family == "chicken":
        return _chicken()
    if family == "stag_hunt":
        return _stag_hunt()
    raise GameFormatError(f"unknown family {family!r}; known: {', '.join(FAMILIES)}")
