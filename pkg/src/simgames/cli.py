"""Command-line surface: generate, solve, sweep, classify and report.

All rationals cross this boundary as "p/q" strings; diagnostics go to
stderr as structured `level=... code=... msg=...` lines.  Exit codes:
0 success, 1 usage or input error, 2 computation refusal (action cap,
genericity, verification).
"""

from __future__ import annotations

import argparse
import json
import sys

from .equilibria import NEComponent, all_nash_equilibria
from .fastpath import GenericityError, fast_cheap_ne
from .games import (
    ActionCapExceeded,
    Game,
    GameFormatError,
    MixedStrategy,
    Profile,
    VerificationError,
    expected_utility,
    game_to_dict,
    parse_game,
)
from .rational import format_rational, parse_rational
from .simulation import build, default_policy, solve_all_policies
from .sweep import SweepAnalysis, write_sweep_csvs
from .voi import voi_of
from .welfare import classify, construct_trust_sim_ne, welfare_report
from .corpus import FAMILIES, gen_cafes, gen_guess_number, gen_joint_project, gen_named, gen_trust

USAGE_ERROR = 1
COMPUTE_ERROR = 2


def _diag(level: str, code: str, msg: str) -> None:
    print(f'level={level} code={code} msg="{msg}"', file=sys.stderr)


def _read_game(path: str) -> Game:
    if path == "-":
        return parse_game(sys.stdin.read())
    with open(path) as fh:
        return parse_game(fh.read())


def _component_dict(game: Game, comp: NEComponent) -> dict:
    utilities = [
        [
            [format_rational(u) for u in expected_utility(
                game, Profile(MixedStrategy(1, v1), MixedStrategy(2, v2))
            )]
            for v2 in comp.p2_vertices
        ]
        for v1 in comp.p1_vertices
    ]
    return {
        "support_p1": [game.p1_actions[a] for a in comp.support.s1],
        "support_p2": [game.p2_actions[b] for b in comp.support.s2],
        "p1_vertices": [[format_rational(w) for w in v] for v in comp.p1_vertices],
        "p2_vertices": [[format_rational(w) for w in v] for v in comp.p2_vertices],
        "utilities": utilities,
    }


def _profile_component(game: Game, profile: Profile) -> dict:
    comp = NEComponent(
        support=_support_of(profile),
        p1_vertices=(profile.p1.weights,),
        p2_vertices=(profile.p2.weights,),
    )
    return _component_dict(game, comp)


def _support_of(profile: Profile):
    from .equilibria import SupportPair

    return SupportPair(profile.p1.support(), profile.p2.support())


def _cmd_gen(args) -> int:
    if args.family in ("trust",):
        game = gen_trust(
            coop=parse_rational(args.coop),
            defect_gain=parse_rational(args.defect_gain),
            defect_loss=parse_rational(args.defect_loss),
        )
    elif args.family == "cafes":
        xs = [parse_rational(v) for v in args.x.split(",")]
        ys = [parse_rational(v) for v in args.y.split(",")]
        game = gen_cafes(xs, ys)[0]
    elif args.family in ("guess", "guess_number"):
        game = gen_guess_number(args.n)
    elif args.family in ("joint", "joint_project"):
        game = gen_joint_project(parse_rational(args.k))
    else:
        game = gen_named(args.family)
    text = json.dumps(game_to_dict(game), indent=2)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


def _cmd_solve(args) -> int:
    game = _read_game(args.game)
    cost = parse_rational(args.c)
    if args.all_policies:
        solution = solve_all_policies(game, cost, all_nash_equilibria)
        doc = {
            "cost": format_rational(cost),
            "policies": [
                {
                    "policy": [
                        [format_rational(w) for w in resp.weights]
                        for resp in policy.responses
                    ],
                    "new_equilibria": [
                        {
                            "p1": [format_rational(w) for w in v1],
                            "p2": [format_rational(w) for w in v2],
                        }
                        for v1, v2 in profiles
                    ],
                }
                for policy, profiles in zip(solution.policies, solution.new_equilibria)
            ],
            "base_components": [_component_dict(game, c) for c in solution.base_equilibria],
            "overlaps": list(solution.overlaps),
        }
        print(json.dumps(doc, indent=2))
        return 0
    sim_game = build(game, cost, default_policy(game))
    if args.fast:
        try:
            profiles = fast_cheap_ne(game, cost)
        except GenericityError as exc:
            _diag("error", "genericity", f"{exc}; rerun without --fast to use full enumeration")
            return COMPUTE_ERROR
        components = [_profile_component(sim_game.augmented, p) for p in profiles]
    else:
        components = [
            _component_dict(sim_game.augmented, c)
            for c in all_nash_equilibria(sim_game.augmented)
        ]
    doc = {
        "game": game_to_dict(sim_game.augmented),
        "cost": format_rational(cost),
        "components": components,
    }
    print(json.dumps(doc, indent=2))
    return 0


def _cmd_sweep(args) -> int:
    game = _read_game(args.game)
    analysis = SweepAnalysis(game)
    for value, reason in analysis.breakpoints().dropped:
        _diag("info", "candidate-dropped", f"c={format_rational(value)}: {reason}")
    paths = write_sweep_csvs(game, None, args.out, samples=args.samples, analysis=analysis)
    _diag("info", "sweep-written", ",".join(sorted(paths.values())))
    return 0


def _cmd_voi(args) -> int:
    game = _read_game(args.game)
    weights = tuple(parse_rational(v) for v in args.pi2.split(","))
    report = voi_of(game, MixedStrategy(2, weights))
    doc = {
        "strategy": [format_rational(w) for w in report.strategy.weights],
        "best_response_value": format_rational(report.best_response_value),
        "clairvoyant_value": format_rational(report.clairvoyant_value),
        "voi": format_rational(report.voi),
    }
    print(json.dumps(doc, indent=2))
    return 0


def _cmd_classify(args) -> int:
    game = _read_game(args.game)
    report = classify(game)
    doc = {
        "is_zero_sum": report.is_zero_sum,
        "is_generic": report.is_generic,
        "has_br_tiebreaking": report.has_br_tiebreaking,
        "is_generalized_trust_game": report.is_generalized_trust_game,
        "upper_threshold": format_rational(report.upper_threshold),
    }
    print(json.dumps(doc, indent=2))
    return 0


def _cmd_welfare(args) -> int:
    game = _read_game(args.game)
    grid = [parse_rational(v) for v in args.grid.split(",")]
    report = welfare_report(game, c_values=grid)
    doc = {
        "base_utilities": [
            [format_rational(u1), format_rational(u2)] for u1, u2 in report.base_utilities
        ],
        "grid": [
            {
                "c": format_rational(e.cost),
                "support_p1": list(e.support_p1),
                "support_p2": list(e.support_p2),
                "u1_range": [format_rational(v) for v in e.u1_range],
                "u2_range": [format_rational(v) for v in e.u2_range],
                "verdict": e.verdict,
            }
            for e in report.grid
        ],
    }
    print(json.dumps(doc, indent=2))
    return 0


def _cmd_trust_construct(args) -> int:
    game = _read_game(args.game)
    cost = parse_rational(args.c)
    constructions = construct_trust_sim_ne(game, cost)
    doc = {"cost": format_rational(cost), "constructions": []}
    for con in constructions:
        entry = {
            "case": con.case,
            "p1": [format_rational(w) for w in con.profile.p1.weights],
            "p2": [format_rational(w) for w in con.profile.p2.weights],
            "utilities": [format_rational(u) for u in con.utilities],
            "optimal_commitments": list(con.optimal_commitments),
            "universal_best_responses": list(con.universal_best_responses),
            "sim_prob": None if con.sim_prob is None else format_rational(con.sim_prob),
            "alpha": None if con.alpha is None else format_rational(con.alpha),
            "eta_bound": None if con.eta_bound is None else format_rational(con.eta_bound),
        }
        if con.auxiliary_game is not None:
            entry["auxiliary_game"] = game_to_dict(con.auxiliary_game)
            entry["auxiliary_ne"] = [
                [format_rational(w) for w in con.auxiliary_ne[0]],
                [format_rational(w) for w in con.auxiliary_ne[1]],
            ]
        doc["constructions"].append(entry)
    print(json.dumps(doc, indent=2))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="simgames",
        description="Exact solvers for two-player games with a costly simulate action.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    gen = sub.add_parser("gen", help="emit a named game as JSON")
    gen.add_argument("family", choices=sorted(set(FAMILIES) | {"guess", "joint"}))
    gen.add_argument("--coop", default="25")
    gen.add_argument("--defect-gain", default="150")
    gen.add_argument("--defect-loss", default="150")
    gen.add_argument("--x", default="1,2,4")
    gen.add_argument("--y", default="1,1,1")
    gen.add_argument("--n", type=int, default=3)
    gen.add_argument("--k", default="26")
    gen.add_argument("-o", "--output")

    solve = sub.add_parser("solve", help="equilibria of the simulation game at one cost")
    solve.add_argument("game", help="game JSON path, or - for stdin")
    solve.add_argument("--c", required=True, help='simulation cost as "p/q"')
    solve.add_argument("--fast", action="store_true", help="generic-game linear-time path")
    solve.add_argument("--policy", choices=["lex"], default="lex")
    solve.add_argument("--all-policies", action="store_true")

    sweep = sub.add_parser("sweep", help="breakpoints and trajectory CSVs")
    sweep.add_argument("game")
    sweep.add_argument("--out", required=True)
    sweep.add_argument("--samples", type=int, default=64)

    voi = sub.add_parser("voi", help="value of information of a P2 strategy")
    voi.add_argument("game")
    voi.add_argument("--pi2", required=True, help='comma-separated "p/q" weights')

    sub.add_parser("classify", help="structural classification report").add_argument("game")

    welfare = sub.add_parser("welfare", help="welfare report over a cost grid")
    welfare.add_argument("game")
    welfare.add_argument("--grid", required=True, help='comma-separated "p/q" costs')

    construct = sub.add_parser(
        "trust-construct", help="the Pareto-improving construction for trust games"
    )
    construct.add_argument("game")
    construct.add_argument("--c", required=True)

    return parser


_HANDLERS = {
    "gen": _cmd_gen,
    "solve": _cmd_solve,
    "sweep": _cmd_sweep,
    "voi": _cmd_voi,
    "classify": _cmd_classify,
    "welfare": _cmd_welfare,
    "trust-construct": _cmd_trust_construct,
}


def run(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code else 0
    try:
        return _HANDLERS[args.verb](args)
    except (GameFormatError, ValueError, OSError) as exc:
        _diag("error", "input", str(exc))
        return USAGE_ERROR
    except (ActionCapExceeded, VerificationError, GenericityError) as exc:
        _diag("error", "compute", str(exc))
        return COMPUTE_ERROR


def main() -> None:
    sys.exit(run())
