"""Command-line front end.

Decision queries print ``true`` or ``false``; measures print an integer or
``none``; conversion and generation commands print a canonical game
document.  Exit status 0 means the answer was computed (even when it is
``false``), 2 means a usage or validation error, 3 means an enumeration
cap was exceeded.  The default cap of 20 players can be changed with
``--max-players`` or the ``IGT_MAX_PLAYERS`` environment variable.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import analysis, documents, reductions, special
from .errors import InputError, ResourceLimitError, SelfCheckError
from .forms import ExplicitGame, WeightedGame, explicit_combine, minimal_winning
from .games import (
    InfluenceGame,
    combine,
    combine_weighted,
    from_minimal_winning,
    from_weighted,
    from_weighted_unweighted,
    vertex_cover_game,
)
from .graphs import InfluenceGraph, spread, spread_trace

DEFAULT_CAP = 20
DEFAULT_ISO_CAP = 8


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from None


def _load_game(path: str) -> documents.GameDocument:
    return documents.parse(_read(path))


def _influence_game(path: str) -> InfluenceGame:
    payload = _load_game(path).payload
    if not isinstance(payload, InfluenceGame):
        raise InputError(f"{path} does not contain an influence game")
    return payload


def _team(raw: str) -> frozenset[str]:
    return documents.parse_team(raw)


def _bool_line(value: bool) -> str:
    return "true" if value else "false"


def _print_measure(value: int | None) -> None:
    print("none" if value is None else value)


def _emit_game(game, metadata: dict[str, str] | None = None) -> None:
    print(documents.emit(documents.GameDocument(game, metadata or {})), end="")


def _format_fraction(value, decimal: bool) -> str:
    if decimal:
        return f"{float(value):.6g}"
    return f"{value.numerator}/{value.denominator}"


def _power_line(report, decimal: bool) -> str:
    return (
        f"player={report.player}"
        f" banzhaf_value={report.banzhaf_value}"
        f" banzhaf_index={_format_fraction(report.banzhaf_index, decimal)}"
        f" shapley_value={report.shapley_value}"
        f" shapley_index={_format_fraction(report.shapley_index, decimal)}"
    )


def _cmd_spread(args) -> int:
    game = _influence_game(args.game)
    if args.trace:
        trace = spread_trace(game.graph, _team(args.team))
        for i, step in enumerate(trace.steps):
            print(f"{i}: {','.join(sorted(step))}")
    else:
        print(",".join(sorted(spread(game.graph, _team(args.team)))))
    return 0


def _cmd_check(args) -> int:
    from .games import is_successful

    game = _influence_game(args.game)
    print(_bool_line(is_successful(game, _team(args.team))))
    return 0


def _cmd_measure(args) -> int:
    game = _influence_game(args.game)
    _print_measure(analysis.measure(game, args.kind, method=args.method, max_players=args.max_players))
    return 0


def _cmd_power(args) -> int:
    game = _influence_game(args.game)
    if args.all:
        for report in analysis.power_all(game, max_players=args.max_players):
            print(_power_line(report, args.decimal))
    else:
        if args.player is None:
            raise InputError("power needs --player or --all")
        print(_power_line(analysis.power(game, args.player, max_players=args.max_players), args.decimal))
    return 0


def _cmd_prop_player(args) -> int:
    game = _influence_game(args.game)
    if args.kind == "dummy":
        result = analysis.is_dummy(game, args.player, max_players=args.max_players)
    else:
        result = analysis.player_property(game, args.player, args.kind)
    print(_bool_line(result))
    return 0


def _cmd_prop_pair(args) -> int:
    game = _influence_game(args.game)
    pair = args.players.split(",")
    if len(pair) != 2:
        raise InputError("--players needs exactly two comma-separated ids")
    print(_bool_line(analysis.are_symmetric(game, pair[0], pair[1], max_players=args.max_players)))
    return 0


def _cmd_prop_team(args) -> int:
    game = _influence_game(args.game)
    kind = args.kind
    player = None
    if kind.startswith("critical:"):
        kind, player = "critical", kind.split(":", 1)[1]
    elif kind == "critical":
        raise InputError("critical needs a player: use --kind critical:<player>")
    print(_bool_line(analysis.team_property(game, _team(args.team), kind, player)))
    return 0


def _cmd_prop_game(args) -> int:
    game = _influence_game(args.game)
    print(_bool_line(analysis.game_property(game, args.kind, method=args.method, max_players=args.max_players)))
    return 0


def _cmd_convert(args) -> int:
    payload = _load_game(args.game).payload
    if args.source == "wm":
        if not isinstance(payload, ExplicitGame):
            raise InputError("--from wm needs an explicit game document")
        result = from_minimal_winning(minimal_winning(payload))
    else:
        if not isinstance(payload, WeightedGame):
            raise InputError("--from weighted needs a weighted game document")
        if args.target == "ig":
            result = from_weighted(payload)
        else:
            result = from_weighted_unweighted(payload)
    _emit_game(result)
    return 0


def _cmd_combine(args) -> int:
    first = _load_game(args.first).payload
    second = _load_game(args.second).payload
    if isinstance(first, InfluenceGame) and isinstance(second, InfluenceGame):
        _emit_game(combine(first, second, args.mode, validate_cap=args.validate_cap))
    elif isinstance(first, WeightedGame) and isinstance(second, WeightedGame):
        _emit_game(combine_weighted(first, second, args.mode))
    elif isinstance(first, ExplicitGame) and isinstance(second, ExplicitGame):
        _emit_game(explicit_combine(first, second, args.mode))
    else:
        raise InputError("combine needs two documents of the same game kind")
    return 0


def _cmd_gamma(args) -> int:
    vertices, edges = documents.parse_graph(_read(args.graph))
    graph = InfluenceGraph.of([(v, 0) for v in vertices], edges, directed=False)
    _emit_game(vertex_cover_game(graph))
    return 0


def _cmd_compare(args) -> int:
    first = _influence_game(args.first)
    second = _influence_game(args.second)
    if args.kind == "equiv":
        print(_bool_line(analysis.equivalent(first, second, max_players=args.max_players)))
    else:
        result = analysis.isomorphic(first, second, max_players=args.iso_cap)
        print(_bool_line(result.isomorphic))
        if result.witness:
            mapping = " ".join(f"{k}->{result.witness[k]}" for k in sorted(result.witness))
            print(f"witness: {mapping}")
    return 0


def _cmd_gen(args) -> int:
    gadget = args.gadget
    if gadget in ("setcover", "setpacking"):
        universe, sets = documents.parse_set_system(_read(args.instance))
        maker = (
            reductions.gen_setcover_length_game
            if gadget == "setcover"
            else reductions.gen_setpacking_width_game
        )
        instance = maker(sets, universe)
        _emit_game(instance.game, instance.provenance)
        return 0
    if gadget == "necessary":
        instance = reductions.gen_necessary_player(_influence_game(args.instance))
        _emit_game(instance.game, instance.provenance)
        return 0
    vertices, edges = documents.parse_graph(_read(args.instance))
    if gadget == "delta3":
        instance = reductions.gen_delta3(vertices, edges)
        _emit_game(instance.game, instance.provenance)
        return 0
    if args.k is None:
        raise InputError(f"gen {gadget} needs --k")
    if gadget == "delta1":
        instance = reductions.gen_delta1(vertices, edges, args.k)
        _emit_game(instance.game, instance.provenance)
    elif gadget == "delta2":
        instance = reductions.gen_delta2(vertices, edges, args.k)
        _emit_game(instance.game, instance.provenance)
    elif gadget == "halfvc":
        instance = reductions.gen_half_vc_graph(vertices, edges, args.k)
        out_vertices, out_edges = instance.graph
        print(documents.emit_graph(out_vertices, out_edges, instance.provenance), end="")
    elif gadget == "isopair":
        first, second = reductions.gen_iso_pair(vertices, edges, args.k)
        bodies = [
            json.loads(documents.emit(documents.GameDocument(game))) for game in (first, second)
        ]
        print(json.dumps(bodies, indent=2, sort_keys=True))
    else:
        raise InputError(f"unknown gadget {gadget!r}")
    return 0


def _cmd_oracle(args) -> int:
    if args.kind in ("min_vertex_cover", "count_vertex_covers", "max_independent_set"):
        vertices, edges = documents.parse_graph(_read(args.instance))
        result = reductions.oracle(args.kind, vertices, edges)
    elif args.kind in ("min_set_cover", "max_set_packing"):
        universe, sets = documents.parse_set_system(_read(args.instance))
        result = reductions.oracle(args.kind, universe, sets)
    else:
        raise InputError(f"unknown oracle kind {args.kind!r}")
    _print_measure(result)
    return 0


def _cmd_classify(args) -> int:
    game = _influence_game(args.game)
    print(special.classify(game).value)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="igt", description="Exact analysis of threshold influence games."
    )
    parser.add_argument(
        "--max-players",
        type=int,
        default=None,
        help="enumeration cap (default: IGT_MAX_PLAYERS or 20)",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    cmd = commands.add_parser("spread", help="activation set (or trace) of a team")
    cmd.add_argument("--game", required=True)
    cmd.add_argument("--team", required=True)
    cmd.add_argument("--trace", action="store_true")
    cmd.set_defaults(handler=_cmd_spread)

    cmd = commands.add_parser("check", help="is the team successful?")
    cmd.add_argument("--game", required=True)
    cmd.add_argument("--team", required=True)
    cmd.set_defaults(handler=_cmd_check)

    cmd = commands.add_parser("measure", help="length / width / slength / swidth")
    cmd.add_argument("--game", required=True)
    cmd.add_argument("--kind", required=True, choices=("length", "width", "slength", "swidth"))
    cmd.add_argument("--method", default="auto", choices=("auto", "brute", "special"))
    cmd.set_defaults(handler=_cmd_measure)

    cmd = commands.add_parser("power", help="Banzhaf and Shapley-Shubik power")
    cmd.add_argument("--game", required=True)
    cmd.add_argument("--player")
    cmd.add_argument("--all", action="store_true")
    cmd.add_argument("--decimal", action="store_true", help="render indices as decimals")
    cmd.set_defaults(handler=_cmd_power)

    prop = commands.add_parser("prop", help="player / pair / team / game properties")
    prop_sub = prop.add_subparsers(dest="prop_kind", required=True)

    cmd = prop_sub.add_parser("player")
    cmd.add_argument("--game", required=True)
    cmd.add_argument("--player", required=True)
    cmd.add_argument("--kind", required=True, choices=("passer", "vetoer", "dictator", "dummy"))
    cmd.set_defaults(handler=_cmd_prop_player)

    cmd = prop_sub.add_parser("pair")
    cmd.add_argument("--game", required=True)
    cmd.add_argument("--players", required=True, help="two comma-separated player ids")
    cmd.set_defaults(handler=_cmd_prop_pair)

    cmd = prop_sub.add_parser("team")
    cmd.add_argument("--game", required=True)
    cmd.add_argument("--team", required=True)
    cmd.add_argument("--kind", required=True, help="critical:<player> | blocking | swing")
    cmd.set_defaults(handler=_cmd_prop_team)

    cmd = prop_sub.add_parser("game")
    cmd.add_argument("--game", required=True)
    cmd.add_argument("--kind", required=True, choices=("proper", "strong", "decisive"))
    cmd.add_argument("--method", default="auto", choices=("auto", "brute", "special"))
    cmd.set_defaults(handler=_cmd_prop_game)

    cmd = commands.add_parser("convert", help="realise an explicit or weighted game as an influence game")
    cmd.add_argument("--from", dest="source", required=True, choices=("wm", "weighted"))
    cmd.add_argument("--to", dest="target", required=True, choices=("ig", "uig"))
    cmd.add_argument("--game", required=True)
    cmd.set_defaults(handler=_cmd_convert)

    cmd = commands.add_parser("combine", help="union or intersection of two games")
    cmd.add_argument("--mode", required=True, choices=("union", "intersection"))
    cmd.add_argument("--validate-cap", type=int, default=12)
    cmd.add_argument("first")
    cmd.add_argument("second")
    cmd.set_defaults(handler=_cmd_combine)

    cmd = commands.add_parser("gamma", help="vertex-cover game of an undirected graph")
    cmd.add_argument("--graph", required=True)
    cmd.set_defaults(handler=_cmd_gamma)

    cmd = commands.add_parser("compare", help="equivalence or isomorphism of two games")
    cmd.add_argument("--kind", required=True, choices=("equiv", "iso"))
    cmd.add_argument("--iso-cap", type=int, default=DEFAULT_ISO_CAP)
    cmd.add_argument("first")
    cmd.add_argument("second")
    cmd.set_defaults(handler=_cmd_compare)

    cmd = commands.add_parser("gen", help="hardness gadget generators")
    cmd.add_argument(
        "gadget",
        choices=("setcover", "setpacking", "delta1", "delta2", "delta3", "halfvc", "isopair", "necessary"),
    )
    cmd.add_argument("--instance", required=True, help="source document (graph, set system, or game)")
    cmd.add_argument("--k", type=int, default=None)
    cmd.set_defaults(handler=_cmd_gen)

    cmd = commands.add_parser("oracle", help="independent brute-force combinatorial oracles")
    cmd.add_argument(
        "--kind",
        required=True,
        choices=("min_vertex_cover", "count_vertex_covers", "max_independent_set", "min_set_cover", "max_set_packing"),
    )
    cmd.add_argument("--instance", required=True)
    cmd.set_defaults(handler=_cmd_oracle)

    cmd = commands.add_parser("classify", help="special-family tag of a game")
    cmd.add_argument("--game", required=True)
    cmd.set_defaults(handler=_cmd_classify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    if args.max_players is None:
        raw = os.environ.get("IGT_MAX_PLAYERS", "")
        try:
            args.max_players = int(raw) if raw else DEFAULT_CAP
        except ValueError:
            print(f"error: IGT_MAX_PLAYERS must be an integer, got {raw!r}", file=sys.stderr)
            return 2
    try:
        return args.handler(args)
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (InputError, SelfCheckError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
