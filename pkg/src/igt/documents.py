"""JSON document format for games, graphs, and set systems (format_version 1).

A game document is a single JSON object::

    {"format_version": 1, "kind": "<kind>", "metadata": {...}, "payload": {...}}

with kind one of ``influence_game``, ``weighted_game``, ``explicit_game``.
Auxiliary inputs use the same envelope with kind ``graph`` (payload
``{"vertices": [...], "edges": [["u","v"], ...]}``) or ``set_system``
(payload ``{"universe": n, "sets": [[1,2], ...]}``).  Emission is
canonical: sorted ids, sorted keys, two-space indent, no floating point,
so emit(parse(d)) == d for canonical documents.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Union

from .errors import DocumentError, InputError
from .forms import ExplicitGame, WeightedGame
from .games import InfluenceGame
from .graphs import InfluenceGraph

FORMAT_VERSION = 1

Payload = Union[InfluenceGame, WeightedGame, ExplicitGame]

_KINDS = {
    InfluenceGame: "influence_game",
    WeightedGame: "weighted_game",
    ExplicitGame: "explicit_game",
}


@dataclass
class GameDocument:
    payload: Payload
    metadata: dict[str, str] = field(default_factory=dict)
    format_version: int = FORMAT_VERSION

    @property
    def kind(self) -> str:
        return _KINDS[type(self.payload)]


def _fail(path: str, message: str) -> None:
    raise DocumentError(f"{path}: {message}")


def _expect(value, kind, path: str):
    if kind is int and isinstance(value, bool):
        _fail(path, "must be an integer")
    if not isinstance(value, kind):
        _fail(path, f"must be of type {kind.__name__}")
    return value


def _expect_str_list(value, path: str) -> list[str]:
    _expect(value, list, path)
    return [_expect(item, str, f"{path}[{i}]") for i, item in enumerate(value)]


def _parse_influence_game(payload: dict, path: str) -> InfluenceGame:
    nodes = []
    for i, entry in enumerate(_expect(payload.get("nodes"), list, f"{path}.nodes")):
        _expect(entry, dict, f"{path}.nodes[{i}]")
        nodes.append(
            (
                _expect(entry.get("id"), str, f"{path}.nodes[{i}].id"),
                _expect(entry.get("threshold"), int, f"{path}.nodes[{i}].threshold"),
            )
        )
    edges = []
    for i, entry in enumerate(_expect(payload.get("edges", []), list, f"{path}.edges")):
        _expect(entry, dict, f"{path}.edges[{i}]")
        edges.append(
            (
                _expect(entry.get("from"), str, f"{path}.edges[{i}].from"),
                _expect(entry.get("to"), str, f"{path}.edges[{i}].to"),
                _expect(entry.get("weight", 1), int, f"{path}.edges[{i}].weight"),
            )
        )
    directed = _expect(payload.get("directed", True), bool, f"{path}.directed")
    quota = _expect(payload.get("quota"), int, f"{path}.quota")
    players = _expect_str_list(payload.get("players"), f"{path}.players")
    graph = InfluenceGraph(tuple(nodes), tuple(edges), directed)
    return InfluenceGame(graph, quota, frozenset(players))


def _parse_weighted_game(payload: dict, path: str) -> WeightedGame:
    quota = _expect(payload.get("quota"), int, f"{path}.quota")
    weights = _expect(payload.get("weights"), list, f"{path}.weights")
    weights = tuple(_expect(w, int, f"{path}.weights[{i}]") for i, w in enumerate(weights))
    return WeightedGame(quota, weights)


def _parse_explicit_game(payload: dict, path: str) -> ExplicitGame:
    players = _expect_str_list(payload.get("players"), f"{path}.players")
    has_minimal = "minimal_winning" in payload
    has_winning = "winning" in payload
    if has_minimal == has_winning:
        _fail(path, "exactly one of 'minimal_winning' and 'winning' is required")
    key = "minimal_winning" if has_minimal else "winning"
    family = []
    for i, coalition in enumerate(_expect(payload[key], list, f"{path}.{key}")):
        family.append(frozenset(_expect_str_list(coalition, f"{path}.{key}[{i}]")))
    if has_minimal:
        return ExplicitGame.minimal(players, family)
    return ExplicitGame.winning(players, family)


_PARSERS = {
    "influence_game": _parse_influence_game,
    "weighted_game": _parse_weighted_game,
    "explicit_game": _parse_explicit_game,
}


def _parse_envelope(text: str, expected_kinds: tuple[str, ...]) -> tuple[str, dict, dict[str, str]]:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"not valid JSON: {exc}") from None
    _expect(raw, dict, "document")
    version = _expect(raw.get("format_version"), int, "format_version")
    if version != FORMAT_VERSION:
        _fail("format_version", f"unsupported version {version}")
    kind = _expect(raw.get("kind"), str, "kind")
    if kind not in expected_kinds:
        _fail("kind", f"expected one of {', '.join(expected_kinds)}; got {kind!r}")
    payload = _expect(raw.get("payload"), dict, "payload")
    metadata_raw = _expect(raw.get("metadata", {}), dict, "metadata")
    metadata = {
        _expect(k, str, "metadata key"): _expect(v, str, f"metadata[{k!r}]")
        for k, v in metadata_raw.items()
    }
    return kind, payload, metadata


def parse(text: str) -> GameDocument:
    """Parse a game document; raises DocumentError naming the bad field."""
    kind, payload, metadata = _parse_envelope(text, tuple(_PARSERS))
    try:
        game = _PARSERS[kind](payload, "payload")
    except DocumentError:
        raise
    except InputError as exc:
        raise DocumentError(str(exc)) from None
    return GameDocument(game, metadata)


def _influence_payload(game: InfluenceGame) -> dict:
    return {
        "nodes": [
            {"id": node, "threshold": threshold}
            for node, threshold in sorted(game.graph.nodes)
        ],
        "edges": [
            {"from": tail, "to": head, "weight": weight}
            for tail, head, weight in sorted(game.graph.edges)
        ],
        "directed": game.graph.directed,
        "quota": game.quota,
        "players": sorted(game.players),
    }


def _weighted_payload(game: WeightedGame) -> dict:
    return {"quota": game.quota, "weights": list(game.weights)}


def _explicit_payload(game: ExplicitGame) -> dict:
    key = "winning" if game.family_kind == "winning" else "minimal_winning"
    family = sorted(sorted(member) for member in game.family)
    return {"players": sorted(game.players), key: family}


def emit(document: GameDocument) -> str:
    """Canonical text for a game document."""
    if isinstance(document.payload, InfluenceGame):
        payload = _influence_payload(document.payload)
    elif isinstance(document.payload, WeightedGame):
        payload = _weighted_payload(document.payload)
    elif isinstance(document.payload, ExplicitGame):
        payload = _explicit_payload(document.payload)
    else:
        raise InputError(f"cannot emit payload of type {type(document.payload).__name__}")
    body = {
        "format_version": document.format_version,
        "kind": document.kind,
        "metadata": dict(sorted(document.metadata.items())),
        "payload": payload,
    }
    return json.dumps(body, indent=2, sort_keys=True) + "\n"


def parse_graph(text: str) -> tuple[tuple[str, ...], tuple[tuple[str, str], ...]]:
    """Parse a kind="graph" document into (vertices, edges)."""
    _, payload, _ = _parse_envelope(text, ("graph",))
    vertices = tuple(_expect_str_list(payload.get("vertices"), "payload.vertices"))
    edges = []
    for i, pair in enumerate(_expect(payload.get("edges", []), list, "payload.edges")):
        pair = _expect_str_list(pair, f"payload.edges[{i}]")
        if len(pair) != 2:
            _fail(f"payload.edges[{i}]", "must be a two-element [from, to] pair")
        edges.append((pair[0], pair[1]))
    return vertices, tuple(edges)


def emit_graph(vertices: tuple[str, ...], edges: tuple[tuple[str, str], ...], metadata: dict[str, str] | None = None) -> str:
    body = {
        "format_version": FORMAT_VERSION,
        "kind": "graph",
        "metadata": dict(sorted((metadata or {}).items())),
        "payload": {
            "vertices": sorted(vertices),
            "edges": sorted([min(u, v), max(u, v)] for u, v in edges),
        },
    }
    return json.dumps(body, indent=2, sort_keys=True) + "\n"


def parse_set_system(text: str) -> tuple[int, list[frozenset[int]]]:
    """Parse a kind="set_system" document into (universe size, sets)."""
    _, payload, _ = _parse_envelope(text, ("set_system",))
    universe = _expect(payload.get("universe"), int, "payload.universe")
    sets = []
    for i, members in enumerate(_expect(payload.get("sets"), list, "payload.sets")):
        _expect(members, list, f"payload.sets[{i}]")
        sets.append(frozenset(_expect(e, int, f"payload.sets[{i}][{j}]") for j, e in enumerate(members)))
    return universe, sets


def parse_team(raw: str) -> frozenset[str]:
    """Comma-separated team flag value; the empty string is the empty team."""
    if raw == "":
        return frozenset()
    return frozenset(part for part in raw.split(","))
