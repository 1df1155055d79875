from __future__ import annotations

import json

import pytest

from igt import DocumentError, ExplicitGame, WeightedGame
from igt.documents import (
    GameDocument,
    emit,
    emit_graph,
    parse,
    parse_graph,
    parse_set_system,
    parse_team,
)

from conftest import example3_game


def test_influence_round_trip():
    doc = GameDocument(example3_game(), {"note": "fixture"})
    text = emit(doc)
    parsed = parse(text)
    assert parsed.payload == example3_game()
    assert parsed.metadata == {"note": "fixture"}
    assert emit(parsed) == text


def test_weighted_round_trip():
    doc = GameDocument(WeightedGame(2, (1, 1, 1)))
    assert parse(emit(doc)).payload == WeightedGame(2, (1, 1, 1))


def test_explicit_round_trip_both_forms():
    minimal = ExplicitGame.minimal(("a", "b"), [{"a"}])
    assert parse(emit(GameDocument(minimal))).payload.family == minimal.family
    winning = ExplicitGame.winning(("a", "b"), [{"a"}, {"a", "b"}])
    parsed = parse(emit(GameDocument(winning))).payload
    assert parsed.family_kind == "winning"
    assert parsed.family == winning.family


def test_emit_is_canonical():
    text = emit(GameDocument(example3_game()))
    assert text == emit(parse(text))
    body = json.loads(text)
    assert [n["id"] for n in body["payload"]["nodes"]] == sorted(
        n["id"] for n in body["payload"]["nodes"]
    )


def test_example3_document_literal():
    text = """
    {"format_version": 1, "kind": "influence_game", "metadata": {},
     "payload": {"nodes": [{"id": "a", "threshold": 1}, {"id": "b", "threshold": 1},
                           {"id": "c", "threshold": 1}, {"id": "d", "threshold": 2}],
                 "edges": [{"from": "a", "to": "c", "weight": 1},
                           {"from": "a", "to": "d", "weight": 1},
                           {"from": "b", "to": "a", "weight": 1},
                           {"from": "b", "to": "d", "weight": 1},
                           {"from": "c", "to": "d", "weight": 1}],
                 "directed": true, "quota": 3, "players": ["a", "b", "c", "d"]}}
    """
    assert parse(text).payload == example3_game()


def test_self_loop_diagnostic():
    text = json.dumps(
        {
            "format_version": 1,
            "kind": "influence_game",
            "metadata": {},
            "payload": {
                "nodes": [{"id": "a", "threshold": 1}],
                "edges": [{"from": "a", "to": "a", "weight": 1}],
                "directed": True,
                "quota": 1,
                "players": ["a"],
            },
        }
    )
    with pytest.raises(DocumentError, match="self-loop forbidden"):
        parse(text)


def test_quota_out_of_range_diagnostic():
    text = json.dumps(
        {
            "format_version": 1,
            "kind": "influence_game",
            "metadata": {},
            "payload": {
                "nodes": [{"id": "a", "threshold": 1}],
                "edges": [],
                "directed": True,
                "quota": 5,
                "players": ["a"],
            },
        }
    )
    with pytest.raises(DocumentError, match="quota 5 out of range"):
        parse(text)


def test_field_diagnostics_name_the_path():
    with pytest.raises(DocumentError, match="format_version"):
        parse(json.dumps({"format_version": 2, "kind": "weighted_game", "payload": {}}))
    with pytest.raises(DocumentError, match="payload.weights"):
        parse(
            json.dumps(
                {
                    "format_version": 1,
                    "kind": "weighted_game",
                    "payload": {"quota": 1, "weights": "nope"},
                }
            )
        )
    with pytest.raises(DocumentError, match="kind"):
        parse(json.dumps({"format_version": 1, "kind": "mystery", "payload": {}}))
    with pytest.raises(DocumentError, match="not valid JSON"):
        parse("{")
    with pytest.raises(DocumentError, match="antichain"):
        parse(
            json.dumps(
                {
                    "format_version": 1,
                    "kind": "explicit_game",
                    "payload": {"players": ["a", "b"], "minimal_winning": [["a"], ["a", "b"]]},
                }
            )
        )


def test_graph_and_set_system_documents():
    text = json.dumps(
        {
            "format_version": 1,
            "kind": "graph",
            "metadata": {},
            "payload": {"vertices": ["u", "v"], "edges": [["u", "v"]]},
        }
    )
    vertices, edges = parse_graph(text)
    assert vertices == ("u", "v")
    assert edges == (("u", "v"),)
    emitted = emit_graph(vertices, edges)
    assert parse_graph(emitted) == (("u", "v"), (("u", "v"),))
    sets_text = json.dumps(
        {
            "format_version": 1,
            "kind": "set_system",
            "metadata": {},
            "payload": {"universe": 3, "sets": [[1, 2], [2, 3]]},
        }
    )
    universe, sets = parse_set_system(sets_text)
    assert universe == 3
    assert sets == [frozenset({1, 2}), frozenset({2, 3})]


def test_parse_team():
    assert parse_team("") == frozenset()
    assert parse_team("a,b") == frozenset({"a", "b"})
    assert parse_team("a") == frozenset({"a"})
