from __future__ import annotations

import json

import pytest

from igt import ExplicitGame, WeightedGame
from igt.cli import main
from igt.documents import GameDocument, emit

from conftest import example3_game


@pytest.fixture
def example3_file(tmp_path):
    path = tmp_path / "example3.json"
    path.write_text(emit(GameDocument(example3_game())))
    return str(path)


@pytest.fixture
def graph_file(tmp_path):
    path = tmp_path / "k3.json"
    path.write_text(
        json.dumps(
            {
                "format_version": 1,
                "kind": "graph",
                "metadata": {},
                "payload": {"vertices": ["u", "v", "w"], "edges": [["u", "v"], ["v", "w"], ["u", "w"]]},
            }
        )
    )
    return str(path)


@pytest.fixture
def sets_file(tmp_path):
    path = tmp_path / "sets.json"
    path.write_text(
        json.dumps(
            {
                "format_version": 1,
                "kind": "set_system",
                "metadata": {},
                "payload": {"universe": 3, "sets": [[1, 2], [2, 3]]},
            }
        )
    )
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_check_true(example3_file, capsys):
    code, out, _ = run(capsys, "check", "--game", example3_file, "--team", "a")
    assert (code, out.strip()) == (0, "true")


def test_check_false_still_exit_zero(example3_file, capsys):
    code, out, _ = run(capsys, "check", "--game", example3_file, "--team", "c,d")
    assert (code, out.strip()) == (0, "false")


def test_measure_width(example3_file, capsys):
    code, out, _ = run(capsys, "measure", "--game", example3_file, "--kind", "width")
    assert (code, out.strip()) == (0, "2")


def test_measure_none(example3_file, tmp_path, capsys):
    game = example3_game()
    from igt import InfluenceGame

    empty = InfluenceGame(game.graph, 0, game.players)
    path = tmp_path / "free.json"
    path.write_text(emit(GameDocument(empty)))
    code, out, _ = run(capsys, "measure", "--game", str(path), "--kind", "width")
    assert (code, out.strip()) == (0, "none")


def test_spread_and_trace(example3_file, capsys):
    code, out, _ = run(capsys, "spread", "--game", example3_file, "--team", "a")
    assert (code, out.strip()) == (0, "a,c,d")
    code, out, _ = run(capsys, "spread", "--game", example3_file, "--team", "a", "--trace")
    assert code == 0
    assert out.splitlines() == ["0: a", "1: a,c", "2: a,c,d"]


def test_power_single_and_all(example3_file, capsys):
    code, out, _ = run(capsys, "power", "--game", example3_file, "--player", "a")
    assert code == 0
    assert "banzhaf_value=4" in out and "banzhaf_index=1/2" in out and "shapley_value=12" in out
    code, out, _ = run(capsys, "power", "--game", example3_file, "--all")
    assert code == 0
    assert len(out.splitlines()) == 4
    code, out, _ = run(capsys, "power", "--game", example3_file, "--player", "a", "--decimal")
    assert "banzhaf_index=0.5" in out


def test_prop_subcommands(example3_file, capsys):
    assert run(capsys, "prop", "player", "--game", example3_file, "--player", "a", "--kind", "passer")[1].strip() == "true"
    assert run(capsys, "prop", "player", "--game", example3_file, "--player", "c", "--kind", "dummy")[1].strip() == "true"
    assert run(capsys, "prop", "pair", "--game", example3_file, "--players", "a,b")[1].strip() == "true"
    assert run(capsys, "prop", "team", "--game", example3_file, "--team", "a", "--kind", "critical:a")[1].strip() == "true"
    assert run(capsys, "prop", "team", "--game", example3_file, "--team", "a,b", "--kind", "swing")[1].strip() == "false"
    assert run(capsys, "prop", "team", "--game", example3_file, "--team", "c,d", "--kind", "blocking")[1].strip() == "false"
    assert run(capsys, "prop", "game", "--game", example3_file, "--kind", "proper")[1].strip() == "false"


def test_convert_weighted(tmp_path, capsys):
    weighted = tmp_path / "weighted.json"
    weighted.write_text(emit(GameDocument(WeightedGame(2, (1, 1, 1)))))
    code, out, _ = run(capsys, "convert", "--from", "weighted", "--to", "ig", "--game", str(weighted))
    assert code == 0
    body = json.loads(out)
    assert body["kind"] == "influence_game"
    assert body["payload"]["quota"] == 4
    code, out, _ = run(capsys, "convert", "--from", "weighted", "--to", "uig", "--game", str(weighted))
    assert json.loads(out)["payload"]["quota"] == 6


def test_convert_minimal_winning(tmp_path, capsys):
    explicit = tmp_path / "wm.json"
    explicit.write_text(emit(GameDocument(ExplicitGame.minimal(("a", "b"), [{"a"}]))))
    code, out, _ = run(capsys, "convert", "--from", "wm", "--to", "ig", "--game", str(explicit))
    assert code == 0
    assert json.loads(out)["payload"]["quota"] == 2


def test_combine_weighted_documents(tmp_path, capsys):
    first = tmp_path / "w1.json"
    second = tmp_path / "w2.json"
    first.write_text(emit(GameDocument(WeightedGame(2, (1, 1, 0)))))
    second.write_text(emit(GameDocument(WeightedGame(1, (0, 0, 1)))))
    code, out, _ = run(capsys, "combine", "--mode", "union", str(first), str(second))
    assert code == 0
    assert json.loads(out)["payload"]["quota"] == 5


def test_combine_kind_mismatch(tmp_path, example3_file, capsys):
    weighted = tmp_path / "w.json"
    weighted.write_text(emit(GameDocument(WeightedGame(1, (1,)))))
    code, _, err = run(capsys, "combine", "--mode", "union", example3_file, str(weighted))
    assert code == 2
    assert "same game kind" in err


def test_gamma(graph_file, capsys):
    code, out, _ = run(capsys, "gamma", "--graph", graph_file)
    assert code == 0
    body = json.loads(out)
    assert body["payload"]["quota"] == 3
    assert all(node["threshold"] == 2 for node in body["payload"]["nodes"])


def test_compare(example3_file, capsys):
    code, out, _ = run(capsys, "compare", "--kind", "equiv", example3_file, example3_file)
    assert (code, out.strip()) == (0, "true")
    code, out, _ = run(capsys, "compare", "--kind", "iso", example3_file, example3_file)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "true"
    assert lines[1].startswith("witness:")


def test_gen_commands(graph_file, sets_file, example3_file, capsys):
    code, out, _ = run(capsys, "gen", "setcover", "--instance", sets_file)
    assert code == 0
    body = json.loads(out)
    assert body["payload"]["quota"] == 6
    assert body["metadata"]["gadget"] == "setcover_length"
    code, out, _ = run(capsys, "gen", "delta1", "--instance", graph_file, "--k", "1")
    assert json.loads(out)["payload"]["quota"] == 3 + 3 + 4
    code, out, _ = run(capsys, "gen", "delta2", "--instance", graph_file, "--k", "1")
    assert json.loads(out)["payload"]["quota"] == 3 + 3 + 5
    code, out, _ = run(capsys, "gen", "delta3", "--instance", graph_file)
    assert code == 2  # odd vertex count is rejected
    code, out, _ = run(capsys, "gen", "halfvc", "--instance", graph_file, "--k", "1")
    assert json.loads(out)["kind"] == "graph"
    code, out, _ = run(capsys, "gen", "isopair", "--instance", graph_file, "--k", "1")
    pair = json.loads(out)
    assert isinstance(pair, list) and len(pair) == 2
    code, out, _ = run(capsys, "gen", "necessary", "--instance", example3_file)
    assert code == 0
    assert json.loads(out)["metadata"]["validation"].startswith("fails")
    code, _, err = run(capsys, "gen", "delta1", "--instance", graph_file)
    assert code == 2 and "--k" in err


def test_oracle_commands(graph_file, sets_file, capsys):
    assert run(capsys, "oracle", "--kind", "min_vertex_cover", "--instance", graph_file)[1].strip() == "2"
    assert run(capsys, "oracle", "--kind", "count_vertex_covers", "--instance", graph_file)[1].strip() == "4"
    assert run(capsys, "oracle", "--kind", "min_set_cover", "--instance", sets_file)[1].strip() == "2"


def test_classify_command(example3_file, capsys):
    assert run(capsys, "classify", "--game", example3_file)[1].strip() == "general"


def test_exit_code_2_on_bad_document(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{")
    code, _, err = run(capsys, "check", "--game", str(path), "--team", "a")
    assert code == 2
    assert "error:" in err


def test_exit_code_2_on_missing_file(capsys):
    code, _, err = run(capsys, "check", "--game", "/nonexistent.json", "--team", "a")
    assert code == 2


def test_exit_code_2_on_usage_error(capsys):
    assert main(["measure", "--kind", "width"]) == 2


def test_exit_code_3_on_cap(tmp_path, capsys):
    from igt import InfluenceGame, InfluenceGraph

    nodes = tuple((f"p{i}", 1) for i in range(22))
    game = InfluenceGame(InfluenceGraph(nodes), 1, frozenset(n for n, _ in nodes))
    path = tmp_path / "big.json"
    path.write_text(emit(GameDocument(game)))
    code, _, err = run(capsys, "measure", "--game", str(path), "--kind", "length")
    assert code == 3
    assert "cap" in err


def test_cap_flag_and_env(tmp_path, capsys, monkeypatch):
    from igt import InfluenceGame, InfluenceGraph

    nodes = tuple((f"p{i}", 1) for i in range(6))
    game = InfluenceGame(InfluenceGraph(nodes), 7, frozenset(n for n, _ in nodes))
    path = tmp_path / "six.json"
    path.write_text(emit(GameDocument(game)))
    code, _, _ = run(capsys, "--max-players", "5", "measure", "--game", str(path), "--kind", "length")
    assert code == 3
    monkeypatch.setenv("IGT_MAX_PLAYERS", "5")
    code, _, _ = run(capsys, "measure", "--game", str(path), "--kind", "length")
    assert code == 3
    monkeypatch.setenv("IGT_MAX_PLAYERS", "6")
    code, out, _ = run(capsys, "measure", "--game", str(path), "--kind", "length")
    assert (code, out.strip()) == (0, "none")


def test_methods_agree_on_special_fixture(tmp_path, capsys):
    from igt import vertex_cover_game, InfluenceGraph

    graph = InfluenceGraph.of(
        [("u", 0), ("v", 0), ("w", 0)], [("u", "v"), ("v", "w"), ("u", "w")], directed=False
    )
    path = tmp_path / "triangle.json"
    path.write_text(emit(GameDocument(vertex_cover_game(graph))))
    brute = run(capsys, "measure", "--game", str(path), "--kind", "width", "--method", "brute")
    special = run(capsys, "measure", "--game", str(path), "--kind", "width", "--method", "special")
    assert brute == special
    brute = run(capsys, "prop", "game", "--game", str(path), "--kind", "decisive", "--method", "brute")
    special = run(capsys, "prop", "game", "--game", str(path), "--kind", "decisive", "--method", "special")
    assert brute == special


def test_output_determinism(example3_file, capsys):
    first = run(capsys, "gen", "necessary", "--instance", example3_file)
    second = run(capsys, "gen", "necessary", "--instance", example3_file)
    assert first == second
