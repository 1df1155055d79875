from __future__ import annotations

import itertools
import random

import pytest

from igt import (
    InfluenceGame,
    InputError,
    ResourceLimitError,
    equivalent,
    is_successful,
    isomorphic,
    power,
    vertex_cover_game,
)
from igt.reductions import (
    count_vertex_covers,
    gen_delta1,
    gen_delta2,
    gen_delta3,
    gen_half_vc_graph,
    gen_iso_pair,
    gen_necessary_player,
    gen_setcover_length_game,
    gen_setpacking_width_game,
    max_independent_set,
    max_set_packing,
    min_set_cover,
    min_vertex_cover,
    oracle,
    verify_relation,
)

from conftest import example3_game, random_plain_graph, subsets, undirected

K3 = (("u", "v", "w"), (("u", "v"), ("v", "w"), ("u", "w")))
P2 = (("u", "v"), (("u", "v"),))
C5 = (tuple("abcde"), (("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("a", "e")))


def test_oracle_classics():
    assert min_vertex_cover(*K3) == 2
    assert count_vertex_covers(*K3) == 4
    assert max_independent_set(*C5) == 2
    assert min_set_cover(3, [{1, 2}, {2, 3}]) == 2
    assert min_set_cover(3, [{1, 2, 3}]) == 1
    assert min_set_cover(2, [{1}]) is None
    assert max_set_packing(2, [{1}, {2}, {1, 2}]) == 2
    assert max_set_packing(1, [{1}, {1}]) == 1


def test_oracle_dispatch_and_cap():
    assert oracle("min_vertex_cover", *K3) == 2
    with pytest.raises(InputError):
        oracle("nonsense", *K3)
    big = tuple(f"v{i}" for i in range(25))
    with pytest.raises(ResourceLimitError):
        min_vertex_cover(big, ())


def test_oracle_input_validation():
    with pytest.raises(InputError):
        min_vertex_cover(("a",), (("a", "a"),))
    with pytest.raises(InputError):
        min_set_cover(0, [{1}])
    with pytest.raises(InputError):
        min_set_cover(2, [])
    with pytest.raises(InputError):
        min_set_cover(2, [{3}])


def test_setcover_gadget_examples():
    assert verify_relation(gen_setcover_length_game([{1, 2}, {2, 3}], 3))
    assert verify_relation(gen_setcover_length_game([{1, 2, 3}], 3))
    # no cover exists: the game must have no successful team at all
    instance = gen_setcover_length_game([{1}], 2)
    assert verify_relation(instance)
    assert not any(is_successful(instance.game, t) for t in subsets(instance.game.players))


def test_setpacking_gadget_examples():
    assert verify_relation(gen_setpacking_width_game([{1}, {2}, {1, 2}], 2))
    assert verify_relation(gen_setpacking_width_game([{1, 2}], 2))
    assert verify_relation(gen_setpacking_width_game([{1}, {1}], 1))


def test_set_gadgets_random():
    rng = random.Random(41)
    for _ in range(40):
        universe = rng.randint(1, 5)
        sets = [
            frozenset(e for e in range(1, universe + 1) if rng.random() < 0.5)
            for _ in range(rng.randint(1, 5))
        ]
        assert verify_relation(gen_setcover_length_game(sets, universe))
        assert verify_relation(gen_setpacking_width_game(sets, universe))


def test_delta1_spec_teams():
    game = gen_delta1(*K3, 1).game
    assert not is_successful(game, {"v:u", "z"})
    assert is_successful(game, {"v:u", "v:v", "z"})
    # grand coalition with k = |V|: the cover route is the only open one
    grand = gen_delta1(*K3, 3).game
    assert is_successful(grand, grand.players)


def test_delta1_characterisation_random():
    rng = random.Random(42)
    for _ in range(30):
        vertices, edges = random_plain_graph(rng, rng.randint(1, 5), rng.uniform(0.2, 0.8))
        k = rng.randint(0, len(vertices))
        assert verify_relation(gen_delta1(vertices, edges, k)), (edges, k)


def test_delta2_examples():
    assert verify_relation(gen_delta2(*K3, 1))
    assert verify_relation(gen_delta2(*P2, 1))
    game = gen_delta2(*P2, 1).game
    # a cover of size 1 exists, so z and t are distinguishable
    from igt import are_symmetric

    assert not are_symmetric(game, "z", "t")


def test_delta2_random():
    rng = random.Random(43)
    for _ in range(25):
        vertices, edges = random_plain_graph(rng, rng.randint(1, 5), rng.uniform(0.2, 0.8))
        k = rng.randint(0, len(vertices))
        assert verify_relation(gen_delta2(vertices, edges, k)), (edges, k)


def test_delta3_examples():
    k4 = (tuple("1234"), tuple((a, b) for a, b in itertools.combinations("1234", 2)))
    assert verify_relation(gen_delta3(*k4))
    from igt import game_property

    assert game_property(gen_delta3(*k4).game, "strong", method="brute")
    two_edges = (tuple("abcd"), (("a", "b"), ("c", "d")))
    assert verify_relation(gen_delta3(*two_edges))
    assert not game_property(gen_delta3(*two_edges).game, "strong", method="brute")
    with pytest.raises(InputError):
        gen_delta3(("a", "b", "c"), ())


def test_delta3_random():
    rng = random.Random(44)
    for _ in range(25):
        n = rng.choice((2, 4, 6))
        vertices, edges = random_plain_graph(rng, n, rng.uniform(0.2, 0.8))
        assert verify_relation(gen_delta3(vertices, edges)), edges


def test_half_vc_examples():
    assert verify_relation(gen_half_vc_graph(*K3, 2))
    assert verify_relation(gen_half_vc_graph(*K3, 1))
    lone = (("a",), ())
    assert verify_relation(gen_half_vc_graph(*lone, 0))
    ghat = gen_half_vc_graph(*K3, 1).graph
    assert len(ghat[0]) == 2 * 3 + 1


def test_half_vc_random():
    rng = random.Random(45)
    for _ in range(30):
        vertices, edges = random_plain_graph(rng, rng.randint(1, 6), rng.uniform(0.2, 0.8))
        k = rng.randint(0, len(vertices))
        assert verify_relation(gen_half_vc_graph(vertices, edges, k)), (edges, k)


def test_necessary_player_validation_reports():
    flawed = gen_necessary_player(example3_game())
    assert flawed.provenance["validation"].startswith("fails")
    assert verify_relation(flawed)
    # a game with no successful team keeps the collector silent, so the
    # intended relation does hold there
    empty = InfluenceGame(example3_game().graph, 5, example3_game().players)
    clean = gen_necessary_player(empty)
    assert clean.provenance["validation"] == "holds"
    assert verify_relation(clean)
    assert not any(is_successful(clean.game, t) for t in subsets(clean.game.players))


def test_necessary_player_winning_direction_always_sound():
    rng = random.Random(46)
    from conftest import random_influence_game

    for _ in range(25):
        base = random_influence_game(rng, max_players=4, max_extra=1)
        instance = gen_necessary_player(base)
        x = instance.source["x"]
        for team in subsets(base.players):
            if is_successful(base, team):
                assert is_successful(instance.game, team | {x})
        assert verify_relation(instance)


def test_iso_pair_examples():
    g1, g2 = gen_iso_pair(*K3, 1)
    assert equivalent(g1, g2)
    assert isomorphic(g1, g2, max_players=4).isomorphic
    g1, g2 = gen_iso_pair(*P2, 1)
    assert not equivalent(g1, g2)
    # k = |V|: the whole vertex set is always a cover, so never equivalent
    g1, g2 = gen_iso_pair(*K3, 3)
    assert not equivalent(g1, g2)


def test_iso_pair_random():
    rng = random.Random(47)
    for _ in range(20):
        vertices, edges = random_plain_graph(rng, rng.randint(1, 4), rng.uniform(0.2, 0.8))
        k = rng.randint(0, len(vertices))
        g1, g2 = gen_iso_pair(vertices, edges, k)
        expected = min_vertex_cover(vertices, edges) > k
        assert equivalent(g1, g2) == expected, (edges, k)


def test_banzhaf_counts_vertex_covers():
    rng = random.Random(48)
    for _ in range(25):
        vertices, edges = random_plain_graph(rng, rng.randint(1, 6), rng.uniform(0.2, 0.7))
        hub = "hub"
        extended_vertices = vertices + (hub,)
        extended_edges = tuple(edges) + tuple((v, hub) for v in vertices)
        game = vertex_cover_game(
            undirected([(v, 0) for v in extended_vertices], extended_edges)
        )
        eta = power(game, hub).banzhaf_value
        assert eta == count_vertex_covers(vertices, edges) - 1


def test_generation_is_deterministic():
    first = gen_delta2(*K3, 1)
    second = gen_delta2(*K3, 1)
    assert first.game == second.game
    assert first.provenance == second.provenance
    a0, b0 = gen_iso_pair(*K3, 2)
    a1, b1 = gen_iso_pair(*K3, 2)
    assert (a0, b0) == (a1, b1)


def test_quota_values_follow_definitions():
    vertices, edges = K3
    n, m = len(vertices), len(edges)
    assert gen_delta1(*K3, 1).game.quota == m + n + 4
    assert gen_delta2(*K3, 1).game.quota == m + n + 5
    assert gen_delta3((v := tuple("abcd")), ()).game.quota == len(v) + 0 + 5
    instance = gen_setcover_length_game([{1, 2}, {2, 3}], 3)
    assert instance.game.quota == 2 + 3 + 1
    packing = gen_setpacking_width_game([{1, 2}, {2, 3}], 3)
    assert packing.game.quota == 2 + 1
