from __future__ import annotations

import itertools
import random

import pytest

from igt import ExplicitGame, InfluenceGame, InfluenceGraph, WeightedGame, is_successful


def fig1_graph() -> InfluenceGraph:
    return InfluenceGraph.of(
        [("a", 1), ("b", 1), ("c", 1), ("d", 2)],
        [("a", "c"), ("a", "d"), ("b", "a"), ("b", "d"), ("c", "d")],
    )


def example3_game() -> InfluenceGame:
    return InfluenceGame(fig1_graph(), 3, frozenset("abcd"))


@pytest.fixture
def fig1():
    return fig1_graph()


@pytest.fixture
def example3():
    return example3_game()


def subsets(items):
    items = sorted(items)
    for size in range(len(items) + 1):
        yield from (frozenset(c) for c in itertools.combinations(items, size))


def winning_family(game: InfluenceGame) -> frozenset[frozenset[str]]:
    """Definition-level enumeration: test every team with the success rule."""
    return frozenset(team for team in subsets(game.players) if is_successful(game, team))


def undirected(nodes, edges) -> InfluenceGraph:
    return InfluenceGraph.of(nodes, edges, directed=False)


def random_plain_graph(rng: random.Random, n: int, p: float = 0.4):
    """Raw (vertices, edges) pair for oracle-style inputs."""
    vertices = tuple(f"n{i}" for i in range(n))
    edges = tuple(
        (vertices[i], vertices[j])
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < p
    )
    return vertices, edges


def random_influence_game(
    rng: random.Random,
    max_players: int = 5,
    max_extra: int = 2,
    directed: bool = True,
    max_weight: int = 2,
) -> InfluenceGame:
    n_players = rng.randint(1, max_players)
    n_extra = rng.randint(0, max_extra)
    total = n_players + n_extra
    ids = [f"n{i}" for i in range(total)]
    nodes = [(v, rng.randint(0, 3)) for v in ids]
    edges = []
    for i in range(total):
        for j in range(total):
            if i != j and rng.random() < 0.35:
                if directed:
                    edges.append((ids[i], ids[j], rng.randint(1, max_weight)))
                elif i < j:
                    edges.append((ids[i], ids[j], rng.randint(1, max_weight)))
    graph = InfluenceGraph.of(nodes, edges, directed=directed)
    quota = rng.randint(0, total + 1)
    return InfluenceGame(graph, quota, frozenset(ids[:n_players]))


def random_min_influence_game(rng: random.Random, max_nodes: int = 9) -> InfluenceGame:
    n = rng.randint(1, max_nodes)
    vertices, edges = random_plain_graph(rng, n, rng.uniform(0.1, 0.5))
    graph = undirected([(v, 1) for v in vertices], edges)
    players = frozenset(v for v in vertices if rng.random() < 0.7)
    quota = rng.randint(0, n + 1)
    return InfluenceGame(graph, quota, players)


def random_max_influence_game(rng: random.Random, max_nodes: int = 9, full_spread: bool = False) -> InfluenceGame:
    from igt import vertex_cover_game

    n = rng.randint(1, max_nodes)
    vertices, edges = random_plain_graph(rng, n, rng.uniform(0.1, 0.5))
    game = vertex_cover_game(undirected([(v, 0) for v in vertices], edges))
    if full_spread:
        return game
    return InfluenceGame(game.graph, rng.randint(0, n), game.players)


def random_antichain(rng: random.Random, players: tuple[str, ...]) -> ExplicitGame:
    from igt import minimize_family

    n = len(players)
    count = rng.randint(0, 2 ** max(n - 1, 1))
    family = []
    for _ in range(count):
        member = frozenset(p for p in players if rng.random() < 0.5)
        family.append(member)
    return ExplicitGame.minimal(players, minimize_family(family))


def random_weighted_game(rng: random.Random, max_players: int = 10, max_weight: int = 8) -> WeightedGame:
    n = rng.randint(1, max_players)
    weights = tuple(rng.randint(0, max_weight) for _ in range(n))
    quota = rng.randint(0, sum(weights))
    return WeightedGame(quota, weights)
