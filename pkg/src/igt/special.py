"""Polynomial algorithms for two extremal influence families.

Maximum influence sets every threshold to the vertex degree of an
undirected unit-weight graph, so a node activates only once all its
neighbours have; with quota ``|V|`` and everyone playing, successful teams
are exactly the vertex covers.  Minimum influence sets every threshold to
1, so one seed activates its whole connected component and games reduce to
subset-sum questions over component sizes.

Throughout, a vertex of degree 0 has threshold 0 under maximum influence
and therefore activates unconditionally; the algorithms here account for
that, which is what keeps them in exact agreement with brute-force
enumeration.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

from .errors import InputError
from .forms import WeightedGame
from .games import InfluenceGame
from .graphs import InfluenceGraph, NodeId


class FamilyTag(str, Enum):
    MAX_FULL_SPREAD = "max_influence_full_spread"
    MAX_INFLUENCE = "max_influence"
    MIN_INFLUENCE = "min_influence"
    GENERAL = "general"


class Component(NamedTuple):
    nodes: tuple[NodeId, ...]
    size: int
    player_count: int


@dataclass(frozen=True)
class ComponentProfile:
    """Connected components of an undirected game graph, with player counts."""

    components: tuple[Component, ...]

    @property
    def total_size(self) -> int:
        return sum(c.size for c in self.components)

    @property
    def isolated_count(self) -> int:
        return sum(1 for c in self.components if c.size == 1 and not _has_edge(c))

    def player_components(self) -> tuple[Component, ...]:
        return tuple(c for c in self.components if c.player_count > 0)


def _has_edge(component: Component) -> bool:
    # Simple graphs only: a component of size 1 never carries an edge.
    return component.size > 1


def _adjacency(graph: InfluenceGraph) -> dict[NodeId, list[NodeId]]:
    if graph.directed:
        raise InputError("component analysis needs an undirected graph")
    adjacency: dict[NodeId, list[NodeId]] = {node: [] for node in graph.node_ids}
    for tail, head, _ in graph.edges:
        adjacency[tail].append(head)
        adjacency[head].append(tail)
    return adjacency


def component_profile(game: InfluenceGame) -> ComponentProfile:
    adjacency = _adjacency(game.graph)
    seen: set[NodeId] = set()
    components = []
    for start in game.graph.node_ids:
        if start in seen:
            continue
        queue = deque([start])
        seen.add(start)
        members = []
        while queue:
            node = queue.popleft()
            members.append(node)
            for neighbour in adjacency[node]:
                if neighbour not in seen:
                    seen.add(neighbour)
                    queue.append(neighbour)
        members.sort()
        components.append(
            Component(tuple(members), len(members), sum(1 for m in members if m in game.players))
        )
    components.sort(key=lambda c: c.nodes[0])
    return ComponentProfile(tuple(components))


def is_max_influence(game: InfluenceGame) -> bool:
    """Undirected, unit weights, every threshold equal to the vertex degree."""
    graph = game.graph
    if graph.directed or not graph.is_unweighted():
        return False
    degree = {node: 0 for node in graph.node_ids}
    for tail, head, _ in graph.edges:
        degree[tail] += 1
        degree[head] += 1
    return all(threshold == degree[node] for node, threshold in graph.nodes)


def is_min_influence(game: InfluenceGame) -> bool:
    """Undirected, unit weights, every threshold equal to 1."""
    graph = game.graph
    if graph.directed or not graph.is_unweighted():
        return False
    return all(threshold == 1 for _, threshold in graph.nodes)


def classify(game: InfluenceGame) -> FamilyTag:
    """Most specific family tag for dispatching polynomial algorithms."""
    if is_max_influence(game):
        full = game.quota == game.graph.node_count and game.players == frozenset(game.graph.node_ids)
        return FamilyTag.MAX_FULL_SPREAD if full else FamilyTag.MAX_INFLUENCE
    if is_min_influence(game):
        return FamilyTag.MIN_INFLUENCE
    return FamilyTag.GENERAL


def _require(game: InfluenceGame, predicate, what: str) -> None:
    if not predicate(game):
        raise InputError(f"game is not in the {what} family")


def _require_full_spread(game: InfluenceGame) -> None:
    if classify(game) is not FamilyTag.MAX_FULL_SPREAD:
        raise InputError("game is not a full-spread maximum-influence game")


def _edges_pairwise_incident(edges: list[tuple[NodeId, NodeId]]) -> bool:
    """True when every two edges share a vertex (a star or a triangle)."""
    if len(edges) <= 1:
        return True
    a, b = edges[0]
    if all(a in edge for edge in edges):
        return True
    if all(b in edge for edge in edges):
        return True
    vertices = set()
    for edge in edges:
        vertices.update(edge)
    return len(vertices) == 3 and all(set(edge) <= vertices for edge in edges)


def _bipartite(adjacency: dict[NodeId, list[NodeId]], members: tuple[NodeId, ...]) -> bool:
    colour: dict[NodeId, bool] = {}
    for start in members:
        if start in colour:
            continue
        colour[start] = False
        queue = deque([start])
        while queue:
            node = queue.popleft()
            for neighbour in adjacency[node]:
                if neighbour not in colour:
                    colour[neighbour] = not colour[node]
                    queue.append(neighbour)
                elif colour[neighbour] == colour[node]:
                    return False
    return True


def max_game_property(game: InfluenceGame, kind: str) -> bool:
    """Proper / strong / decisive for full-spread maximum influence.

    Winners are the vertex covers, so two disjoint winners exist exactly
    when the whole graph is 2-colourable: proper means some component is
    not bipartite.  Two complementary losers exist exactly when two
    vertex-disjoint edges do (one uncovered by each side), so strong means
    all edges pairwise share a vertex, wherever they sit.  Decisive is the
    conjunction: one triangle component plus isolated vertices.
    """
    _require_full_spread(game)
    if kind not in ("proper", "strong", "decisive"):
        raise InputError(f"unknown game property {kind!r}")
    adjacency = _adjacency(game.graph)
    if kind in ("proper", "decisive"):
        proper = not _bipartite(adjacency, game.graph.node_ids)
        if kind == "proper":
            return proper
        if not proper:
            return False
    edges = [(tail, head) for tail, head, _ in game.graph.edges]
    return _edges_pairwise_incident(edges)


def max_width_full_spread(game: InfluenceGame) -> int | None:
    """Width of a full-spread maximum-influence game.

    Degree-0 vertices activate unconditionally, so an edgeless graph has no
    unsuccessful team at all.  With at least one edge, dropping both of its
    endpoints leaves that edge uncovered while any team of ``n - 1`` agents
    is a vertex cover, so the width is ``n - 2``.
    """
    _require_full_spread(game)
    if not game.graph.edges:
        return None
    return game.graph.node_count - 2


def _removable_sizes(sizes: list[int], alpha: int) -> bool:
    """Can exactly ``alpha`` vertices be deleted from components of the given
    sizes (each at least 2, sorted ascending) leaving no isolated vertex?

    Prefix case analysis: removing whole smallest components first, the
    remainder must either vanish, fit inside the next component leaving at
    least two connected vertices, or borrow one vertex from the largest
    component.  With all components of size 2 only even counts work.
    """
    total = sum(sizes)
    if alpha == 0:
        return True
    if alpha > total:
        return False
    if alpha == total:
        return True
    if sizes and sizes[-1] == 2:
        return alpha % 2 == 0
    taken = 0
    beta = 0
    while taken < len(sizes) and beta + sizes[taken] <= alpha:
        beta += sizes[taken]
        taken += 1
    if beta == alpha:
        return True
    remainder = alpha - beta
    if sizes[taken] > remainder + 1:
        return True
    # sizes[taken] == remainder + 1: feasible only by also trimming a later component.
    return taken + 1 < len(sizes)


def can_remove_without_isolating(graph: InfluenceGraph, alpha: int) -> bool:
    """Whether some ``alpha``-vertex deletion leaves no isolated vertex."""
    if alpha < 0:
        raise InputError("alpha must be non-negative")
    adjacency = _adjacency(graph)
    if any(not neighbours for neighbours in adjacency.values()):
        raise InputError("graph must not contain isolated vertices")
    game = InfluenceGame(graph, 0, frozenset())
    sizes = sorted(c.size for c in component_profile(game).components)
    return _removable_sizes(sizes, alpha)


def max_width(game: InfluenceGame) -> int | None:
    """Width of a maximum-influence game at any quota (players = all agents).

    A largest unsuccessful team can be taken closed under activation, so it
    contains every degree-0 vertex and its removal leaves no isolated
    vertex among the rest.  Width is therefore the isolated count plus the
    largest feasible deletion from the edged part within the quota budget;
    no unsuccessful team exists once the isolated vertices alone meet the
    quota.
    """
    _require(game, is_max_influence, "maximum-influence")
    if game.players != frozenset(game.graph.node_ids):
        raise InputError("width for maximum influence needs every agent to be a player")
    n = game.graph.node_count
    quota = game.quota
    if quota > n:
        return n
    profile = component_profile(game)
    isolated = profile.isolated_count
    if isolated >= quota:
        return None
    sizes = sorted(c.size for c in profile.components if c.size >= 2)
    budget = min(quota - 1 - isolated, sum(sizes))
    for alpha in range(budget, -1, -1):
        if _removable_sizes(sizes, alpha):
            return isolated + alpha
    return isolated


def min_measure(game: InfluenceGame, kind: str) -> int | None:
    """Length or width of a minimum-influence game.

    One seed activates its whole component, so the smallest successful team
    greedily takes one player from each largest player-reachable component;
    the largest unsuccessful team packs whole player sets of components
    into a knapsack of capacity ``quota - 1`` (weights component sizes,
    values player counts).
    """
    _require(game, is_min_influence, "minimum-influence")
    if kind not in ("length", "width"):
        raise InputError(f"unknown minimum-influence measure {kind!r}")
    reachable = component_profile(game).player_components()
    quota = game.quota
    if kind == "length":
        if quota == 0:
            return 0
        covered = 0
        for count, component in enumerate(
            sorted(reachable, key=lambda c: (-c.size, c.nodes[0])), start=1
        ):
            covered += component.size
            if covered >= quota:
                return count
        return None
    if quota == 0:
        return None
    capacity = quota - 1
    best = [0] * (capacity + 1)
    for component in reachable:
        if component.size > capacity:
            continue
        for room in range(capacity, component.size - 1, -1):
            candidate = best[room - component.size] + component.player_count
            if candidate > best[room]:
                best[room] = candidate
    return best[capacity]


def _achievable_sums(sizes: list[int], cap: int) -> int:
    """Bitset of subset sums of ``sizes`` restricted to 0..cap."""
    mask = (1 << (cap + 1)) - 1
    bits = 1
    for size in sizes:
        bits = (bits | (bits << size)) & mask
    return bits


def min_game_property(game: InfluenceGame, kind: str) -> bool:
    """Proper / strong / decisive for minimum influence via subset sums.

    Components never touched by a player are invisible to every spread and
    are ignored.  Strong fails exactly when some whole-component split
    leaves both sides under the quota; proper fails when both sides of a
    split can reach it, splitting every multi-player component both ways.
    """
    _require(game, is_min_influence, "minimum-influence")
    if kind not in ("proper", "strong", "decisive"):
        raise InputError(f"unknown game property {kind!r}")
    if kind == "decisive":
        return min_game_property(game, "proper") and min_game_property(game, "strong")
    reachable = component_profile(game).player_components()
    quota = game.quota
    if kind == "strong":
        if quota == 0:
            return True
        total = sum(c.size for c in reachable)
        bits = _achievable_sums([c.size for c in reachable], quota - 1)
        alpha_max = bits.bit_length() - 1
        return total - alpha_max >= quota
    # proper
    split_total = sum(c.size for c in reachable if c.player_count > 1)
    if split_total >= quota:
        return False
    residual_quota = quota - split_total
    solo_sizes = [c.size for c in reachable if c.player_count == 1]
    solo_total = sum(solo_sizes)
    bits = _achievable_sums(solo_sizes, solo_total)
    alpha_min = next((s for s in range(residual_quota, solo_total + 1) if bits >> s & 1), None)
    if alpha_min is None:
        return True
    return solo_total - alpha_min < residual_quota


def min_reduced_weighted(game: InfluenceGame) -> WeightedGame:
    """Weighted game with one player per player-reachable component.

    Weights are component sizes; minimal successful teams of the influence
    game map many-to-one onto this game's minimal winning coalitions (pick
    any single player inside each chosen component).  The quota is clamped
    to total weight + 1, which leaves the winning family unchanged.
    """
    _require(game, is_min_influence, "minimum-influence")
    reachable = sorted(
        component_profile(game).player_components(), key=lambda c: (-c.size, c.nodes[0])
    )
    weights = tuple(c.size for c in reachable)
    quota = min(game.quota, sum(weights) + 1)
    return WeightedGame(quota, weights)
