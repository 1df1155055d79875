"""Influence games and the constructions that realise other game forms.

An influence game couples an influence graph with a quota and a player
subset: a team of players succeeds when its spread activates at least
``quota`` agents.  This module also builds influence games that reproduce
explicit minimal-winning games, weighted games (one weighted and one
unweighted construction), unions/intersections of two influence or two
weighted games, and the vertex-cover game of an undirected graph.

Constructed node ids are deterministic, so every construction is a pure,
byte-reproducible function of its input.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InputError, ResourceLimitError, SelfCheckError
from .forms import ExplicitGame, WeightedGame, explicit_measure
from .graphs import InfluenceGraph, NodeId, _engine, spread

DEFAULT_MAX_PLAYERS = 20
DEFAULT_COMBINE_VALIDATE_CAP = 12
DEFAULT_NODE_BUDGET = 200_000


@dataclass(frozen=True)
class InfluenceGame:
    """An influence graph with an activation quota and a player subset."""

    graph: InfluenceGraph
    quota: int
    players: frozenset[NodeId]

    def __post_init__(self) -> None:
        object.__setattr__(self, "players", frozenset(self.players))
        known = set(self.graph.node_ids)
        unknown = self.players - known
        if unknown:
            raise InputError(f"player {sorted(unknown)[0]!r} is not a node of the graph")
        n = self.graph.node_count
        if not isinstance(self.quota, int) or isinstance(self.quota, bool):
            raise InputError("quota must be an integer")
        if not 0 <= self.quota <= n + 1:
            raise InputError(f"quota {self.quota} out of range 0..{n + 1}")

    @property
    def player_count(self) -> int:
        return len(self.players)

    def sorted_players(self) -> tuple[NodeId, ...]:
        return tuple(sorted(self.players))


def is_successful(game: InfluenceGame, team: Iterable[NodeId]) -> bool:
    """True when the team's spread reaches the quota.

    Only players may be seeded; any other agent in ``team`` is an error.
    """
    team = frozenset(team)
    outside = team - game.players
    if outside:
        raise InputError(f"{sorted(outside)[0]!r} is not a player of this game")
    return len(spread(game.graph, team)) >= game.quota


def _check_cap(n: int, cap: int | None, what: str) -> None:
    cap = DEFAULT_MAX_PLAYERS if cap is None else cap
    if n > cap:
        raise ResourceLimitError(f"{what} over {n} players exceeds the cap of {cap}")


def winning_masks(game: InfluenceGame, max_players: int | None = None) -> tuple[tuple[NodeId, ...], int]:
    """Exhaustive success table over all player subsets.

    Returns the sorted player tuple and an integer whose bit ``m`` is set
    when the team encoded by bitmask ``m`` (bit ``i`` = player ``i`` in the
    sorted order) is successful.  Exponential; guarded by the cap.
    """
    players = game.sorted_players()
    n = len(players)
    _check_cap(n, max_players, "enumeration")
    engine = _engine(game.graph)
    quota = game.quota
    size = len(engine.thr)
    if quota == 0:
        return players, (1 << (1 << n)) - 1
    pidx = [engine.index[p] for p in players]
    thr = list(engine.thr)
    out = [list(adj) for adj in engine.out]
    zero = list(engine.zero)
    active = bytearray(size)
    acc = [0] * size
    bits = 0
    for mask in range(1 << n):
        touched = []
        stack = []
        for b in range(n):
            if mask >> b & 1:
                i = pidx[b]
                active[i] = 1
                touched.append(i)
                stack.append(i)
        for i in zero:
            if not active[i]:
                active[i] = 1
                touched.append(i)
                stack.append(i)
        count = len(stack)
        while stack and count < quota:
            u = stack.pop()
            for v, w in out[u]:
                if not active[v]:
                    acc[v] += w
                    touched.append(v)
                    if acc[v] >= thr[v]:
                        active[v] = 1
                        count += 1
                        stack.append(v)
        if count >= quota:
            bits |= 1 << mask
        for i in touched:
            active[i] = 0
            acc[i] = 0
    return players, bits


def to_explicit(game: InfluenceGame, max_players: int | None = None) -> ExplicitGame:
    """Expand an influence game into its full winning family."""
    players, bits = winning_masks(game, max_players)
    n = len(players)
    family = []
    for mask in range(1 << n):
        if bits >> mask & 1:
            family.append(frozenset(players[b] for b in range(n) if mask >> b & 1))
    return ExplicitGame(tuple(players), frozenset(family), "winning")


def _fresh(reserved: set[str], names: Iterable[str]) -> str:
    """Shortest '+' prefix making every generated name avoid ``reserved``."""
    names = list(names)
    prefix = ""
    while any(prefix + name in reserved for name in names):
        prefix += "+"
    return prefix


def from_minimal_winning(game: ExplicitGame) -> InfluenceGame:
    """Unweighted influence game with the same winners as an explicit game.

    Player nodes carry threshold 1.  Each minimal winning coalition X gets
    ``slength - |X|`` auxiliary nodes of threshold ``|X|`` fed by X's player
    nodes, and the quota is the strict length, so a team activates quota
    many agents exactly when it contains a minimal winning coalition.
    Degenerate games map to bare player nodes with quota ``n + 1`` (no
    winners) or quota 0 (every team wins).
    """
    minimal = game.minimal_family()
    players = game.players
    n = len(players)
    player_nodes = [(p, 1) for p in players]
    if not minimal:
        graph = InfluenceGraph(tuple(player_nodes), (), directed=True)
        return InfluenceGame(graph, n + 1, frozenset(players))
    if frozenset() in minimal:
        graph = InfluenceGraph(tuple(player_nodes), (), directed=True)
        return InfluenceGame(graph, 0, frozenset(players))
    slength = explicit_measure(ExplicitGame(players, minimal, "minimal_winning"), "slength")
    assert slength is not None
    ordered = sorted(minimal, key=lambda s: (len(s), sorted(s)))
    gadget_names = []
    for coalition in ordered:
        label = ",".join(sorted(coalition))
        gadget_names.extend(f"gadget:{label}:{j}" for j in range(slength - len(coalition)))
    prefix = _fresh(set(players), gadget_names)
    nodes = list(player_nodes)
    edges = []
    for coalition in ordered:
        label = ",".join(sorted(coalition))
        for j in range(slength - len(coalition)):
            name = f"{prefix}gadget:{label}:{j}"
            nodes.append((name, len(coalition)))
            for member in sorted(coalition):
                edges.append((member, name, 1))
    graph = InfluenceGraph(tuple(nodes), tuple(edges), directed=True)
    return InfluenceGame(graph, slength, frozenset(players))


def _player_ids(count: int, player_ids: Sequence[NodeId] | None) -> tuple[NodeId, ...]:
    if player_ids is None:
        return tuple(f"p:{i}" for i in range(1, count + 1))
    ids = tuple(player_ids)
    if len(ids) != count or len(set(ids)) != count:
        raise InputError(f"need {count} distinct player ids")
    return ids


def from_weighted(game: WeightedGame, player_ids: Sequence[NodeId] | None = None) -> InfluenceGame:
    """Weighted influence game realising a weighted game.

    One hub node with threshold ``quota`` collects a weighted arc from every
    player; the hub feeds ``n`` sink nodes, and the quota is ``n + 1``, so a
    team succeeds exactly when its total weight reaches the quota.
    """
    n = game.player_count
    ids = _player_ids(n, player_ids)
    internal = ["hub"] + [f"sink:{k}" for k in range(1, n + 1)]
    prefix = _fresh(set(ids), internal)
    hub = f"{prefix}hub"
    nodes = [(p, 1) for p in ids] + [(hub, game.quota)]
    edges = []
    for i, p in enumerate(ids):
        if game.weights[i] >= 1:
            edges.append((p, hub, game.weights[i]))
    for k in range(1, n + 1):
        sink = f"{prefix}sink:{k}"
        nodes.append((sink, 1))
        edges.append((hub, sink, 1))
    graph = InfluenceGraph(tuple(nodes), tuple(edges), directed=True)
    return InfluenceGame(graph, n + 1, frozenset(ids))


def from_weighted_unweighted(
    game: WeightedGame,
    player_ids: Sequence[NodeId] | None = None,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> InfluenceGame:
    """Unweighted influence game realising a weighted game.

    Player i feeds ``w_i`` unit nodes which feed a hub of threshold
    ``quota``; the hub feeds ``n + total`` sinks and the quota is
    ``n + total``.  Pseudo-polynomial: the graph grows with the total
    weight.  Quotas above the total weight are rejected because the grand
    coalition would then spuriously meet the agent quota.
    """
    n = game.player_count
    total = game.total_weight
    if game.quota > total:
        raise InputError(f"quota {game.quota} exceeds total weight {total}; construction unsound")
    node_count = 2 * n + 2 * total + 1
    if node_count > node_budget:
        raise ResourceLimitError(f"construction needs {node_count} nodes, over the budget of {node_budget}")
    ids = _player_ids(n, player_ids)
    internal = ["hub"]
    for i in range(1, n + 1):
        internal.extend(f"w:{i}:{j}" for j in range(1, game.weights[i - 1] + 1))
    internal.extend(f"sink:{k}" for k in range(1, n + total + 1))
    prefix = _fresh(set(ids), internal)
    hub = f"{prefix}hub"
    nodes = [(p, 1) for p in ids]
    edges = []
    for i, p in enumerate(ids, start=1):
        for j in range(1, game.weights[i - 1] + 1):
            unit = f"{prefix}w:{i}:{j}"
            nodes.append((unit, 1))
            edges.append((p, unit, 1))
            edges.append((unit, hub, 1))
    nodes.append((hub, game.quota))
    for k in range(1, n + total + 1):
        sink = f"{prefix}sink:{k}"
        nodes.append((sink, 1))
        edges.append((hub, sink, 1))
    graph = InfluenceGraph(tuple(nodes), tuple(edges), directed=True)
    return InfluenceGame(graph, n + total, frozenset(ids))


def _unrolled(game: InfluenceGame, tag: str, prefix: str) -> tuple[list, list, list[str], dict[NodeId, str]]:
    """Layered copy of a game's spread process, one layer per activation step.

    Column 0 copies the agent set with threshold 1; each later step
    contributes a threshold-preserving column (new activations) and a
    threshold-1 column (accumulated set).  The activated part of the last
    column equals the game's spread of whatever subset of column 0 is
    activated.
    """
    arcs = game.graph.directed_expansion().edges
    agents = game.graph.node_ids
    n = len(agents)
    thresholds = dict(game.graph.nodes)
    nodes = [(f"{prefix}{tag}:0:{v}", 1) for v in agents]
    edges = []
    previous = {v: f"{prefix}{tag}:0:{v}" for v in agents}
    for layer in range(1, n + 1):
        for v in agents:
            nodes.append((f"{prefix}{tag}:f{layer}:{v}", thresholds[v]))
        for tail, head, weight in arcs:
            edges.append((previous[tail], f"{prefix}{tag}:f{layer}:{head}", weight))
        for v in agents:
            name = f"{prefix}{tag}:F{layer}:{v}"
            nodes.append((name, 1))
            edges.append((previous[v], name, 1))
            edges.append((f"{prefix}{tag}:f{layer}:{v}", name, 1))
        previous = {v: f"{prefix}{tag}:F{layer}:{v}" for v in agents}
    entry = {v: f"{prefix}{tag}:0:{v}" for v in agents}
    return nodes, edges, [previous[v] for v in agents], entry


def combine(
    g1: InfluenceGame,
    g2: InfluenceGame,
    mode: str,
    validate: bool = True,
    validate_cap: int = DEFAULT_COMBINE_VALIDATE_CAP,
) -> InfluenceGame:
    """Influence game whose winners are the union or intersection of two games.

    Both input spread processes are unrolled into layered copies feeding one
    threshold-``q`` collector each; a gate node (threshold 1 for union, 2
    for intersection) opens a sink block sized so that the quota is
    reachable exactly when the gate fires.  The output is checked against
    the definitional combination on all teams when the player set is small
    (and on a deterministic sample otherwise); a mismatch raises
    :class:`SelfCheckError`.
    """
    if g1.players != g2.players:
        raise InputError("player sets differ")
    if mode not in ("union", "intersection"):
        raise InputError(f"unknown combine mode {mode!r}")
    players = sorted(g1.players)
    u1 = (2 * g1.graph.node_count + 1) * g1.graph.node_count
    u2 = (2 * g2.graph.node_count + 1) * g2.graph.node_count
    sink_count = len(players) + u1 + u2 + 2
    internal = []
    for tag, g in (("cmb1", g1), ("cmb2", g2)):
        for v in g.graph.node_ids:
            internal.append(f"{tag}:0:{v}")
            for layer in range(1, g.graph.node_count + 1):
                internal.append(f"{tag}:f{layer}:{v}")
                internal.append(f"{tag}:F{layer}:{v}")
    internal += ["quota:1", "quota:2", "gate"] + [f"sink:{k}" for k in range(1, sink_count + 1)]
    prefix = _fresh(set(players), internal)

    nodes = [(p, 1) for p in players]
    edges = []
    nodes1, edges1, last1, entry1 = _unrolled(g1, "cmb1", prefix)
    nodes2, edges2, last2, entry2 = _unrolled(g2, "cmb2", prefix)
    nodes += nodes1 + nodes2
    edges += edges1 + edges2
    for p in players:
        edges.append((p, entry1[p], 1))
        edges.append((p, entry2[p], 1))
    quota1, quota2, gate = f"{prefix}quota:1", f"{prefix}quota:2", f"{prefix}gate"
    nodes.append((quota1, g1.quota))
    nodes.append((quota2, g2.quota))
    edges.extend((name, quota1, 1) for name in last1)
    edges.extend((name, quota2, 1) for name in last2)
    nodes.append((gate, 1 if mode == "union" else 2))
    edges.append((quota1, gate, 1))
    edges.append((quota2, gate, 1))
    for k in range(1, sink_count + 1):
        sink = f"{prefix}sink:{k}"
        nodes.append((sink, 1))
        edges.append((gate, sink, 1))
    graph = InfluenceGraph(tuple(nodes), tuple(edges), directed=True)
    combined = InfluenceGame(graph, sink_count, frozenset(players))

    if validate:
        n = len(players)
        if n <= validate_cap:
            teams = [frozenset(t) for size in range(n + 1) for t in itertools.combinations(players, size)]
        else:
            rng = random.Random(0)
            teams = [frozenset(p for p in players if rng.random() < 0.5) for _ in range(50)]
        for team in teams:
            inputs = (is_successful(g1, team), is_successful(g2, team))
            expected = any(inputs) if mode == "union" else all(inputs)
            if is_successful(combined, team) != expected:
                raise SelfCheckError(f"combined game disagrees with the {mode} of its inputs on team {sorted(team)!r}")
    return combined


def combine_weighted(
    w1: WeightedGame,
    w2: WeightedGame,
    mode: str,
    player_ids: Sequence[NodeId] | None = None,
) -> InfluenceGame:
    """Influence game for the union or intersection of two weighted games.

    Each player feeds both quota collectors with its weight in the
    respective game; a gate (threshold 1 for union, 2 for intersection)
    opens ``n`` sinks.  Quota ``n + 2`` (union) or ``n + 3`` (intersection).
    """
    if w1.player_count != w2.player_count:
        raise InputError("player counts differ")
    if mode not in ("union", "intersection"):
        raise InputError(f"unknown combine mode {mode!r}")
    n = w1.player_count
    ids = _player_ids(n, player_ids)
    internal = ["quota:1", "quota:2", "gate"] + [f"sink:{k}" for k in range(1, n + 1)]
    prefix = _fresh(set(ids), internal)
    quota1, quota2, gate = f"{prefix}quota:1", f"{prefix}quota:2", f"{prefix}gate"
    nodes = [(p, 1) for p in ids]
    nodes.append((quota1, w1.quota))
    nodes.append((quota2, w2.quota))
    nodes.append((gate, 1 if mode == "union" else 2))
    edges = []
    for i, p in enumerate(ids):
        if w1.weights[i] >= 1:
            edges.append((p, quota1, w1.weights[i]))
        if w2.weights[i] >= 1:
            edges.append((p, quota2, w2.weights[i]))
    edges.append((quota1, gate, 1))
    edges.append((quota2, gate, 1))
    for k in range(1, n + 1):
        sink = f"{prefix}sink:{k}"
        nodes.append((sink, 1))
        edges.append((gate, sink, 1))
    graph = InfluenceGraph(tuple(nodes), tuple(edges), directed=True)
    return InfluenceGame(graph, n + 2 if mode == "union" else n + 3, frozenset(ids))


def vertex_cover_game(graph: InfluenceGraph) -> InfluenceGame:
    """Game on an undirected graph whose successful teams are its vertex covers.

    Thresholds are set to vertex degrees, the quota to the number of nodes,
    and every node is a player: a team activates everyone exactly when no
    edge is left uncovered.
    """
    if graph.directed:
        raise InputError("vertex cover games need an undirected graph")
    if not graph.is_unweighted():
        raise InputError("vertex cover games need a unit-weight graph")
    degree = {node: 0 for node in graph.node_ids}
    for tail, head, _ in graph.edges:
        degree[tail] += 1
        degree[head] += 1
    nodes = tuple((node, degree[node]) for node in graph.node_ids)
    relabeled = InfluenceGraph(nodes, graph.edges, directed=False)
    return InfluenceGame(relabeled, graph.node_count, frozenset(graph.node_ids))


def relabel(game: InfluenceGame, mapping: dict[NodeId, NodeId]) -> InfluenceGame:
    """Rename nodes (identity for ids absent from ``mapping``)."""
    def rename(node: NodeId) -> NodeId:
        return mapping.get(node, node)

    new_ids = [rename(node) for node in game.graph.node_ids]
    if len(set(new_ids)) != len(new_ids):
        raise InputError("relabelling is not injective")
    nodes = tuple((rename(node), threshold) for node, threshold in game.graph.nodes)
    edges = tuple((rename(tail), rename(head), weight) for tail, head, weight in game.graph.edges)
    graph = InfluenceGraph(nodes, edges, game.graph.directed)
    return InfluenceGame(graph, game.quota, frozenset(rename(p) for p in game.players))
