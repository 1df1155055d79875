"""Hardness-gadget generators and the brute-force oracles that check them.

Each generator turns a source instance (a set system or an undirected
graph) into an influence game whose analysis answers a classical
combinatorial question about the source: minimum set cover as the game's
length, maximum set packing as its width, small vertex covers as player
symmetry or game equivalence, large independent sets as failure of
strongness.  ``verify_relation`` replays the claimed link using the
analysis routines on one side and the oracles on the other.

The oracles are deliberately self-contained bitmask searches sharing no
code with the spread engine, so agreement between the two sides is
meaningful evidence.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import analysis
from .errors import InputError, ResourceLimitError
from .forms import WeightedGame
from .games import InfluenceGame, from_weighted_unweighted, is_successful, _fresh
from .graphs import InfluenceGraph

ORACLE_CAP = 20

PlainGraph = tuple[tuple[str, ...], tuple[tuple[str, str], ...]]


@dataclass
class GadgetInstance:
    """A generated game (or graph) plus the claim linking it to its source."""

    relation: str
    source: dict
    provenance: dict[str, str]
    game: InfluenceGame | None = None
    graph: PlainGraph | None = None


# ---------------------------------------------------------------------------
# Independent exhaustive oracles (no shared code with the game engine).
# ---------------------------------------------------------------------------


def _normalize_graph(vertices: Sequence[str], edges: Iterable[tuple[str, str]]) -> PlainGraph:
    vertices = tuple(vertices)
    if len(set(vertices)) != len(vertices):
        raise InputError("duplicate vertex id")
    known = set(vertices)
    seen = set()
    normalized = []
    for u, v in edges:
        if u not in known or v not in known:
            raise InputError(f"edge ({u!r}, {v!r}) mentions an unknown vertex")
        if u == v:
            raise InputError(f"self-loop forbidden on {u!r}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise InputError(f"parallel edge between {u!r} and {v!r}")
        seen.add(key)
        normalized.append(key)
    return vertices, tuple(normalized)


def _oracle_cap(count: int) -> None:
    if count > ORACLE_CAP:
        raise ResourceLimitError(f"oracle instance of size {count} exceeds the cap of {ORACLE_CAP}")


def min_vertex_cover(vertices: Sequence[str], edges: Iterable[tuple[str, str]]) -> int:
    vertices, edges = _normalize_graph(vertices, edges)
    _oracle_cap(len(vertices))
    index = {v: i for i, v in enumerate(vertices)}
    edge_masks = [(1 << index[u]) | (1 << index[v]) for u, v in edges]
    for size in range(len(vertices) + 1):
        for combo in itertools.combinations(range(len(vertices)), size):
            mask = 0
            for i in combo:
                mask |= 1 << i
            if all(mask & em for em in edge_masks):
                return size
    return len(vertices)


def count_vertex_covers(vertices: Sequence[str], edges: Iterable[tuple[str, str]]) -> int:
    vertices, edges = _normalize_graph(vertices, edges)
    _oracle_cap(len(vertices))
    index = {v: i for i, v in enumerate(vertices)}
    edge_masks = [(1 << index[u]) | (1 << index[v]) for u, v in edges]
    count = 0
    for mask in range(1 << len(vertices)):
        if all(mask & em for em in edge_masks):
            count += 1
    return count


def max_independent_set(vertices: Sequence[str], edges: Iterable[tuple[str, str]]) -> int:
    vertices, edges = _normalize_graph(vertices, edges)
    _oracle_cap(len(vertices))
    index = {v: i for i, v in enumerate(vertices)}
    edge_masks = [(1 << index[u]) | (1 << index[v]) for u, v in edges]
    best = 0
    for mask in range(1 << len(vertices)):
        if all((mask & em) != em for em in edge_masks):
            best = max(best, mask.bit_count())
    return best


def _normalize_sets(universe_size: int, sets: Sequence[Iterable[int]]) -> list[frozenset[int]]:
    if universe_size < 1:
        raise InputError("universe must contain at least one element")
    if not sets:
        raise InputError("the set collection must be non-empty")
    normalized = []
    for members in sets:
        members = frozenset(members)
        for element in members:
            if not isinstance(element, int) or not 1 <= element <= universe_size:
                raise InputError(f"element {element!r} outside universe 1..{universe_size}")
        normalized.append(members)
    return normalized


def min_set_cover(universe_size: int, sets: Sequence[Iterable[int]]) -> int | None:
    """Size of a smallest cover of 1..universe_size, or None if no cover exists."""
    members = _normalize_sets(universe_size, sets)
    _oracle_cap(max(universe_size, len(members)))
    full = frozenset(range(1, universe_size + 1))
    for size in range(len(members) + 1):
        for combo in itertools.combinations(members, size):
            union: frozenset[int] = frozenset().union(*combo) if combo else frozenset()
            if union == full:
                return size
    return None


def max_set_packing(universe_size: int, sets: Sequence[Iterable[int]]) -> int:
    """Largest number of pairwise disjoint member sets."""
    members = _normalize_sets(universe_size, sets)
    _oracle_cap(len(members))
    best = 0
    for mask in range(1 << len(members)):
        chosen = [members[i] for i in range(len(members)) if mask >> i & 1]
        union: set[int] = set()
        disjoint = True
        for group in chosen:
            if union & group:
                disjoint = False
                break
            union |= group
        if disjoint:
            best = max(best, len(chosen))
    return best


ORACLE_KINDS = {
    "min_vertex_cover": min_vertex_cover,
    "count_vertex_covers": count_vertex_covers,
    "max_independent_set": max_independent_set,
    "min_set_cover": min_set_cover,
    "max_set_packing": max_set_packing,
}


def oracle(kind: str, *instance) -> int | None:
    if kind not in ORACLE_KINDS:
        raise InputError(f"unknown oracle kind {kind!r}")
    return ORACLE_KINDS[kind](*instance)


# ---------------------------------------------------------------------------
# Gadget generators.
# ---------------------------------------------------------------------------


def _set_provenance(gadget: str, universe_size: int, sets: list[frozenset[int]], **extra: str) -> dict[str, str]:
    rendered = ";".join(",".join(str(e) for e in sorted(s)) for s in sets)
    data = {"gadget": gadget, "universe": str(universe_size), "sets": rendered}
    data.update(extra)
    return data


def _graph_provenance(gadget: str, graph: PlainGraph, **extra: str) -> dict[str, str]:
    vertices, edges = graph
    data = {
        "gadget": gadget,
        "vertices": ",".join(vertices),
        "edges": ";".join(f"{u},{v}" for u, v in edges),
    }
    data.update(extra)
    return data


def gen_setcover_length_game(sets: Sequence[Iterable[int]], universe_size: int) -> GadgetInstance:
    """Game whose length is the minimum set cover size of the source.

    Set players feed element nodes; a collector with threshold equal to the
    universe size fires only under full coverage and opens enough padding
    to lift exactly the covering teams over the quota.
    """
    members = _normalize_sets(universe_size, sets)
    m, n = len(members), universe_size
    nodes = [(f"y:{j}", n + 1) for j in range(1, m + 1)]
    nodes += [(f"t:{i}", 1) for i in range(1, n + 1)]
    nodes.append(("x", n))
    nodes += [(f"z:{k}", 1) for k in range(1, m + 2)]
    edges = []
    for j, group in enumerate(members, start=1):
        for element in sorted(group):
            edges.append((f"y:{j}", f"t:{element}", 1))
    for i in range(1, n + 1):
        edges.append((f"t:{i}", "x", 1))
    for k in range(1, m + 2):
        edges.append(("x", f"z:{k}", 1))
    graph = InfluenceGraph(tuple(nodes), tuple(edges), directed=False)
    game = InfluenceGame(graph, m + n + 1, frozenset(f"y:{j}" for j in range(1, m + 1)))
    return GadgetInstance(
        relation="length_equals_min_set_cover",
        source={"universe_size": universe_size, "sets": members},
        provenance=_set_provenance("setcover_length", universe_size, members),
        game=game,
    )


def gen_setpacking_width_game(sets: Sequence[Iterable[int]], universe_size: int) -> GadgetInstance:
    """Game whose width is the maximum set packing size of the source.

    Element nodes need two active owners to fire, so a team stays
    unsuccessful exactly while its sets are pairwise disjoint.
    """
    members = _normalize_sets(universe_size, sets)
    m, n = len(members), universe_size
    nodes = [(f"y:{j}", n + 1) for j in range(1, m + 1)]
    nodes += [(f"t:{i}", 2) for i in range(1, n + 1)]
    nodes += [(f"z:{k}", 1) for k in range(1, m + 2)]
    edges = []
    for j, group in enumerate(members, start=1):
        for element in sorted(group):
            edges.append((f"y:{j}", f"t:{element}", 1))
    for i in range(1, n + 1):
        for k in range(1, m + 2):
            edges.append((f"t:{i}", f"z:{k}", 1))
    graph = InfluenceGraph(tuple(nodes), tuple(edges), directed=False)
    game = InfluenceGame(graph, m + 1, frozenset(f"y:{j}" for j in range(1, m + 1)))
    return GadgetInstance(
        relation="width_equals_max_set_packing",
        source={"universe_size": universe_size, "sets": members},
        provenance=_set_provenance("setpacking_width", universe_size, members),
        game=game,
    )


def _delta_base(graph: PlainGraph, k: int) -> tuple[list, list, int, int]:
    """Shared node/edge scaffolding of the vertex-cover gadgets."""
    vertices, edges = graph
    n, m = len(vertices), len(edges)
    if not 0 <= k <= n:
        raise InputError(f"k={k} out of range 0..{n}")
    alpha = m + n + 4
    nodes = [(f"v:{u}", m + 2) for u in vertices]
    nodes += [(_edge_name(u, v), 1) for u, v in edges]
    nodes += [("x", k + 1), ("y", m + 1), ("z", 2)]
    nodes += [(f"s:{l}", 1) for l in range(1, alpha + 1)]
    arcs = []
    for u, v in edges:
        name = _edge_name(u, v)
        arcs.append((name, f"v:{u}", 1))
        arcs.append((name, f"v:{v}", 1))
        arcs.append((name, "y", 1))
    for u in vertices:
        arcs.append((f"v:{u}", "x", 1))
    for l in range(1, alpha + 1):
        arcs.append(("x", f"s:{l}", 1))
        arcs.append(("y", f"s:{l}", 1))
    arcs.append(("z", "y", 1))
    return nodes, arcs, alpha, m


def _edge_name(u: str, v: str) -> str:
    a, b = sorted((u, v))
    return f"e:{a},{b}"


def gen_delta1(vertices: Sequence[str], edges: Iterable[tuple[str, str]], k: int) -> GadgetInstance:
    """Vertex-cover gadget: a team succeeds iff it has more than k graph
    players, or contains the helper player z on top of a vertex cover."""
    graph = _normalize_graph(vertices, edges)
    nodes, arcs, alpha, _ = _delta_base(graph, k)
    influence = InfluenceGraph(tuple(nodes), tuple(arcs), directed=False)
    players = frozenset(f"v:{u}" for u in graph[0]) | {"z"}
    game = InfluenceGame(influence, alpha, players)
    return GadgetInstance(
        relation="delta1_success_characterisation",
        source={"graph": graph, "k": k},
        provenance=_graph_provenance("delta1", graph, k=str(k)),
        game=game,
    )


def gen_delta2(vertices: Sequence[str], edges: Iterable[tuple[str, str]], k: int) -> GadgetInstance:
    """Symmetry gadget: players z and t are symmetric iff the source graph
    has no vertex cover of size k or less."""
    graph = _normalize_graph(vertices, edges)
    nodes, arcs, alpha, _ = _delta_base(graph, k)
    nodes += [("t", 2), ("s", 4)]
    arcs += [("x", "s", 1), ("y", "s", 1), ("t", "s", 1)]
    influence = InfluenceGraph(tuple(nodes), tuple(arcs), directed=False)
    players = frozenset(f"v:{u}" for u in graph[0]) | {"z", "t"}
    game = InfluenceGame(influence, alpha + 1, players)
    return GadgetInstance(
        relation="delta2_symmetry_iff_no_small_cover",
        source={"graph": graph, "k": k},
        provenance=_graph_provenance("delta2", graph, k=str(k)),
        game=game,
    )


def gen_delta3(vertices: Sequence[str], edges: Iterable[tuple[str, str]]) -> GadgetInstance:
    """Strongness gadget: the game is strong iff the source graph (even
    vertex count) has no independent set of half the vertices or more."""
    graph = _normalize_graph(vertices, edges)
    vertices_t, edges_t = graph
    n, m = len(vertices_t), len(edges_t)
    if n % 2 != 0:
        raise InputError("the half-independent-set gadget needs an even number of vertices")
    k = n // 2
    alpha = m + n + 4
    nodes = [(f"v:{u}", m + 2) for u in vertices_t]
    nodes += [(_edge_name(u, v), 2) for u, v in edges_t]
    nodes += [("x", k + 1), ("y", 1), ("z", 1), ("t", 2)]
    nodes += [(f"s:{l}", 1) for l in range(1, alpha + 1)]
    arcs = []
    for u, v in edges_t:
        name = _edge_name(u, v)
        arcs.append((name, f"v:{u}", 1))
        arcs.append((name, f"v:{v}", 1))
        arcs.append((name, "y", 1))
    for u in vertices_t:
        arcs.append((f"v:{u}", "x", 1))
    arcs.append(("z", "t", 1))
    arcs.append(("y", "t", 1))
    for l in range(1, alpha + 1):
        arcs.append(("x", f"s:{l}", 1))
        arcs.append(("t", f"s:{l}", 1))
    influence = InfluenceGraph(tuple(nodes), tuple(arcs), directed=False)
    players = frozenset(f"v:{u}" for u in vertices_t) | {"z"}
    game = InfluenceGame(influence, n + m + 5, players)
    return GadgetInstance(
        relation="delta3_strong_iff_no_half_independent_set",
        source={"graph": graph},
        provenance=_graph_provenance("delta3", graph),
        game=game,
    )


def gen_half_vc_graph(vertices: Sequence[str], edges: Iterable[tuple[str, str]], k: int) -> GadgetInstance:
    """Graph with 2n+1 vertices that has a vertex cover of size n iff the
    source graph has one of size k: a clique block, an independent block,
    and a universal vertex force the padding into every small cover."""
    graph = _normalize_graph(vertices, edges)
    source_vertices, source_edges = graph
    n = len(source_vertices)
    if not 0 <= k <= n:
        raise InputError(f"k={k} out of range 0..{n}")
    clique = [f"x:{i}" for i in range(1, max(n - k - 1, 0) + 1)]
    independent = [f"y:{i}" for i in range(1, k + 2)]
    hub = "w"
    out_vertices = [f"v:{u}" for u in source_vertices] + clique + independent + [hub]
    out_edges = [(f"v:{u}", f"v:{v}") for u, v in source_edges]
    out_edges += [(a, b) for a, b in itertools.combinations(clique, 2)]
    out_edges += [(a, b) for a in clique for b in independent]
    out_edges += [(hub, other) for other in out_vertices if other != hub]
    return GadgetInstance(
        relation="half_cover_iff_source_cover",
        source={"graph": graph, "k": k},
        provenance=_graph_provenance("half_vertex_cover", graph, k=str(k)),
        graph=(tuple(out_vertices), tuple(out_edges)),
    )


def gen_necessary_player(game: InfluenceGame, validate_cap: int = 10) -> GadgetInstance:
    """Extend a game with a player x meant to be necessary for every win.

    New nodes: x (a player), a collector y with threshold quota+1 fed by x
    and every original agent, and 2n unit sinks fed by y; the new quota is
    2n.  Built exactly as designed; the intended winning family is
    ``{S + x : S wins the input}``, but a team whose own spread exceeds the
    old quota can open y without x, so the construction is validated by
    enumeration (when small) and the outcome is recorded in
    ``provenance['validation']`` rather than assumed.
    """
    base = game.graph.directed_expansion()
    n = base.node_count
    reserved = set(base.node_ids)
    names = ["nec:x", "nec:y"] + [f"nec:a:{l}" for l in range(1, 2 * n + 1)]
    prefix = _fresh(reserved, names)
    x, y = f"{prefix}nec:x", f"{prefix}nec:y"
    nodes = list(base.nodes) + [(x, 1), (y, game.quota + 1)]
    edges = list(base.edges)
    edges.append((x, y, 1))
    for agent in base.node_ids:
        edges.append((agent, y, 1))
    for l in range(1, 2 * n + 1):
        sink = f"{prefix}nec:a:{l}"
        nodes.append((sink, 1))
        edges.append((y, sink, 1))
    graph = InfluenceGraph(tuple(nodes), tuple(edges), directed=True)
    extended = InfluenceGame(graph, 2 * n, game.players | {x})

    if extended.player_count <= validate_cap:
        verdict = "holds"
        base_players = sorted(game.players)
        for size in range(len(base_players) + 1):
            for team in itertools.combinations(base_players, size):
                wins_base = is_successful(game, team)
                if is_successful(extended, team + (x,)) != wins_base:
                    verdict = f"fails: team {list(team) + [x]!r} disagrees with the input game"
                    break
                if is_successful(extended, team):
                    verdict = f"fails: team {list(team)!r} wins without {x!r}"
                    break
            if verdict != "holds":
                break
    else:
        verdict = "skipped: too many players to enumerate"

    return GadgetInstance(
        relation="winners_are_input_winners_plus_x",
        source={"game": game, "x": x},
        provenance={"gadget": "necessary_player", "validation": verdict, "x": x},
        game=extended,
    )


def gen_iso_pair(
    vertices: Sequence[str], edges: Iterable[tuple[str, str]], k: int
) -> tuple[InfluenceGame, InfluenceGame]:
    """Two games that are equivalent (and isomorphic) iff the source graph
    has no vertex cover of size k or less.

    The first is the vertex-cover gadget; the second realises the weighted
    game "more than k graph players win, z is powerless" as an unweighted
    influence game over the same player ids.
    """
    first = gen_delta1(vertices, edges, k).game
    assert first is not None
    graph = _normalize_graph(vertices, edges)
    ids = tuple(f"v:{u}" for u in graph[0]) + ("z",)
    n = len(graph[0])
    if k == n:
        # Quota beyond the total weight: no winners; padded realisation.
        nodes = tuple((p, 1) for p in ids)
        empty = InfluenceGame(InfluenceGraph(nodes, (), directed=True), len(ids) + 1, frozenset(ids))
        return first, empty
    weighted = WeightedGame(k + 1, (1,) * n + (0,))
    return first, from_weighted_unweighted(weighted, player_ids=ids)


# ---------------------------------------------------------------------------
# Relation verification.
# ---------------------------------------------------------------------------


def _covers(edges: Iterable[tuple[str, str]], chosen: set[str]) -> bool:
    return all(u in chosen or v in chosen for u, v in edges)


def verify_relation(instance: GadgetInstance, max_players: int | None = None) -> bool:
    """Check the generator's claim with analysis on one side, oracles on the other."""
    relation = instance.relation
    if relation == "length_equals_min_set_cover":
        assert instance.game is not None
        expected = min_set_cover(instance.source["universe_size"], instance.source["sets"])
        actual = analysis.measure(instance.game, "length", method="brute", max_players=max_players)
        return actual == expected
    if relation == "width_equals_max_set_packing":
        assert instance.game is not None
        expected = max_set_packing(instance.source["universe_size"], instance.source["sets"])
        actual = analysis.measure(instance.game, "width", method="brute", max_players=max_players)
        return actual == expected
    if relation == "delta1_success_characterisation":
        assert instance.game is not None
        vertices, edges = instance.source["graph"]
        k = instance.source["k"]
        game = instance.game
        graph_players = sorted(f"v:{u}" for u in vertices)
        for size in range(len(graph_players) + 1):
            for combo in itertools.combinations(graph_players, size):
                chosen = {name[2:] for name in combo}
                for with_z in (False, True):
                    team = frozenset(combo) | ({"z"} if with_z else frozenset())
                    expected = size >= k + 1 or (with_z and _covers(edges, chosen))
                    if is_successful(game, team) != expected:
                        return False
        return True
    if relation == "delta2_symmetry_iff_no_small_cover":
        assert instance.game is not None
        vertices, edges = instance.source["graph"]
        k = instance.source["k"]
        expected = min_vertex_cover(vertices, edges) > k
        return analysis.are_symmetric(instance.game, "z", "t", max_players=max_players) == expected
    if relation == "delta3_strong_iff_no_half_independent_set":
        assert instance.game is not None
        vertices, edges = instance.source["graph"]
        expected = max_independent_set(vertices, edges) < len(vertices) // 2
        return analysis.game_property(instance.game, "strong", method="brute", max_players=max_players) == expected
    if relation == "half_cover_iff_source_cover":
        assert instance.graph is not None
        vertices, edges = instance.source["graph"]
        k = instance.source["k"]
        target = min_vertex_cover(*instance.graph) <= len(vertices)
        return target == (min_vertex_cover(vertices, edges) <= k)
    if relation == "winners_are_input_winners_plus_x":
        assert instance.game is not None
        base: InfluenceGame = instance.source["game"]
        x = instance.source["x"]
        recorded = instance.provenance["validation"]
        if recorded.startswith("skipped"):
            return True
        holds = True
        base_players = sorted(base.players)
        for size in range(len(base_players) + 1):
            for team in itertools.combinations(base_players, size):
                wins_base = is_successful(base, team)
                if is_successful(instance.game, team + (x,)) != wins_base or is_successful(instance.game, team):
                    holds = False
                    break
            if not holds:
                break
        return holds == (recorded == "holds")
    raise InputError(f"unknown relation {relation!r}")
