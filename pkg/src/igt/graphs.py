"""Influence graphs and the deterministic threshold spread process.

An influence graph is a simple weighted graph (directed or undirected, no
loops, no parallel edges) whose nodes carry non-negative integer activation
thresholds and whose edges carry positive integer weights.  Starting from a
seed set X, a node v activates as soon as the total weight of edges from
already-active in-neighbours reaches its threshold; the process iterates to a
fixed point F(X).

A node with threshold 0 activates on the first step even from an empty seed
set: the empty in-weight sum is 0, which meets the threshold.  This follows
the activation rule literally and is relied on elsewhere in the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, NamedTuple

from .errors import InputError

NodeId = str


@dataclass(frozen=True)
class InfluenceGraph:
    """Immutable node-labelled weighted graph without loops.

    ``nodes`` is a tuple of ``(id, threshold)`` pairs in declaration order;
    ``edges`` is a tuple of ``(tail, head, weight)`` triples.  When
    ``directed`` is false each edge stands for both arcs with the same
    weight.
    """

    nodes: tuple[tuple[NodeId, int], ...]
    edges: tuple[tuple[NodeId, NodeId, int], ...] = ()
    directed: bool = True

    def __post_init__(self) -> None:
        seen: set[NodeId] = set()
        for entry in self.nodes:
            if len(entry) != 2:
                raise InputError(f"node entry {entry!r} is not an (id, threshold) pair")
            node, threshold = entry
            if not isinstance(node, str):
                raise InputError(f"node id {node!r} is not a string")
            if node in seen:
                raise InputError(f"duplicate node id {node!r}")
            seen.add(node)
            if not isinstance(threshold, int) or isinstance(threshold, bool) or threshold < 0:
                raise InputError(f"threshold of {node!r} must be a non-negative integer")
        pairs: set[tuple[NodeId, NodeId]] = set()
        for entry in self.edges:
            if len(entry) != 3:
                raise InputError(f"edge entry {entry!r} is not a (from, to, weight) triple")
            tail, head, weight = entry
            for endpoint in (tail, head):
                if endpoint not in seen:
                    raise InputError(f"edge endpoint {endpoint!r} is not a declared node")
            if tail == head:
                raise InputError(f"self-loop forbidden on node {tail!r}")
            if not isinstance(weight, int) or isinstance(weight, bool) or weight < 1:
                raise InputError(f"edge weight on ({tail!r}, {head!r}) must be a positive integer")
            key = (tail, head) if self.directed else (min(tail, head), max(tail, head))
            if key in pairs:
                raise InputError(f"parallel edge between {tail!r} and {head!r}")
            pairs.add(key)

    @classmethod
    def of(
        cls,
        nodes: Iterable[tuple[NodeId, int]],
        edges: Iterable[tuple] = (),
        directed: bool = True,
    ) -> "InfluenceGraph":
        """Build a graph from iterables; two-element edges default to weight 1."""
        normalized = []
        for edge in edges:
            edge = tuple(edge)
            if len(edge) == 2:
                edge = (edge[0], edge[1], 1)
            normalized.append(edge)
        return cls(tuple(tuple(n) for n in nodes), tuple(normalized), directed)

    @property
    def node_ids(self) -> tuple[NodeId, ...]:
        return tuple(node for node, _ in self.nodes)

    @property
    def node_count(self) -> int:
        return len(self.nodes)

    def threshold(self, node: NodeId) -> int:
        return _engine(self).thr[_engine(self).index[node]]

    def has_node(self, node: NodeId) -> bool:
        return node in _engine(self).index

    def is_unweighted(self) -> bool:
        return all(weight == 1 for _, _, weight in self.edges)

    def degree(self, node: NodeId) -> int:
        """Number of incident edges; only meaningful for undirected graphs."""
        if self.directed:
            raise InputError("degree is defined for undirected graphs only")
        if not self.has_node(node):
            raise InputError(f"unknown node id {node!r}")
        return sum(1 for tail, head, _ in self.edges if node in (tail, head))

    def directed_expansion(self) -> "InfluenceGraph":
        """The directed graph with both arcs per undirected edge."""
        if self.directed:
            return self
        arcs = []
        for tail, head, weight in self.edges:
            arcs.append((tail, head, weight))
            arcs.append((head, tail, weight))
        return InfluenceGraph(self.nodes, tuple(arcs), directed=True)


@dataclass(frozen=True)
class ActivationTrace:
    """Per-step activation sets of a spread run.

    ``steps[0]`` is the seed set, ``steps[-1]`` the fixed point; each stored
    step strictly extends the previous one, so the list has at most
    ``node_count + 1`` entries.
    """

    steps: tuple[frozenset[NodeId], ...]

    @property
    def converged_at(self) -> int:
        return len(self.steps) - 1

    @property
    def final(self) -> frozenset[NodeId]:
        return self.steps[-1]


class _Engine(NamedTuple):
    ids: tuple[NodeId, ...]
    index: dict[NodeId, int]
    thr: tuple[int, ...]
    out: tuple[tuple[tuple[int, int], ...], ...]
    zero: tuple[int, ...]


@lru_cache(maxsize=512)
def _engine(graph: InfluenceGraph) -> _Engine:
    ids = graph.node_ids
    index = {node: i for i, node in enumerate(ids)}
    thr = tuple(threshold for _, threshold in graph.nodes)
    out: list[list[tuple[int, int]]] = [[] for _ in ids]
    for tail, head, weight in graph.edges:
        out[index[tail]].append((index[head], weight))
        if not graph.directed:
            out[index[head]].append((index[tail], weight))
    zero = tuple(i for i, t in enumerate(thr) if t == 0)
    return _Engine(ids, index, thr, tuple(tuple(a) for a in out), zero)


def _seed_indices(engine: _Engine, team: Iterable[NodeId]) -> list[int]:
    seeds = []
    seen = set()
    for node in team:
        if node not in engine.index:
            raise InputError(f"unknown node id {node!r}")
        i = engine.index[node]
        if i not in seen:
            seen.add(i)
            seeds.append(i)
    return seeds


def _spread_indices(engine: _Engine, seeds: list[int]) -> bytearray:
    """Fixed point of the activation rule over node indices (worklist order)."""
    thr = engine.thr
    out = engine.out
    active = bytearray(len(thr))
    acc = [0] * len(thr)
    stack = list(seeds)
    for i in stack:
        active[i] = 1
    for i in engine.zero:
        if not active[i]:
            active[i] = 1
            stack.append(i)
    while stack:
        u = stack.pop()
        for v, w in out[u]:
            if not active[v]:
                acc[v] += w
                if acc[v] >= thr[v]:
                    active[v] = 1
                    stack.append(v)
    return active


def spread(graph: InfluenceGraph, team: Iterable[NodeId]) -> frozenset[NodeId]:
    """The set F(X) of nodes eventually activated by seeding ``team``."""
    engine = _engine(graph)
    active = _spread_indices(engine, _seed_indices(engine, team))
    return frozenset(engine.ids[i] for i in range(len(active)) if active[i])


def spread_trace(graph: InfluenceGraph, team: Iterable[NodeId]) -> ActivationTrace:
    """Synchronised-round activation history ending at the fixed point."""
    engine = _engine(graph)
    thr, out = engine.thr, engine.out
    seeds = _seed_indices(engine, team)
    active = bytearray(len(thr))
    acc = [0] * len(thr)
    for i in seeds:
        active[i] = 1
    steps = [frozenset(engine.ids[i] for i in seeds)]
    frontier = list(seeds)
    first_round = True
    while True:
        newly: set[int] = set()
        for u in frontier:
            for v, w in out[u]:
                if not active[v]:
                    acc[v] += w
                    if acc[v] >= thr[v]:
                        newly.add(v)
        if first_round:
            newly.update(i for i in engine.zero if not active[i])
            first_round = False
        if not newly:
            break
        for v in newly:
            active[v] = 1
        steps.append(steps[-1] | frozenset(engine.ids[v] for v in newly))
        frontier = list(newly)
    return ActivationTrace(tuple(steps))
