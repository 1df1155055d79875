"""Explicit and weighted representations of monotonic coalition games.

An explicit game lists either the full winning family or the antichain of
minimal winning coalitions; a weighted game is a quota plus integer player
weights.  Both answer "does this coalition win?".  The four size measures
(length, width, strict length, strict width) are computed exactly from the
minimal winning family.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Literal, Union

from .errors import InputError, ResourceLimitError

PlayerId = str
Coalition = frozenset
FamilyKind = Literal["winning", "minimal_winning"]

MEASURE_KINDS = ("length", "width", "slength", "swidth")


def _freeze_family(family: Iterable[Iterable[PlayerId]]) -> frozenset[Coalition]:
    return frozenset(frozenset(member) for member in family)


def minimize_family(family: Iterable[Iterable[PlayerId]]) -> frozenset[Coalition]:
    """Inclusion-minimal members of a set family (antichain normalisation)."""
    sets = sorted(_freeze_family(family), key=len)
    minimal: list[Coalition] = []
    for candidate in sets:
        if not any(kept <= candidate for kept in minimal):
            minimal.append(candidate)
    return frozenset(minimal)


def winning_closure(players: Iterable[PlayerId], minimal: Iterable[Iterable[PlayerId]]) -> frozenset[Coalition]:
    """All subsets of ``players`` containing some member of ``minimal``.

    Exponential in the number of players; intended for small cross-checks.
    """
    players = tuple(players)
    minimal = _freeze_family(minimal)
    winners = []
    for size in range(len(players) + 1):
        for combo in itertools.combinations(players, size):
            coalition = frozenset(combo)
            if any(member <= coalition for member in minimal):
                winners.append(coalition)
    return frozenset(winners)


@dataclass(frozen=True)
class ExplicitGame:
    """A coalition game given by its winning or minimal-winning family."""

    players: tuple[PlayerId, ...]
    family: frozenset[Coalition]
    family_kind: FamilyKind

    def __post_init__(self) -> None:
        if len(set(self.players)) != len(self.players):
            raise InputError("duplicate player id")
        universe = set(self.players)
        for member in self.family:
            if not member <= universe:
                raise InputError(f"coalition {sorted(member)!r} mentions unknown players")
        if self.family_kind == "minimal_winning":
            members = sorted(self.family, key=len)
            for i, small in enumerate(members):
                for big in members[i + 1:]:
                    if small < big:
                        raise InputError(
                            "minimal-winning family is not an antichain: "
                            f"{sorted(small)!r} is contained in {sorted(big)!r}"
                        )
        elif self.family_kind == "winning":
            for member in self.family:
                for player in universe - member:
                    if member | {player} not in self.family:
                        raise InputError(
                            f"winning family is not monotonic: {sorted(member)!r} wins "
                            f"but {sorted(member | {player})!r} does not"
                        )
        else:
            raise InputError(f"unknown family kind {self.family_kind!r}")

    @classmethod
    def winning(cls, players: Iterable[PlayerId], family: Iterable[Iterable[PlayerId]]) -> "ExplicitGame":
        return cls(tuple(players), _freeze_family(family), "winning")

    @classmethod
    def minimal(cls, players: Iterable[PlayerId], family: Iterable[Iterable[PlayerId]]) -> "ExplicitGame":
        return cls(tuple(players), _freeze_family(family), "minimal_winning")

    def is_winning(self, coalition: Iterable[PlayerId]) -> bool:
        coalition = frozenset(coalition)
        unknown = coalition - set(self.players)
        if unknown:
            raise InputError(f"unknown player id {sorted(unknown)[0]!r}")
        if self.family_kind == "winning":
            return coalition in self.family
        return any(member <= coalition for member in self.family)

    def minimal_family(self) -> frozenset[Coalition]:
        if self.family_kind == "minimal_winning":
            return self.family
        return minimize_family(self.family)


@dataclass(frozen=True)
class WeightedGame:
    """Quota game: a coalition wins when its total weight reaches the quota.

    Players are positional, numbered 1..n.  Quota and weights are
    non-negative integers with quota at most total weight + 1.
    """

    quota: int
    weights: tuple[int, ...]

    def __post_init__(self) -> None:
        for w in self.weights:
            if not isinstance(w, int) or isinstance(w, bool) or w < 0:
                raise InputError(f"weight {w!r} must be a non-negative integer")
        total = sum(self.weights)
        if not isinstance(self.quota, int) or isinstance(self.quota, bool):
            raise InputError("quota must be an integer")
        if not 0 <= self.quota <= total + 1:
            raise InputError(f"quota {self.quota} out of range 0..{total + 1}")

    @property
    def player_count(self) -> int:
        return len(self.weights)

    @property
    def players(self) -> tuple[int, ...]:
        return tuple(range(1, len(self.weights) + 1))

    @property
    def total_weight(self) -> int:
        return sum(self.weights)

    def is_winning(self, coalition: Iterable[int]) -> bool:
        members = set(coalition)
        for i in members:
            if not isinstance(i, int) or not 1 <= i <= len(self.weights):
                raise InputError(f"unknown player {i!r} (players are 1..{len(self.weights)})")
        return sum(self.weights[i - 1] for i in members) >= self.quota


def is_winning(game: Union[ExplicitGame, WeightedGame], coalition: Iterable) -> bool:
    """Winning test for either representation."""
    return game.is_winning(coalition)


def minimal_winning(game: ExplicitGame) -> ExplicitGame:
    """The same game in minimal-winning form."""
    return ExplicitGame(game.players, game.minimal_family(), "minimal_winning")


def maximal_losing(game: ExplicitGame, max_players: int = 20) -> frozenset[Coalition]:
    """Inclusion-maximal losing coalitions, by enumerating the power set."""
    n = len(game.players)
    if n > max_players:
        raise ResourceLimitError(f"{n} players exceed the enumeration cap of {max_players}")
    minimal = game.minimal_family()

    def wins(coalition: frozenset) -> bool:
        return any(member <= coalition for member in minimal)

    result = []
    for size in range(n + 1):
        for combo in itertools.combinations(game.players, size):
            coalition = frozenset(combo)
            if wins(coalition):
                continue
            if all(wins(coalition | {p}) for p in game.players if p not in coalition):
                result.append(coalition)
    return frozenset(result)


def _min_transversal_size(family: list[Coalition]) -> int:
    """Smallest number of players hitting every coalition in ``family``.

    Branch and bound on an arbitrary unhit coalition.  Every coalition must be
    non-empty.  Exponential in the worst case, exact always.
    """
    family = sorted(family, key=len)
    best = len(frozenset().union(*family)) if family else 0

    def search(chosen: frozenset, depth: int) -> None:
        nonlocal best
        if depth >= best:
            return
        unhit = next((member for member in family if not member & chosen), None)
        if unhit is None:
            best = depth
            return
        for player in sorted(unhit):
            search(chosen | {player}, depth + 1)

    search(frozenset(), 0)
    return best


def explicit_measure(game: ExplicitGame, kind: str) -> int | None:
    """Exact length / width / slength / swidth of an explicit game.

    Length and strict width come straight off the minimal winning family.
    Strict length equals the largest losing-coalition size plus one, which is
    ``n`` minus the minimum transversal of the minimal winning family plus
    one; width is that same maximum losing size.  Returns ``None`` for the
    measures that are undefined on the degenerate games (no winners: length
    and slength; no losers: width and swidth).
    """
    if kind not in MEASURE_KINDS:
        raise InputError(f"unknown measure kind {kind!r}")
    minimal = game.minimal_family()
    n = len(game.players)
    if not minimal:
        return {"length": None, "slength": None, "width": n, "swidth": n}[kind]
    if frozenset() in minimal:
        return {"length": 0, "slength": 0, "width": None, "swidth": None}[kind]
    if kind == "length":
        return min(len(member) for member in minimal)
    if kind == "swidth":
        return min(len(member) for member in minimal) - 1
    width = n - _min_transversal_size(list(minimal))
    return width if kind == "width" else width + 1


def explicit_combine(g1: ExplicitGame, g2: ExplicitGame, mode: str) -> ExplicitGame:
    """Union or intersection game, in minimal-winning form.

    A coalition wins the union when it wins either input and the
    intersection when it wins both.  Computed on the minimal families:
    unions merge the antichains, intersections pair up members.
    """
    if set(g1.players) != set(g2.players):
        raise InputError("player sets differ")
    if mode not in ("union", "intersection"):
        raise InputError(f"unknown combine mode {mode!r}")
    m1, m2 = g1.minimal_family(), g2.minimal_family()
    if mode == "union":
        combined = minimize_family(m1 | m2)
    else:
        combined = minimize_family(a | b for a in m1 for b in m2)
    return ExplicitGame(g1.players, combined, "minimal_winning")
