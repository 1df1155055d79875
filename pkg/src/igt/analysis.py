"""Exact measures, power values, and properties of influence games.

Everything here is computed exactly.  The single-team properties (passer,
vetoer, dictator, critical, blocking, swing) need only a handful of spread
runs and work at any size.  Measures, power values, dummy/symmetry tests,
game properties, equivalence, and isomorphism enumerate coalitions and are
therefore guarded by an enumeration cap; ``measure`` and ``game_property``
first try the polynomial special-family algorithms when asked to dispatch
automatically.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable

from .errors import InputError, ResourceLimitError
from .forms import MEASURE_KINDS
from .games import DEFAULT_MAX_PLAYERS, InfluenceGame, is_successful, winning_masks
from .graphs import NodeId, spread

DEFAULT_ISO_CAP = 8

GAME_PROPERTY_KINDS = ("proper", "strong", "decisive")


@dataclass(frozen=True)
class PowerReport:
    """Banzhaf and Shapley-Shubik value and index of one player.

    Values are exact integers (counts and weighted counts of coalitions the
    player is critical for); indices are exact rationals.
    """

    player: NodeId
    banzhaf_value: int
    banzhaf_index: Fraction
    shapley_value: int
    shapley_index: Fraction


@lru_cache(maxsize=64)
def _table(game: InfluenceGame) -> tuple[tuple[NodeId, ...], int]:
    return winning_masks(game, max_players=game.player_count)


def _win_table(game: InfluenceGame, max_players: int | None) -> tuple[tuple[NodeId, ...], int]:
    cap = DEFAULT_MAX_PLAYERS if max_players is None else max_players
    if game.player_count > cap:
        raise ResourceLimitError(
            f"enumeration over {game.player_count} players exceeds the cap of {cap}"
        )
    return _table(game)


def _require_player(game: InfluenceGame, player: NodeId) -> None:
    if player not in game.players:
        raise InputError(f"{player!r} is not a player of this game")


def measure(
    game: InfluenceGame,
    kind: str,
    method: str = "auto",
    max_players: int | None = None,
) -> int | None:
    """Length, width, strict length, or strict width of an influence game.

    Length is the smallest successful team size and width the largest
    unsuccessful one; the strict variants are the first size from which all
    teams succeed and the last size up to which all fail.  ``None`` when the
    defining set is empty.  ``method`` is ``auto`` (use a special-family
    algorithm when one applies, else enumerate), ``brute`` or ``special``.
    """
    if kind not in MEASURE_KINDS:
        raise InputError(f"unknown measure kind {kind!r}")
    if method not in ("auto", "brute", "special"):
        raise InputError(f"unknown method {method!r}")
    if method in ("auto", "special"):
        special = _special_measure(game, kind)
        if special is not NotImplemented:
            return special
        if method == "special":
            raise InputError(f"no polynomial special-case algorithm applies to {kind!r} for this game")
    return _brute_measure(game, kind, max_players)


def _special_measure(game: InfluenceGame, kind: str):
    """Special-family value, or NotImplemented when no algorithm applies."""
    from . import special

    if special.is_min_influence(game):
        length = special.min_measure(game, "length")
        width = special.min_measure(game, "width")
        return {
            "length": length,
            "width": width,
            "slength": _slength_from_width(width, game.player_count),
            "swidth": _swidth_from_length(length, game.player_count),
        }[kind]
    if (
        special.is_max_influence(game)
        and game.players == frozenset(game.graph.node_ids)
        and kind in ("width", "slength")
    ):
        width = special.max_width(game)
        return width if kind == "width" else _slength_from_width(width, game.player_count)
    return NotImplemented


def _swidth_from_length(length: int | None, n: int) -> int | None:
    if length is None:
        return n
    if length == 0:
        return None
    return length - 1


def _slength_from_width(width: int | None, n: int) -> int | None:
    # width == n means even the grand coalition loses: no size is all-winning.
    if width is None:
        return 0
    if width == n:
        return None
    return width + 1


def _brute_measure(game: InfluenceGame, kind: str, max_players: int | None) -> int | None:
    players = game.sorted_players()
    n = len(players)
    cap = DEFAULT_MAX_PLAYERS if max_players is None else max_players
    if n > cap:
        raise ResourceLimitError(f"enumeration over {n} players exceeds the cap of {cap}")
    if kind in ("length", "swidth"):
        length = None
        for size in range(n + 1):
            if any(is_successful(game, team) for team in itertools.combinations(players, size)):
                length = size
                break
        return length if kind == "length" else _swidth_from_length(length, n)
    width = None
    for size in range(n, -1, -1):
        if any(not is_successful(game, team) for team in itertools.combinations(players, size)):
            width = size
            break
    if kind == "width":
        return width
    return _slength_from_width(width, n)


def power(game: InfluenceGame, player: NodeId, max_players: int | None = None) -> PowerReport:
    """Exact Banzhaf and Shapley-Shubik power of one player.

    Counts the coalitions containing the player that win and lose the
    player: the count is the Banzhaf value, the orderings-weighted count is
    the Shapley-Shubik value, and the indices divide by ``2^(n-1)`` and
    ``n!``.
    """
    _require_player(game, player)
    players, bits = _win_table(game, max_players)
    n = len(players)
    bit = 1 << players.index(player)
    swing_weight = [factorial(s - 1) * factorial(n - s) for s in range(1, n + 1)]
    banzhaf = 0
    shapley = 0
    for mask in range(1 << n):
        if mask & bit and bits >> mask & 1 and not bits >> (mask ^ bit) & 1:
            banzhaf += 1
            shapley += swing_weight[mask.bit_count() - 1]
    return PowerReport(
        player=player,
        banzhaf_value=banzhaf,
        banzhaf_index=Fraction(banzhaf, 1 << (n - 1)),
        shapley_value=shapley,
        shapley_index=Fraction(shapley, factorial(n)),
    )


def power_all(game: InfluenceGame, max_players: int | None = None) -> list[PowerReport]:
    return [power(game, player, max_players) for player in game.sorted_players()]


def is_passer(game: InfluenceGame, player: NodeId) -> bool:
    """A passer wins alone: the player's own spread reaches the quota."""
    _require_player(game, player)
    return len(spread(game.graph, [player])) >= game.quota


def is_vetoer(game: InfluenceGame, player: NodeId) -> bool:
    """A vetoer is indispensable: everyone else together still loses."""
    _require_player(game, player)
    return len(spread(game.graph, game.players - {player})) < game.quota


def is_dictator(game: InfluenceGame, player: NodeId) -> bool:
    """Dictator = passer and vetoer."""
    return is_passer(game, player) and is_vetoer(game, player)


def player_property(game: InfluenceGame, player: NodeId, kind: str) -> bool:
    if kind == "passer":
        return is_passer(game, player)
    if kind == "vetoer":
        return is_vetoer(game, player)
    if kind == "dictator":
        return is_dictator(game, player)
    raise InputError(f"unknown player property {kind!r}")


def is_dummy(game: InfluenceGame, player: NodeId, max_players: int | None = None) -> bool:
    """A dummy is critical for no team (zero Banzhaf value)."""
    _require_player(game, player)
    players, bits = _win_table(game, max_players)
    bit = 1 << players.index(player)
    for mask in range(1 << len(players)):
        if mask & bit and bits >> mask & 1 and not bits >> (mask ^ bit) & 1:
            return False
    return True


def are_symmetric(game: InfluenceGame, first: NodeId, second: NodeId, max_players: int | None = None) -> bool:
    """Interchangeable players: swapping them never changes a team's fate."""
    _require_player(game, first)
    _require_player(game, second)
    if first == second:
        return True
    rest = sorted(game.players - {first, second})
    cap = DEFAULT_MAX_PLAYERS if max_players is None else max_players
    if len(rest) + 2 > cap:
        raise ResourceLimitError(f"enumeration over {len(rest) + 2} players exceeds the cap of {cap}")
    for size in range(len(rest) + 1):
        for team in itertools.combinations(rest, size):
            if is_successful(game, team + (first,)) != is_successful(game, team + (second,)):
                return False
    return True


def is_critical(game: InfluenceGame, team: Iterable[NodeId], player: NodeId) -> bool:
    """The team wins but loses without the player."""
    team = frozenset(team)
    if player not in team:
        raise InputError(f"{player!r} is not a member of the team")
    return is_successful(game, team) and not is_successful(game, team - {player})


def is_blocking(game: InfluenceGame, team: Iterable[NodeId]) -> bool:
    """The team's complement loses."""
    team = frozenset(team)
    outside = team - game.players
    if outside:
        raise InputError(f"{sorted(outside)[0]!r} is not a player of this game")
    return len(spread(game.graph, game.players - team)) < game.quota


def is_swing(game: InfluenceGame, team: Iterable[NodeId]) -> bool:
    """The team wins and at least one member is critical for it."""
    team = frozenset(team)
    if not is_successful(game, team):
        return False
    return any(not is_successful(game, team - {member}) for member in team)


def team_property(game: InfluenceGame, team: Iterable[NodeId], kind: str, player: NodeId | None = None) -> bool:
    if kind == "critical":
        if player is None:
            raise InputError("critical needs a player")
        return is_critical(game, team, player)
    if kind == "blocking":
        return is_blocking(game, team)
    if kind == "swing":
        return is_swing(game, team)
    raise InputError(f"unknown team property {kind!r}")


def game_property(
    game: InfluenceGame,
    kind: str,
    method: str = "auto",
    max_players: int | None = None,
) -> bool:
    """Proper (no two disjoint winners), strong (no two complementary
    losers), or decisive (both).

    Dispatches to the polynomial special-family algorithms when they apply,
    otherwise enumerates complementary team pairs.
    """
    if kind not in GAME_PROPERTY_KINDS:
        raise InputError(f"unknown game property {kind!r}")
    if method not in ("auto", "brute", "special"):
        raise InputError(f"unknown method {method!r}")
    if method in ("auto", "special"):
        from . import special

        if special.is_min_influence(game):
            return special.min_game_property(game, kind)
        if special.classify(game) is special.FamilyTag.MAX_FULL_SPREAD:
            return special.max_game_property(game, kind)
        if method == "special":
            raise InputError("no polynomial special-case algorithm applies to this game")
    if kind == "decisive":
        return game_property(game, "proper", "brute", max_players) and game_property(
            game, "strong", "brute", max_players
        )
    players, bits = _win_table(game, max_players)
    full = (1 << len(players)) - 1
    for mask in range(1 << max(len(players) - 1, 0)):
        mate = full ^ mask
        won, mate_won = bits >> mask & 1, bits >> mate & 1
        if kind == "proper" and won and mate_won:
            return False
        if kind == "strong" and not won and not mate_won:
            return False
    return True


def equivalent(g1: InfluenceGame, g2: InfluenceGame, max_players: int | None = None) -> bool:
    """Same player set, same successful teams."""
    if g1.players != g2.players:
        raise InputError("player sets differ")
    _, bits1 = _win_table(g1, max_players)
    _, bits2 = _win_table(g2, max_players)
    return bits1 == bits2


@dataclass(frozen=True)
class IsoResult:
    """Outcome of an isomorphism search, with a witness bijection if found."""

    isomorphic: bool
    witness: dict[NodeId, NodeId] | None = None

    def __bool__(self) -> bool:
        return self.isomorphic


def _player_signature(players: tuple[NodeId, ...], bits: int, index: int) -> tuple:
    n = len(players)
    bit = 1 << index
    by_size = [0] * (n + 1)
    swings = 0
    for mask in range(1 << n):
        if mask & bit and bits >> mask & 1:
            by_size[mask.bit_count()] += 1
            if not bits >> (mask ^ bit) & 1:
                swings += 1
    return (swings, tuple(by_size))


def isomorphic(g1: InfluenceGame, g2: InfluenceGame, max_players: int | None = None) -> IsoResult:
    """Search for a player bijection carrying winners to winners both ways.

    Candidates are pruned by bijection-invariant player statistics (swing
    count and per-size winning-membership profile), then checked exhaustively
    by backtracking, so a reported witness is always genuine and pruning
    never discards a true isomorphism.
    """
    cap = DEFAULT_ISO_CAP if max_players is None else max_players
    if g1.player_count != g2.player_count:
        raise InputError("player counts differ")
    if g1.player_count > cap:
        raise ResourceLimitError(
            f"isomorphism over {g1.player_count} players exceeds the cap of {cap}"
        )
    players1, bits1 = _table(g1)
    players2, bits2 = _table(g2)
    n = len(players1)
    sizes1 = [0] * (n + 1)
    sizes2 = [0] * (n + 1)
    for mask in range(1 << n):
        if bits1 >> mask & 1:
            sizes1[mask.bit_count()] += 1
        if bits2 >> mask & 1:
            sizes2[mask.bit_count()] += 1
    if sizes1 != sizes2:
        return IsoResult(False)
    sig1 = [_player_signature(players1, bits1, i) for i in range(n)]
    sig2 = [_player_signature(players2, bits2, i) for i in range(n)]
    if sorted(sig1) != sorted(sig2):
        return IsoResult(False)

    assignment: list[int | None] = [None] * n
    used = [False] * n

    def masks_over(prefix: int) -> range:
        return range(1 << prefix)

    def consistent(depth: int) -> bool:
        # Check all teams drawn from the first `depth` players of game 1.
        for mask in masks_over(depth):
            image = 0
            for b in range(depth):
                if mask >> b & 1:
                    image |= 1 << assignment[b]
            if (bits1 >> mask & 1) != (bits2 >> image & 1):
                return False
        return True

    def search(depth: int) -> bool:
        if depth == n:
            return True
        for candidate in range(n):
            if used[candidate] or sig1[depth] != sig2[candidate]:
                continue
            assignment[depth] = candidate
            used[candidate] = True
            if consistent(depth + 1) and search(depth + 1):
                return True
            assignment[depth] = None
            used[candidate] = False
        return False

    if search(0):
        witness = {players1[i]: players2[assignment[i]] for i in range(n)}
        return IsoResult(True, witness)
    return IsoResult(False)
