"""Exact analysis toolkit for threshold influence games."""

from .analysis import (
    IsoResult,
    PowerReport,
    are_symmetric,
    equivalent,
    game_property,
    is_blocking,
    is_critical,
    is_dictator,
    is_dummy,
    is_passer,
    is_swing,
    is_vetoer,
    isomorphic,
    measure,
    player_property,
    power,
    power_all,
    team_property,
)
from .errors import DocumentError, InputError, ResourceLimitError, SelfCheckError
from .forms import (
    ExplicitGame,
    WeightedGame,
    explicit_combine,
    explicit_measure,
    is_winning,
    maximal_losing,
    minimal_winning,
    minimize_family,
    winning_closure,
)
from .games import (
    InfluenceGame,
    combine,
    combine_weighted,
    from_minimal_winning,
    from_weighted,
    from_weighted_unweighted,
    is_successful,
    relabel,
    to_explicit,
    vertex_cover_game,
    winning_masks,
)
from .graphs import ActivationTrace, InfluenceGraph, spread, spread_trace
from .special import (
    ComponentProfile,
    FamilyTag,
    can_remove_without_isolating,
    classify,
    component_profile,
    is_max_influence,
    is_min_influence,
    max_game_property,
    max_width,
    max_width_full_spread,
    min_game_property,
    min_measure,
    min_reduced_weighted,
)

__all__ = [name for name in dir() if not name.startswith("_")]
