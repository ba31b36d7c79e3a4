"""2-period four-state quantum walk on the line.

Exact state-vector simulation plus closed-form long-time laws: the pointwise
limit measure, the weak-limit density of X_t / t (origin atom + ballistic
part), and the winning/losing game analysis built on both.
"""

__version__ = "0.1.0"

from .core import (
    BASIS,
    CoinAngles,
    DegenerateError,
    InitialState,
    InvalidAnglesError,
    NormError,
    Protocol,
    WalkState,
    coin_matrix,
    make_initial,
    state_at_origin,
)
from .evolution import (
    PositionDistribution,
    SideSplit,
    apply_coin,
    apply_shift,
    distribution,
    empirical_moment,
    evolve,
    side_split,
    step,
)
from .game import (
    DRAW,
    INVALID,
    LOSING,
    WINNING,
    GameVerdict,
    PhaseGrid,
    SweepPoint,
    classify,
    game_time_series,
    mu_sides,
    phase_sweep,
    state_sweep,
    truncation_bound,
)
from .limit_density import (
    DensityContext,
    MinMaxCoin,
    continuous_mass,
    d_coeffs,
    delta_mass,
    density,
    eigenvalue,
    group_velocity,
    moment,
)
from .limit_measure import (
    LimitMeasureContext,
    eta1,
    eta2,
    eta3,
    indicator,
    kronecker0,
    limit_prob,
    limit_prob_range,
    partial_mass,
    xi1,
    xi2,
)

__all__ = [
    "BASIS",
    "CoinAngles",
    "DegenerateError",
    "DensityContext",
    "DRAW",
    "GameVerdict",
    "InitialState",
    "InvalidAnglesError",
    "INVALID",
    "LimitMeasureContext",
    "LOSING",
    "MinMaxCoin",
    "NormError",
    "PhaseGrid",
    "PositionDistribution",
    "Protocol",
    "SideSplit",
    "SweepPoint",
    "WalkState",
    "WINNING",
    "apply_coin",
    "apply_shift",
    "classify",
    "coin_matrix",
    "continuous_mass",
    "d_coeffs",
    "delta_mass",
    "density",
    "distribution",
    "eigenvalue",
    "empirical_moment",
    "eta1",
    "eta2",
    "eta3",
    "evolve",
    "game_time_series",
    "group_velocity",
    "indicator",
    "kronecker0",
    "limit_prob",
    "limit_prob_range",
    "make_initial",
    "moment",
    "mu_sides",
    "partial_mass",
    "phase_sweep",
    "side_split",
    "state_at_origin",
    "state_sweep",
    "step",
    "truncation_bound",
    "xi1",
    "xi2",
]
