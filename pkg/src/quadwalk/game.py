"""Winning/losing analysis of the walk viewed as a game.

The asymptotic right-minus-left mass margin mu_R(n) - mu_L(n) decides the
verdict: each side combines a truncated sum of the pointwise limit measure
with the half-line integral of the continuous density.  Sweeps over coin
pairs and initial states, and simulated time series for protocol
comparisons, reuse the analytic and evolution modules verbatim.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial

import numpy as np

from .core import CoinAngles, InitialState, InvalidAnglesError, Protocol, make_initial
from .evolution import iter_steps
from .limit_density import DensityContext, continuous_mass
from .limit_measure import LimitMeasureContext, partial_mass

WINNING = "Winning"
LOSING = "Losing"
DRAW = "Draw"
INVALID = "Invalid"

DEFAULT_N = 10000
DEFAULT_EPS = 1e-6


@dataclass(frozen=True)
class GameVerdict:
    mu_r: float
    mu_l: float
    margin: float
    label: str


@dataclass(frozen=True)
class PhaseGrid:
    """Verdicts over a (theta1, theta2) grid, axes in multiples of pi.

    ``margins[i, j]`` belongs to (theta1_axis[i], theta2_axis[j]); excluded
    angles yield NaN margins labelled Invalid.
    """

    theta1_axis: np.ndarray
    theta2_axis: np.ndarray
    margins: np.ndarray
    labels: np.ndarray


@dataclass(frozen=True)
class SweepPoint:
    phi_over_pi: float
    margin: float
    label: str


def mu_sides(coins: CoinAngles, init: InitialState, n: int = DEFAULT_N) -> tuple[float, float]:
    """(mu_L(n), mu_R(n)): asymptotic mass on each side of the origin."""
    if n < 1:
        raise ValueError("n must be >= 1")
    ctx = LimitMeasureContext(coins)
    dctx = DensityContext.build(coins, init)
    r = dctx.support_radius
    mu_l = partial_mass(ctx, init, -n, -1) + continuous_mass(dctx, -r, 0.0)
    mu_r = partial_mass(ctx, init, 1, n) + continuous_mass(dctx, 0.0, r)
    return mu_l, mu_r


def _label(margin: float, eps: float) -> str:
    if margin > eps:
        return WINNING
    if margin < -eps:
        return LOSING
    return DRAW


def classify(
    coins: CoinAngles, init: InitialState, n: int = DEFAULT_N, eps: float = DEFAULT_EPS
) -> GameVerdict:
    """Verdict from the sign of mu_R(n) - mu_L(n) with a dead zone of width eps."""
    if eps <= 0.0:
        raise ValueError("eps must be > 0")
    mu_l, mu_r = mu_sides(coins, init, n)
    margin = mu_r - mu_l
    return GameVerdict(mu_r=mu_r, mu_l=mu_l, margin=margin, label=_label(margin, eps))


def _phase_cell(
    t1_over_pi: float, t2_over_pi: float, init: InitialState, n: int, eps: float
) -> tuple[float, str]:
    coins = CoinAngles.from_pi_units(t1_over_pi, t2_over_pi)
    if not coins.valid_for_limit:
        return math.nan, INVALID
    try:
        verdict = classify(coins, init, n, eps)
    except InvalidAnglesError:
        return math.nan, INVALID
    return verdict.margin, verdict.label


def _sweep_row(t1_over_pi: float, theta2_axis: tuple, init: InitialState,
               n: int, eps: float) -> list[tuple[float, str]]:
    return [_phase_cell(t1_over_pi, t2, init, n, eps) for t2 in theta2_axis]


def phase_sweep(
    theta1_axis,
    theta2_axis,
    init: InitialState,
    n: int = DEFAULT_N,
    eps: float = DEFAULT_EPS,
    threads: int = 1,
) -> PhaseGrid:
    """Classify every (theta1, theta2) cell.

    ``threads`` is the worker count; workers are processes (per-cell numpy
    work is small, so OS threads would serialize on the interpreter lock).
    Results are assembled by cell index, never by completion order, so grids
    are bit-identical for every worker count.
    """
    ax1 = np.asarray(theta1_axis, dtype=np.float64)
    ax2 = np.asarray(theta2_axis, dtype=np.float64)
    if ax1.size == 0 or ax2.size == 0:
        raise ValueError("axes must be nonempty")
    margins = np.empty((ax1.size, ax2.size))
    labels = np.empty((ax1.size, ax2.size), dtype=object)

    row_job = partial(_sweep_row, theta2_axis=tuple(float(v) for v in ax2),
                      init=init, n=n, eps=eps)
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(row_job, [float(v) for v in ax1]))
    else:
        rows = [row_job(float(v)) for v in ax1]
    for i, row in enumerate(rows):
        for j, (margin, label) in enumerate(row):
            margins[i, j] = margin
            labels[i, j] = label
    return PhaseGrid(theta1_axis=ax1, theta2_axis=ax2, margins=margins, labels=labels)


def state_sweep(
    coins: CoinAngles, phi_axis, n: int = DEFAULT_N, eps: float = DEFAULT_EPS
) -> list[SweepPoint]:
    """Margins for the one-parameter family q = (cos(phi/2), i sin(phi/2), 0, 0).

    ``phi_axis`` is given in multiples of pi.
    """
    coins.require_valid()
    out = []
    for u in phi_axis:
        phi = float(u) * math.pi
        init = make_initial(math.cos(phi / 2.0), 1j * math.sin(phi / 2.0), 0.0, 0.0)
        verdict = classify(coins, init, n, eps)
        out.append(SweepPoint(phi_over_pi=float(u), margin=verdict.margin, label=verdict.label))
    return out


def game_time_series(
    protocol: Protocol, coins: CoinAngles, init: InitialState, t_max: int
) -> list[tuple[int, float]]:
    """(t, P_R(t) - P_L(t)) for t = 1..t_max under the given protocol."""
    if t_max < 1:
        raise ValueError("t_max must be >= 1")
    series: list[tuple[int, float]] = []
    positions = None
    for ti, offset, amps in iter_steps(init, coins, protocol, t_max):
        if positions is None:
            positions = np.arange(offset, offset + amps.shape[0])
            right = positions >= 1
            left = positions <= -1
        probs = np.sum(np.abs(amps) ** 2, axis=1)
        series.append((ti, float(np.sum(probs[right]) - np.sum(probs[left]))))
    return series


def truncation_bound(ctx: LimitMeasureContext, init: InitialState, n: int) -> float:
    """Upper bound on the limit-measure mass outside [-n, n].

    Every kernel value at |x| is at most C * rho^|x| with rho the worst active
    decay ratio, each limit amplitude mixes kernels at arguments >= |x| - 1,
    and the amplitude coefficients satisfy sum|q_i| <= 2; summing the resulting
    geometric series bounds the tail by 32 C^2 rho^(2n) / (1 - rho^2).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    coins = ctx.coins
    a1 = abs(coins.s1 - coins.s2)
    a2 = abs(coins.s1 + coins.s2)
    nu1, nu2 = abs(ctx.nu1), abs(ctx.nu2)
    c_eta1 = (a1 + a2) / 4.0
    c_eta2 = (a1 * max(nu2, 1.0 / nu2) + a2 * max(nu1, 1.0 / nu1)) / 4.0
    c_eta3 = abs(coins.c1) * (a1 + a2) / (4.0 * (1.0 - abs(coins.s1)))
    big_c = max(c_eta1, c_eta2, c_eta3)
    rho = ctx.decay_ratio
    try:
        tail = 32.0 * big_c**2 * math.exp(2.0 * n * math.log(rho)) / (1.0 - rho * rho)
    except (OverflowError, ZeroDivisionError):
        return math.inf
    return tail
