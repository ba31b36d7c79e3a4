"""Weak-limit law of X_t / t: origin atom, continuous density, and moments.

The continuous part lives on (-2|c_m|, 2|c_m|) where |c_m| is the smaller of
|cos(theta1)|, |cos(theta2)|.  Integrals substitute x = 2|c_m| sin(phi), which
removes the inverse-square-root endpoint singularity; the remaining integrand
is smooth because the (4 - x^2) pole stays outside the closed support for
valid angles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import CoinAngles, DegenerateError, InitialState
from .limit_measure import LimitMeasureContext, eta1, eta2, eta3

_GL_ORDER = 200
_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(_GL_ORDER)

MAX_MOMENT_ORDER = 4


@dataclass(frozen=True)
class MinMaxCoin:
    """Which coin has the smaller |cos|; ties resolve to the first coin."""

    m: int
    M: int
    c_m: float
    s_m: float
    s_M: float

    @classmethod
    def from_coins(cls, coins: CoinAngles) -> "MinMaxCoin":
        if abs(coins.c1) <= abs(coins.c2):
            return cls(m=1, M=2, c_m=coins.c1, s_m=coins.s1, s_M=coins.s2)
        return cls(m=2, M=1, c_m=coins.c2, s_m=coins.s2, s_M=coins.s1)


def delta_mass(coins: CoinAngles, init: InitialState) -> float:
    """Total localized mass: the atom of the weak limit at the origin.

    The sign of the last cross term is fixed by the requirement that this
    closed form reproduce the summed pointwise limit measure (checked against
    the lattice sum and an independent spectral-projector quadrature).
    """
    ctx = LimitMeasureContext(coins)
    q0, q1, q2, q3 = init.q0, init.q1, init.q2, init.q3
    mod = abs(q0) ** 2 - abs(q1) ** 2 - abs(q2) ** 2 + abs(q3) ** 2
    return (
        abs(q1) ** 2
        + abs(q2) ** 2
        + mod * eta1(ctx, 0)
        - 2.0
        * (
            (q0 * q3.conjugate()).real * eta1(ctx, 1)
            - (q1 * q2.conjugate()).real * eta2(ctx, 0)
            + (q0 * q1.conjugate() - q2 * q3.conjugate()).real * eta3(ctx, 0)
            + (q0 * q2.conjugate() - q1 * q3.conjugate()).real * eta3(ctx, -1)
        )
    )


def d_coeffs(coins: CoinAngles, init: InitialState) -> tuple[float, float, float]:
    """Quadratic-numerator coefficients (d0, d1, d2) of the continuous density."""
    coins.require_valid()
    mm = MinMaxCoin.from_coins(coins)
    c1, s1, c2, s2 = coins.c1, coins.s1, coins.c2, coins.s2
    q0, q1, q2, q3 = init.q0, init.q1, init.q2, init.q3
    re03 = (q0 * q3.conjugate()).real
    re12 = (q1 * q2.conjugate()).real
    d0 = 2.0 * (1.0 + 2.0 * mm.c_m**2 * mm.s_M / (c1 * c2 * mm.s_m) * (re12 - re03))
    d1 = -2.0 * (
        abs(q0) ** 2
        - abs(q3) ** 2
        + s1 / c1 * (q0 * q1.conjugate() + q2 * q3.conjugate()).real
        + s2 / c2 * (q0 * q2.conjugate() + q1 * q3.conjugate()).real
    )
    d2 = (
        0.5 * (abs(q0) ** 2 - abs(q1) ** 2 - abs(q2) ** 2 + abs(q3) ** 2)
        + s1 / c1 * (q0 * q1.conjugate() - q2 * q3.conjugate()).real
        + s2 / c2 * (q0 * q2.conjugate() - q1 * q3.conjugate()).real
        + s1 * s2 / (c1 * c2) * (re03 + re12)
        + mm.s_M / (c1 * c2 * mm.s_m) * (re03 - re12)
    )
    return d0, d1, d2


@dataclass(frozen=True)
class DensityContext:
    """Everything needed to evaluate the weak-limit law for one (coins, init)."""

    coins: CoinAngles
    init: InitialState
    mm: MinMaxCoin
    delta: float
    d0: float
    d1: float
    d2: float

    @classmethod
    def build(cls, coins: CoinAngles, init: InitialState) -> "DensityContext":
        coins.require_valid()
        mm = MinMaxCoin.from_coins(coins)
        d0, d1, d2 = d_coeffs(coins, init)
        return cls(coins=coins, init=init, mm=mm, delta=delta_mass(coins, init), d0=d0, d1=d1, d2=d2)

    @property
    def support_radius(self) -> float:
        return 2.0 * abs(self.mm.c_m)


def density(ctx: DensityContext, x: float) -> float:
    """Continuous part f(x) of the limit density; zero outside the open support."""
    r = ctx.support_radius
    if not (-r < x < r):
        return 0.0
    num = abs(ctx.mm.s_m) * (ctx.d0 + ctx.d1 * x + ctx.d2 * x * x)
    return num / (math.pi * (4.0 - x * x) * math.sqrt(r * r - x * x))


def _angular_numerator(ctx: DensityContext, phi: np.ndarray, power: int) -> np.ndarray:
    # After x = R sin(phi) the integrand of integral x^power f(x) dx is smooth.
    x = ctx.support_radius * np.sin(phi)
    g = abs(ctx.mm.s_m) * (ctx.d0 + ctx.d1 * x + ctx.d2 * x * x) / (np.pi * (4.0 - x * x))
    if power:
        g = g * x**power
    return g


def _quad(ctx: DensityContext, a: float, b: float, power: int) -> float:
    r = ctx.support_radius
    lo = min(max(a, -r), r)
    hi = min(max(b, -r), r)
    if hi <= lo:
        return 0.0
    phi_lo = math.asin(lo / r)
    phi_hi = math.asin(hi / r)
    mid = 0.5 * (phi_hi + phi_lo)
    half = 0.5 * (phi_hi - phi_lo)
    values = _angular_numerator(ctx, mid + half * _GL_NODES, power)
    return float(half * np.dot(_GL_WEIGHTS, values))


def continuous_mass(ctx: DensityContext, a: float, b: float) -> float:
    """Integral of f over [a, b]; the full support integrates to 1 - delta."""
    if a > b:
        raise ValueError("need a <= b")
    return _quad(ctx, a, b, 0)


def moment(ctx: DensityContext, r: int) -> float:
    """r-th moment of the weak limit (atom contributes only at r = 0)."""
    if r < 0 or r > MAX_MOMENT_ORDER:
        raise ValueError(f"moment order must be in 0..{MAX_MOMENT_ORDER}")
    atom = ctx.delta if r == 0 else 0.0
    return atom + _quad(ctx, -ctx.support_radius, ctx.support_radius, r)


def dispersion_gap(coins: CoinAngles, k) -> tuple:
    """(A, 1 - A^2) with A = c1 c2 cos k + s1 s2, the 1 - A^2 factored as
    (1 - A)(1 + A) in half-angle form so it stays accurate near the
    degeneracies A -> +-1 (no cancellation in 1 - A*A)."""
    c1c2 = coins.c1 * coins.c2
    a = c1c2 * np.cos(k) + coins.s1 * coins.s2
    half_diff = 0.5 * (coins.theta1 - coins.theta2)
    half_sum = 0.5 * (coins.theta1 + coins.theta2)
    one_minus = 2.0 * np.sin(half_diff) ** 2 + 2.0 * c1c2 * np.sin(np.asarray(k) / 2.0) ** 2
    one_plus = 2.0 * np.sin(half_sum) ** 2 + 2.0 * c1c2 * np.cos(np.asarray(k) / 2.0) ** 2
    return a, one_minus * one_plus


def eigenvalue(coins: CoinAngles, k: float, j: int) -> complex:
    """Unit-modulus eigenvalue lambda_j(k) of either single-substep 2x2 block."""
    if j not in (1, 2):
        raise ValueError("j must be 1 or 2")
    a, gap = dispersion_gap(coins, k)
    root = math.sqrt(max(float(gap), 0.0))
    return complex(float(a), -((-1.0) ** j) * root)


def group_velocity(coins: CoinAngles, k: float, j: int) -> float:
    """2i lambda_j'(k) / lambda_j(k); its range fixes the ballistic support."""
    if j not in (1, 2):
        raise ValueError("j must be 1 or 2")
    _, gap = dispersion_gap(coins, k)
    radicand = float(gap)
    if radicand <= 1e-15:
        raise DegenerateError(f"degenerate momentum k={k!r}: eigenvalues collide")
    return ((-1.0) ** j) * 2.0 * coins.c1 * coins.c2 * math.sin(k) / math.sqrt(radicand)
