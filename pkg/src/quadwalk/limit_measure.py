"""Pointwise long-time limit of P(X_t = x) for the 2-period walk.

The limit is a four-term sum of squared moduli of linear combinations of
three geometric kernels eta1/eta2/eta3.  Each kernel mixes two decaying
ratios: only the ratio with modulus < 1 is ever raised to a growing power,
selected by the sign conditions on sin(theta1) -/+ sin(theta2); a condition
pair that is identically false has a vanishing coefficient and contributes
exactly zero, so its (non-decaying) ratio is never touched.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import CoinAngles, InitialState

# Powers below this are cut to exact zero; everything further decays to zero too.
UNDERFLOW_CUTOFF = 1e-300


def indicator(p: bool) -> int:
    """1 if the condition holds, else 0."""
    return 1 if p else 0


def kronecker0(x: int) -> int:
    """1 at the origin, else 0."""
    return 1 if x == 0 else 0


@dataclass(frozen=True)
class _DecayTerm:
    """One active ratio family with its per-kernel prefactors.

    ``base`` always has modulus < 1; ``sigma`` is the eta1 sign, ``pre_pos`` /
    ``pre_neg`` the eta2 branch prefactors and ``kap_pos`` / ``kap_neg`` the
    eta3 ones (positive / negative argument branch).
    """

    coeff: float
    base: float
    sigma: float
    pre_pos: float
    pre_neg: float
    kap_pos: float
    kap_neg: float


def _powers(base: float, n: int) -> np.ndarray:
    """[base^0, ..., base^n] by repeated multiplication with underflow cutoff."""
    out = np.empty(n + 1)
    out[0] = 1.0
    if n:
        out[1:] = np.cumprod(np.full(n, base))
        out[np.abs(out) < UNDERFLOW_CUTOFF] = 0.0
    return out


class LimitMeasureContext:
    """Per-(theta1, theta2) evaluation context with memoized kernel tables.

    Tables are grown on demand and swapped in whole, so concurrent readers
    always see a consistent snapshot.
    """

    def __init__(self, coins: CoinAngles):
        coins.require_valid()
        self.coins = coins
        s1, s2, c1, c2 = coins.s1, coins.s2, coins.c1, coins.c2
        self.nu1 = (1.0 + s1) * (1.0 - s2) / (c1 * c2)
        self.nu2 = -(1.0 + s1) * (1.0 + s2) / (c1 * c2)

        terms: list[_DecayTerm] = []
        if s1 < s2:
            terms.append(
                _DecayTerm(s1 - s2, self.nu1, 1.0, self.nu2, 1.0 / self.nu2,
                           1.0 / (1.0 - s1), 1.0 / (1.0 + s1))
            )
        elif s1 > s2:
            terms.append(
                _DecayTerm(s1 - s2, 1.0 / self.nu1, -1.0, -1.0 / self.nu2, -self.nu2,
                           1.0 / (1.0 + s1), 1.0 / (1.0 - s1))
            )
        if s1 < -s2:
            terms.append(
                _DecayTerm(s1 + s2, self.nu2, 1.0, self.nu1, 1.0 / self.nu1,
                           1.0 / (1.0 - s1), 1.0 / (1.0 + s1))
            )
        elif s1 > -s2:
            terms.append(
                _DecayTerm(s1 + s2, 1.0 / self.nu2, -1.0, -1.0 / self.nu1, -self.nu1,
                           1.0 / (1.0 + s1), 1.0 / (1.0 - s1))
            )
        self._terms = terms

        # (e1, e2, e3, cap) swapped as one snapshot; safe for concurrent readers.
        self._tables: tuple[np.ndarray, np.ndarray, np.ndarray, int] = (
            np.zeros(1), np.zeros(1), np.zeros(1), 0,
        )
        self._ensure(64)

    @property
    def decay_ratio(self) -> float:
        """Largest modulus among the active decaying ratios (strictly < 1)."""
        return max(abs(term.base) for term in self._terms)

    @property
    def zero_beyond(self) -> int:
        """Smallest |x| past which every kernel has underflowed to exact zero."""
        rho = self.decay_ratio
        return int(math.ceil(math.log(UNDERFLOW_CUTOFF) / math.log(rho))) + 2

    def _ensure(self, x_max: int) -> tuple[np.ndarray, np.ndarray, np.ndarray, int]:
        tables = self._tables
        if x_max <= tables[3]:
            return tables
        cap = max(x_max, 2 * tables[3])
        c1 = self.coins.c1
        half = np.zeros(cap + 1)
        e1_half = half.copy()
        e2_pos = half.copy()
        e2_neg = half.copy()
        e3_pos = half.copy()
        e3_neg = half.copy()
        for term in self._terms:
            pw = term.coeff * _powers(term.base, cap)
            e1_half += term.sigma * pw
            e2_pos += term.pre_pos * pw
            e2_neg += term.pre_neg * pw
            e3_pos += term.kap_pos * pw
            e3_neg += term.kap_neg * pw
        e1_half *= -0.25
        e2_pos *= 0.25
        e2_neg *= 0.25
        e3_pos *= 0.25 * c1
        e3_neg *= -0.25 * c1

        # Full tables over x = -cap .. cap, index x + cap.
        e1 = np.concatenate([e1_half[:0:-1], e1_half])
        e2 = np.concatenate([e2_neg[:0:-1], e2_pos])
        e3 = np.concatenate([e3_neg[:0:-1], e3_pos])
        self._tables = (e1, e2, e3, cap)
        return self._tables


def eta1(ctx: LimitMeasureContext, x: int) -> float:
    e1, _, _, cap = ctx._ensure(abs(int(x)))
    return float(e1[int(x) + cap])


def eta2(ctx: LimitMeasureContext, x: int) -> float:
    _, e2, _, cap = ctx._ensure(abs(int(x)))
    return float(e2[int(x) + cap])


def eta3(ctx: LimitMeasureContext, x: int) -> float:
    _, _, e3, cap = ctx._ensure(abs(int(x)))
    return float(e3[int(x) + cap])


def _xi_arrays(
    ctx: LimitMeasureContext, x: np.ndarray, q: np.ndarray
) -> tuple[np.ndarray, np.ndarray]:
    """xi1(x; q) and xi2(x; q) for an integer array x."""
    e1, e2, e3, cap = ctx._ensure(int(np.max(np.abs(x))) + 1)
    i = x + cap
    delta = (x == 0).astype(np.float64)
    xi_1 = e1[i] * q[0] - e3[i] * q[1] - e3[-x - 1 + cap] * q[2] - e1[i + 1] * q[3]
    xi_2 = (
        -e3[-x + cap] * q[0]
        + (delta - e1[i]) * q[1]
        + e2[-x + cap] * q[2]
        + e3[-x - 1 + cap] * q[3]
    )
    return xi_1, xi_2


def xi1(ctx: LimitMeasureContext, x: int, q0: complex, q1: complex, q2: complex, q3: complex) -> complex:
    v, _ = _xi_arrays(ctx, np.array([int(x)]), np.array([q0, q1, q2, q3], dtype=complex))
    return complex(v[0])


def xi2(ctx: LimitMeasureContext, x: int, q0: complex, q1: complex, q2: complex, q3: complex) -> complex:
    _, v = _xi_arrays(ctx, np.array([int(x)]), np.array([q0, q1, q2, q3], dtype=complex))
    return complex(v[0])


def limit_prob_range(ctx: LimitMeasureContext, init: InitialState, a: int, b: int) -> np.ndarray:
    """lim_t P(X_t = x) for x = a..b inclusive, as an array."""
    if a > b:
        raise ValueError("need a <= b")
    x = np.arange(int(a), int(b) + 1)
    q = init.as_array()
    q_swap1 = np.array([q[3], -q[2], -q[1], q[0]])
    q_swap2 = np.array([-q[3], q[2], q[1], -q[0]])
    xi_1, xi_2 = _xi_arrays(ctx, x, q)
    xi_1m, _ = _xi_arrays(ctx, -x, q_swap1)
    _, xi_2m = _xi_arrays(ctx, -x, q_swap2)
    return (
        np.abs(xi_1) ** 2 + np.abs(xi_1m) ** 2 + np.abs(xi_2) ** 2 + np.abs(xi_2m) ** 2
    )


def limit_prob(ctx: LimitMeasureContext, x: int, init: InitialState) -> float:
    """lim_t P(X_t = x) at a single site."""
    return float(limit_prob_range(ctx, init, int(x), int(x))[0])


def partial_mass(ctx: LimitMeasureContext, init: InitialState, a: int, b: int) -> float:
    """Sum of the limit probabilities over a..b inclusive.

    Sites beyond the underflow horizon carry exactly zero mass, so the
    summed range is clamped there; huge truncation orders cost nothing.
    """
    if a > b:
        raise ValueError("need a <= b")
    z = ctx.zero_beyond
    lo, hi = max(int(a), -z), min(int(b), z)
    if lo > hi:
        return 0.0
    return float(np.sum(limit_prob_range(ctx, init, lo, hi)))
