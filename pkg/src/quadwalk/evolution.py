"""Exact state-vector evolution and position-distribution extraction.

One time step applies two coin+shift substeps (the 2-period rule), so the
support after ``t`` steps is contained in [-2t, 2t].  The inner loop works on
a dense, preallocated window of positions; every public function is pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .core import CoinAngles, InitialState, Protocol, WalkState, coin_matrix


def coin4(label: str, coins: CoinAngles) -> np.ndarray:
    """4x4 coin for one substep: X acts as U2 (x) U1, Y as U1 (x) U2."""
    u1 = coin_matrix(coins.theta1)
    u2 = coin_matrix(coins.theta2)
    if label == "X":
        return np.kron(u2, u1)
    if label == "Y":
        return np.kron(u1, u2)
    raise ValueError(f"unknown coin label {label!r}")


def _shift_inplace(amps: np.ndarray) -> None:
    # |00> moves one site left, |11> one site right, |01>/|10> stay.
    # Boundary rows must be empty before the call; callers pad accordingly.
    left = amps[1:, 0].copy()
    amps[:-1, 0] = left
    amps[-1, 0] = 0.0
    right = amps[:-1, 3].copy()
    amps[1:, 3] = right
    amps[0, 3] = 0.0


def apply_coin(state: WalkState, label: str, coins: CoinAngles) -> WalkState:
    """Apply one coin substep (no shift) at every site."""
    m = coin4(label, coins)
    return WalkState(t=state.t, offset=state.offset, amps=state.amps @ m.T)


def apply_shift(state: WalkState) -> WalkState:
    """Apply the conditional translation; support grows by at most one per side."""
    n = state.amps.shape[0]
    amps = np.zeros((n + 2, 4), dtype=np.complex128)
    amps[1:-1] = state.amps
    _shift_inplace(amps)
    return WalkState(t=state.t, offset=state.offset - 1, amps=amps)


def step(state: WalkState, coins: CoinAngles, protocol: Protocol) -> WalkState:
    """Advance one full step (two coin+shift substeps)."""
    n = state.amps.shape[0]
    amps = np.zeros((n + 4, 4), dtype=np.complex128)
    amps[2:-2] = state.amps
    for label in protocol.substeps:
        amps = amps @ coin4(label, coins).T
        _shift_inplace(amps)
    return WalkState(t=state.t + 1, offset=state.offset - 2, amps=amps)


def iter_steps(
    init: InitialState, coins: CoinAngles, protocol: Protocol, t: int
) -> Iterator[tuple[int, int, np.ndarray]]:
    """Yield (step index, offset, amplitude buffer) after each full step.

    The buffer is preallocated once for the requested ``t`` and mutated in
    place between yields; consumers must copy anything they keep.
    """
    if t < 0:
        raise ValueError("t must be >= 0")
    n_rows = 4 * t + 5
    offset = -(2 * t + 2)
    amps = np.zeros((n_rows, 4), dtype=np.complex128)
    amps[-offset] = init.as_array()
    mats = [coin4(label, coins).T.copy() for label in protocol.substeps]
    for ti in range(1, t + 1):
        for m in mats:
            np.matmul(amps, m, out=amps)
            _shift_inplace(amps)
        yield ti, offset, amps


def evolve(init: InitialState, coins: CoinAngles, protocol: Protocol, t: int) -> WalkState:
    """State after t full steps from the localized initial state."""
    if t == 0:
        amps = np.zeros((1, 4), dtype=np.complex128)
        amps[0] = init.as_array()
        return WalkState(t=0, offset=0, amps=amps)
    for ti, offset, amps in iter_steps(init, coins, protocol, t):
        pass
    return WalkState(t=t, offset=offset, amps=amps.copy())


@dataclass(frozen=True)
class PositionDistribution:
    """Probabilities over the contiguous window of occupied positions."""

    t: int
    positions: np.ndarray
    probabilities: np.ndarray

    def prob(self, x: int) -> float:
        i = x - int(self.positions[0])
        if 0 <= i < len(self.probabilities):
            return float(self.probabilities[i])
        return 0.0

    def total(self) -> float:
        return float(np.sum(self.probabilities))


@dataclass(frozen=True)
class SideSplit:
    p_left: float
    p_origin: float
    p_right: float


def distribution(state: WalkState) -> PositionDistribution:
    """P(X_t = x) for every occupied position, trimming empty margins."""
    probs = np.sum(np.abs(state.amps) ** 2, axis=1)
    nz = np.nonzero(probs)[0]
    if len(nz) == 0:
        raise ValueError("state carries no probability mass")
    lo, hi = int(nz[0]), int(nz[-1]) + 1
    positions = np.arange(state.offset + lo, state.offset + hi)
    return PositionDistribution(t=state.t, positions=positions, probabilities=probs[lo:hi])


def side_split(dist: PositionDistribution) -> SideSplit:
    """Mass strictly left of the origin, at it, and strictly right of it."""
    x = dist.positions
    p = dist.probabilities
    return SideSplit(
        p_left=float(np.sum(p[x <= -1])),
        p_origin=float(np.sum(p[x == 0])),
        p_right=float(np.sum(p[x >= 1])),
    )


def empirical_moment(dist: PositionDistribution, r: int) -> float:
    """r-th moment of the rescaled position X_t / t."""
    if dist.t < 1:
        raise ValueError("moments of X_t/t need t >= 1")
    if r < 0:
        raise ValueError("r must be >= 0")
    scaled = dist.positions / dist.t
    return float(np.sum((scaled**r) * dist.probabilities))
