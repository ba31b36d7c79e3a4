"""Shared domain types for the 2-period four-state walk on the line.

Angles enter every public constructor as multiples of pi, so the special
parameter values (pi/6, pi/4, ...) are exactly representable in test inputs
and CSV files.  They are converted to radians once, here.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

TWO_PI = 2.0 * math.pi

# Angles closer than this (radians) to a multiple of pi/2 break the limit laws.
ANGLE_EXCLUSION_TOL = 1e-12

# Input amplitudes may deviate from unit norm by at most this much.
NORM_TOL = 1e-9

# Coin basis order used for every length-4 amplitude block: |j1 j2>.
BASIS = ("00", "01", "10", "11")


class NormError(ValueError):
    """Initial-state amplitudes do not have unit norm."""


class InvalidAnglesError(ValueError):
    """Coin angles lie on the excluded set {0, pi/2, pi, 3pi/2}."""


class DegenerateError(ValueError):
    """Spectral quantity requested at a degenerate momentum."""


def coin_matrix(theta: float) -> np.ndarray:
    """2x2 reflection coin [[c, s], [s, -c]]; orthogonal with det -1."""
    c, s = math.cos(theta), math.sin(theta)
    return np.array([[c, s], [s, -c]])


def _quarter_distance(theta: float) -> float:
    """Distance from theta (in [0, 2pi)) to the nearest multiple of pi/2."""
    return min(abs(theta - k * (math.pi / 2.0)) for k in range(5))


@dataclass(frozen=True)
class CoinAngles:
    """The two coin angles with cached sines/cosines.

    ``valid_for_limit`` is False exactly when either angle sits within
    ``ANGLE_EXCLUSION_TOL`` of {0, pi/2, pi, 3pi/2}; simulation works for
    any angles, only the limit-law evaluators require validity.
    """

    theta1: float
    theta2: float
    c1: float = field(init=False, repr=False)
    s1: float = field(init=False, repr=False)
    c2: float = field(init=False, repr=False)
    s2: float = field(init=False, repr=False)
    valid_for_limit: bool = field(init=False, repr=False)

    def __post_init__(self) -> None:
        t1 = self.theta1 % TWO_PI
        t2 = self.theta2 % TWO_PI
        object.__setattr__(self, "theta1", t1)
        object.__setattr__(self, "theta2", t2)
        object.__setattr__(self, "c1", math.cos(t1))
        object.__setattr__(self, "s1", math.sin(t1))
        object.__setattr__(self, "c2", math.cos(t2))
        object.__setattr__(self, "s2", math.sin(t2))
        valid = (
            _quarter_distance(t1) > ANGLE_EXCLUSION_TOL
            and _quarter_distance(t2) > ANGLE_EXCLUSION_TOL
        )
        object.__setattr__(self, "valid_for_limit", valid)

    @classmethod
    def from_pi_units(cls, theta1_over_pi: float, theta2_over_pi: float) -> "CoinAngles":
        """Build from angles expressed as multiples of pi (0.25 means pi/4)."""
        return cls((theta1_over_pi % 2.0) * math.pi, (theta2_over_pi % 2.0) * math.pi)

    def require_valid(self) -> None:
        if not self.valid_for_limit:
            raise InvalidAnglesError(
                "coin angles (%g, %g) lie on the excluded set {0, pi/2, pi, 3pi/2}"
                % (self.theta1, self.theta2)
            )


@dataclass(frozen=True)
class InitialState:
    """Localized initial coin state (q0, q1, q2, q3) at the origin, unit norm."""

    q0: complex
    q1: complex
    q2: complex
    q3: complex

    def as_array(self) -> np.ndarray:
        return np.array([self.q0, self.q1, self.q2, self.q3], dtype=np.complex128)

    def norm(self) -> float:
        return float(np.sqrt(np.sum(np.abs(self.as_array()) ** 2)))


def make_initial(q0: complex, q1: complex, q2: complex, q3: complex) -> InitialState:
    """Validate and renormalize the four initial amplitudes.

    Raises NormError when the input norm deviates from 1 by more than
    ``NORM_TOL``; otherwise divides out the residual rounding so the stored
    state has unit norm to machine precision.
    """
    q = np.array([q0, q1, q2, q3], dtype=np.complex128)
    if not np.all(np.isfinite(q.view(np.float64))):
        raise NormError("initial amplitudes must be finite")
    norm = float(np.sqrt(np.sum(np.abs(q) ** 2)))
    if abs(norm - 1.0) > NORM_TOL:
        raise NormError(f"initial state norm {norm!r} deviates from 1 by more than {NORM_TOL}")
    q = q / norm
    return InitialState(complex(q[0]), complex(q[1]), complex(q[2]), complex(q[3]))


class Protocol(enum.Enum):
    """Coin labels applied per time step; one step is always two coin+shift substeps.

    XY is the 2-period walk (S Y S X read right to left); XX and YY iterate a
    single coin twice per step so the time axis matches XY's.
    """

    XY = ("X", "Y")
    XX = ("X", "X")
    YY = ("Y", "Y")

    @property
    def substeps(self) -> tuple[str, str]:
        return self.value


@dataclass(frozen=True)
class WalkState:
    """Walker state after ``t`` full steps.

    Amplitudes are stored densely: row ``i`` of ``amps`` holds the four coin
    amplitudes (basis order ``BASIS``) at position ``offset + i``.  Treat
    instances as immutable value data.
    """

    t: int
    offset: int
    amps: np.ndarray

    def __post_init__(self) -> None:
        self.amps.setflags(write=False)

    @property
    def positions(self) -> np.ndarray:
        return np.arange(self.offset, self.offset + self.amps.shape[0])

    def amplitude(self, x: int) -> np.ndarray:
        """Four coin amplitudes at position x (zeros outside the stored window)."""
        i = x - self.offset
        if 0 <= i < self.amps.shape[0]:
            return self.amps[i].copy()
        return np.zeros(4, dtype=np.complex128)

    def norm_squared(self) -> float:
        return float(np.sum(np.abs(self.amps) ** 2))


def state_at_origin(init: InitialState) -> WalkState:
    """t=0 state: all mass at x=0 with the given coin amplitudes."""
    amps = np.zeros((1, 4), dtype=np.complex128)
    amps[0] = init.as_array()
    return WalkState(t=0, offset=0, amps=amps)
