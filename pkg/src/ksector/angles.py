"""Angle conventions and the sector value type."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .exceptions import ValidationError

__all__ = ["Sector", "angle_2pi", "to_pi_fraction", "to_degrees"]

HALF_PI = 0.5 * math.pi


def angle_2pi(z):
    """Principal argument mapped into ``[0, 2*pi)``; works on scalars and arrays."""
    a = np.mod(np.angle(z), 2.0 * math.pi)
    if np.ndim(a) == 0:
        return float(a)
    return a


def to_pi_fraction(radians: float) -> float:
    return radians / math.pi


def to_degrees(radians: float) -> float:
    # pi-fraction times 180, so degree and pi-fraction renderings agree exactly
    return (radians / math.pi) * 180.0


@dataclass(frozen=True)
class Sector:
    """Root sector ``[pi/2 + alpha, 3*pi/2 - beta]`` stored as its two margins.

    ``alpha`` is the clearance from the positive imaginary axis and ``beta``
    the clearance from the negative imaginary axis, both in radians.
    Containing sectors of families have margins in ``[0, pi/2]``; the root
    sector of a single polynomial may have one margin up to ``pi`` (all roots
    in one quadrant), so margins are accepted in ``[0, pi]`` with
    ``alpha + beta <= pi``.
    """

    alpha: float
    beta: float

    def __post_init__(self):
        for name in ("alpha", "beta"):
            v = float(getattr(self, name))
            if not (0.0 <= v <= math.pi):
                raise ValidationError(f"sector margin {name}={v} outside [0, pi]")
            object.__setattr__(self, name, v)
        if self.alpha + self.beta > math.pi * (1 + 1e-15):
            raise ValidationError(f"empty sector: alpha + beta = {self.alpha + self.beta} > pi")

    @property
    def lower(self) -> float:
        """Smallest root angle allowed, in radians."""
        return HALF_PI + self.alpha

    @property
    def upper(self) -> float:
        return 1.5 * math.pi - self.beta

    @property
    def degrees(self) -> tuple[float, float]:
        return (to_degrees(self.lower), to_degrees(self.upper))

    def contains(self, other: Sector) -> bool:
        """True if ``other`` lies inside this sector (margins at least as large)."""
        return self.alpha <= other.alpha and self.beta <= other.beta

    def contains_angle(self, theta: float) -> bool:
        return self.lower <= theta <= self.upper

    def __str__(self):
        lo, hi = self.degrees
        return f"[{lo:.4f}°, {hi:.4f}°]"
