"""Closed real intervals and complex interval boxes.

Only the operations needed to rotate interval coefficients are provided:
scalar scaling, addition, negation and zero membership.  Endpoints use plain
double-precision arithmetic without outward rounding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .exceptions import ValidationError

__all__ = [
    "RealInterval",
    "ComplexIntervalBox",
    "scale",
    "add",
    "negate",
    "contains_zero",
]


@dataclass(frozen=True)
class RealInterval:
    """Closed interval ``[lo, hi]`` with finite endpoints."""

    lo: float
    hi: float

    def __post_init__(self):
        lo, hi = float(self.lo), float(self.hi)
        if not (math.isfinite(lo) and math.isfinite(hi)):
            raise ValidationError(f"interval endpoints must be finite, got [{lo}, {hi}]")
        if lo > hi:
            raise ValidationError(f"interval requires lo <= hi, got [{lo}, {hi}]")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @classmethod
    def point(cls, value: float) -> RealInterval:
        return cls(value, value)

    @property
    def width(self) -> float:
        return self.hi - self.lo

    @property
    def is_degenerate(self) -> bool:
        return self.lo == self.hi

    @property
    def midpoint(self) -> float:
        return 0.5 * (self.lo + self.hi)

    def __contains__(self, x) -> bool:
        return self.lo <= x <= self.hi

    def __iter__(self):
        yield self.lo
        yield self.hi

    def __repr__(self):
        return f"[{self.lo!r}, {self.hi!r}]"


@dataclass(frozen=True)
class ComplexIntervalBox:
    """Rectangle ``re + i*im`` in the complex plane."""

    re: RealInterval
    im: RealInterval = RealInterval(0.0, 0.0)

    def __post_init__(self):
        for name in ("re", "im"):
            value = getattr(self, name)
            if not isinstance(value, RealInterval):
                object.__setattr__(self, name, RealInterval(*value))

    @classmethod
    def point(cls, value: complex) -> ComplexIntervalBox:
        value = complex(value)
        return cls(RealInterval.point(value.real), RealInterval.point(value.imag))

    @property
    def is_real(self) -> bool:
        return self.im.lo == 0.0 and self.im.hi == 0.0

    @property
    def is_degenerate(self) -> bool:
        return self.re.is_degenerate and self.im.is_degenerate

    @property
    def midpoint(self) -> complex:
        return complex(self.re.midpoint, self.im.midpoint)

    def __contains__(self, z) -> bool:
        z = complex(z)
        return z.real in self.re and z.imag in self.im

    def __repr__(self):
        return f"{self.re!r}+i{self.im!r}"


def scale(x: float, y: RealInterval) -> RealInterval:
    """Multiply an interval by a real scalar.

    The endpoints swap when ``x`` is negative, so the result is always a
    valid interval.

    Examples
    --------
    >>> scale(2, RealInterval(1, 3))
    [2.0, 6.0]
    >>> scale(-1, RealInterval(1, 2))
    [-2.0, -1.0]
    """
    x = float(x)
    if not math.isfinite(x):
        raise ValidationError(f"scale factor must be finite, got {x}")
    if x >= 0:
        return RealInterval(x * y.lo, x * y.hi)
    return RealInterval(x * y.hi, x * y.lo)


def add(u: RealInterval, v: RealInterval) -> RealInterval:
    return RealInterval(u.lo + v.lo, u.hi + v.hi)


def negate(u: RealInterval) -> RealInterval:
    return RealInterval(-u.hi, -u.lo)


def contains_zero(b: ComplexIntervalBox) -> bool:
    """True when the origin lies in the closed box ``b``."""
    return b.re.lo <= 0.0 <= b.re.hi and b.im.lo <= 0.0 <= b.im.hi
