"""Kharitonov containing sectors by coefficient rotation and bisection.

Rotating every coefficient ``n`` of a family by ``exp(i*n*theta)`` turns each
member ``p(s)`` into ``p(exp(i*theta) s)``, whose roots are the roots of ``p``
turned clockwise by ``theta``.  If the rotated family still passes the
Kharitonov certificate, no root of the original family has an angle in
``(pi/2, pi/2 + theta]``.  Negative ``theta`` does the same for the lower edge.
Bisection on ``theta`` then yields the largest certified margin on each side.

The rotated coefficients are computed with interval arithmetic and are
therefore a dependent (overestimated) enclosure; the resulting sector is
valid but generally larger than the tightest one.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .angles import HALF_PI, Sector
from .exceptions import DegenerateLeading, NotCertified, ValidationError
from .interval import ComplexIntervalBox, add, contains_zero, scale
from .kharitonov import IntervalPolynomial, certify

__all__ = [
    "Sector",
    "Bracket",
    "rotate",
    "test_left_sector",
    "test_right_sector",
    "bisect",
    "scan_check",
    "kharitonov_brackets",
    "kharitonov_sector",
    "sector_from_brackets",
    "DEFAULT_TOL",
]

DEFAULT_TOL = 1e-4 * math.pi
SCAN_POINTS = 64


@dataclass(frozen=True)
class Bracket:
    """Bisection result: the predicate holds at ``lo`` and fails at ``hi``."""

    lo: float
    hi: float
    iterations: int
    certified_at_lo: bool
    side: str = "left"
    anomalies: tuple = field(default=())

    @property
    def width(self) -> float:
        return self.hi - self.lo


def rotate(P: IntervalPolynomial, theta: float) -> IntervalPolynomial:
    """Interval enclosure of the family ``{p(exp(i*theta) s) : p in P}``.

    Positive ``theta`` turns every root clockwise, negative counter-clockwise.

    Raises
    ------
    ValidationError
        If ``theta`` is outside ``(-pi/2, pi/2)``.
    DegenerateLeading
        If the rotated leading box contains zero.
    """
    theta = float(theta)
    if not (-HALF_PI < theta < HALF_PI):
        raise ValidationError(f"rotation angle {theta} outside (-pi/2, pi/2)")
    if theta == 0.0:
        return P
    boxes = []
    for n, box in enumerate(P.coeffs):
        c, s = math.cos(n * theta), math.sin(n * theta)
        re = add(scale(c, box.re), scale(-s, box.im))
        im = add(scale(s, box.re), scale(c, box.im))
        boxes.append(ComplexIntervalBox(re, im))
    if contains_zero(boxes[-1]):
        raise DegenerateLeading(f"rotated leading coefficient box contains zero at theta={theta}")
    return IntervalPolynomial(tuple(boxes), is_real=False)


def test_left_sector(P: IntervalPolynomial, alpha: float) -> bool:
    """Whether ``[pi/2 + alpha, 3pi/2)`` is certified to contain every root angle of ``P``."""
    return certify(rotate(P, alpha)).hurwitz


def test_right_sector(P: IntervalPolynomial, beta: float) -> bool:
    """Whether ``(pi/2, 3pi/2 - beta]`` is certified to contain every root angle of ``P``."""
    return certify(rotate(P, -beta)).hurwitz


_TESTS = {"left": test_left_sector, "right": test_right_sector}


def _side_test(side):
    try:
        return _TESTS[side]
    except KeyError:
        raise ValidationError(f"side must be 'left' or 'right', got {side!r}") from None


def scan_check(P: IntervalPolynomial, bracket: Bracket, side: str = "left", points: int = SCAN_POINTS):
    """Grid-scan ``(0, pi/2)`` for angles where the sector test disagrees with ``bracket``.

    Bisection assumes the test is monotone in the angle: true below some
    threshold and false above it.  Returns the grid angles that contradict
    the bracket (true above ``hi`` or false below ``lo``).
    """
    test = _side_test(side)
    grid = np.linspace(0.0, HALF_PI, points + 2)[1:-1]
    bad = []
    for theta in grid:
        ok = test(P, float(theta))
        if (theta <= bracket.lo and not ok) or (theta >= bracket.hi and ok):
            bad.append(float(theta))
    return tuple(bad)


def bisect(
    P: IntervalPolynomial,
    side: str = "left",
    tol: float = DEFAULT_TOL,
    scan: bool = False,
) -> Bracket:
    """Bracket the largest certified sector margin on one side.

    The lower end starts at 0, where the plain certificate holds, and the
    upper end at ``pi/2``, which is never certified (a negative real root
    would land on the imaginary axis).  The interval is halved until its
    width is at most ``tol``.

    Parameters
    ----------
    P : IntervalPolynomial
        Family whose Kharitonov certificate holds.
    side : {'left', 'right'}
        ``'left'`` bounds the angle from ``pi/2`` (clockwise rotation),
        ``'right'`` from ``3pi/2`` (counter-clockwise rotation).
    tol : float
        Target bracket width in radians.
    scan : bool
        Also run :func:`scan_check` and attach any anomalies to the result.

    Raises
    ------
    NotCertified
        If ``P`` itself fails the Kharitonov certificate.
    """
    test = _side_test(side)
    tol = float(tol)
    if not tol > 0:
        raise ValidationError(f"tolerance must be positive, got {tol}")
    base = certify(P)
    if not base.hurwitz:
        raise NotCertified(
            f"family is not certified Hurwitz (Kharitonov vertex {base.failing_index + 1} fails)"
        )
    lo, hi = 0.0, HALF_PI
    certified_lo = False
    iterations = 0
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        iterations += 1
        if test(P, mid):
            lo, certified_lo = mid, True
        else:
            hi = mid
    bracket = Bracket(lo, hi, iterations, certified_lo or base.hurwitz, side)
    if scan:
        anomalies = scan_check(P, bracket, side)
        bracket = Bracket(lo, hi, iterations, bracket.certified_at_lo, side, anomalies)
    return bracket


def kharitonov_brackets(
    P: IntervalPolynomial,
    tol: float = DEFAULT_TOL,
    scan: bool = False,
    parallel: bool = False,
) -> dict:
    """Left and right brackets of ``P``.

    Real families have root sets symmetric about the real axis, so only the
    left side is bisected and reused for the right.
    """
    if P.is_real:
        left = bisect(P, "left", tol, scan)
        return {"left": left, "right": left}
    if parallel:
        with ThreadPoolExecutor(max_workers=2) as pool:
            fl = pool.submit(bisect, P, "left", tol, scan)
            fr = pool.submit(bisect, P, "right", tol, scan)
            return {"left": fl.result(), "right": fr.result()}
    return {"left": bisect(P, "left", tol, scan), "right": bisect(P, "right", tol, scan)}


def sector_from_brackets(brackets: dict) -> Sector:
    # only the lower ends carry a certificate
    return Sector(brackets["left"].lo, brackets["right"].lo)


def kharitonov_sector(
    P: IntervalPolynomial,
    tol: float = DEFAULT_TOL,
    scan: bool = False,
    parallel: bool = False,
) -> Sector:
    """Certified containing sector of ``P`` built from the lower bracket ends."""
    return sector_from_brackets(kharitonov_brackets(P, tol, scan, parallel))
