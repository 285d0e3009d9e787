"""Roots, Hurwitz margins and root sectors of point polynomials.

Coefficients are always stored lowest degree first: ``coeffs[n]`` multiplies
``s**n``.

The root finder is a vectorized Aberth-Ehrlich iteration so that large
batches of polynomials (vertex sets, Monte-Carlo samples) are solved in one
call.  Initial guesses sit on a circle of radius ``1 + max |c_n / c_N|``,
which encloses every root, equally spaced and rotated by a fixed irrational
phase so that symmetric inputs do not stall the iteration.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .angles import HALF_PI, Sector, angle_2pi
from .exceptions import NonConvergence, NotHurwitz, ValidationError

__all__ = [
    "PointPolynomial",
    "RootSet",
    "roots",
    "roots_batch",
    "hurwitz_margin",
    "is_hurwitz",
    "poly_from_roots",
    "root_sector",
    "sector_margins_batch",
    "MAX_SWEEPS",
    "BOUNDARY_TOL",
]

MAX_SWEEPS = 500
STEP_TOL = 1e-13
# Relative backward error |P(z)| / sum |c_n| |z|^n accepted after the sweep budget.
RESIDUAL_TOL = 1e-10
# Roots with real part above -BOUNDARY_TOL count as lying on the imaginary axis.
BOUNDARY_TOL = 1e-10
_PHASE = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class PointPolynomial:
    """Polynomial with exact complex coefficients ``c_0, ..., c_N``."""

    coeffs: tuple

    def __post_init__(self):
        cs = tuple(complex(c) for c in self.coeffs)
        if len(cs) < 2:
            raise ValidationError("a polynomial needs degree >= 1")
        if not all(math.isfinite(c.real) and math.isfinite(c.imag) for c in cs):
            raise ValidationError("polynomial coefficients must be finite")
        if abs(cs[-1]) == 0.0:
            raise ValidationError("leading coefficient must be nonzero")
        object.__setattr__(self, "coeffs", cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_real(self) -> bool:
        return all(c.imag == 0.0 for c in self.coeffs)

    def as_array(self) -> np.ndarray:
        return np.array(self.coeffs, dtype=complex)

    def __call__(self, s):
        out = 0j
        for c in reversed(self.coeffs):
            out = out * s + c
        return out

    def __str__(self):
        out = ""
        for n, c in enumerate(self.coeffs):
            power = "" if n == 0 else "s" if n == 1 else f"s^{n}"
            if c.imag != 0.0:
                sign, body = "+", f"({c.real:g}{c.imag:+g}i)"
            else:
                sign, body = ("-" if c.real < 0 else "+"), f"{abs(c.real):g}"
            if not out:
                out = ("-" if sign == "-" else "") + body + power
            else:
                out += f" {sign} {body}{power}"
        return out


@dataclass(frozen=True)
class RootSet:
    """All roots of a polynomial together with the monic residual."""

    roots: tuple
    residual: float
    sweeps: int = 0


def _as_batch(coeffs) -> np.ndarray:
    c = np.asarray(coeffs, dtype=complex)
    if c.ndim == 1:
        c = c[None, :]
    if c.ndim != 2 or c.shape[1] < 2:
        raise ValidationError("coefficient batch must have shape (M, N+1) with N >= 1")
    if not np.all(np.isfinite(c)):
        raise ValidationError("polynomial coefficients must be finite")
    if np.any(c[:, -1] == 0):
        raise ValidationError("leading coefficient must be nonzero")
    return c


def _horner(a, z):
    """Value and derivative of each row of ``a`` at the points ``z``."""
    n = a.shape[1] - 1
    p = np.broadcast_to(a[:, n : n + 1], z.shape).astype(complex)
    dp = np.zeros_like(z)
    for k in range(n - 1, -1, -1):
        dp = dp * z + p
        p = p * z + a[:, k : k + 1]
    return p, dp


def _backward_error(a, z):
    p, _ = _horner(a, z)
    absz = np.abs(z)
    bound = np.zeros(z.shape)
    for k in range(a.shape[1] - 1, -1, -1):
        bound = bound * absz + np.abs(a[:, k : k + 1])
    return np.abs(p), np.abs(p) / bound


def roots_batch(coeffs, max_sweeps: int = MAX_SWEEPS):
    """Roots of many polynomials of the same degree at once.

    Parameters
    ----------
    coeffs : array_like, shape (M, N+1) or (N+1,)
        Complex coefficients, lowest degree first.
    max_sweeps : int
        Iteration budget per polynomial.

    Returns
    -------
    roots : ndarray, shape (M, N)
    residual : ndarray, shape (M,)
        ``max |P(root)| / |c_N|`` per polynomial.
    sweeps : ndarray of int, shape (M,)

    Raises
    ------
    NonConvergence
        If some polynomial exhausts the sweep budget with a relative backward
        error above ``RESIDUAL_TOL``; the first such polynomial is attached.
    """
    c = _as_batch(coeffs)
    m, n1 = c.shape
    n = n1 - 1
    a = c / c[:, -1:]

    radius = 1.0 + np.max(np.abs(a[:, :-1]), axis=1)
    phases = 2.0 * math.pi * np.arange(n) / n + _PHASE
    z = radius[:, None] * np.exp(1j * phases)[None, :]

    done = np.zeros(m, dtype=bool)
    sweeps = np.zeros(m, dtype=int)
    eye = np.eye(n, dtype=bool)
    active = np.arange(m)
    for _ in range(max_sweeps):
        if active.size == 0:
            break
        za = z[active]
        aa = a[active]
        p, dp = _horner(aa, za)
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = p / dp
            diff = za[:, :, None] - za[:, None, :]
            diff[:, eye] = np.inf
            sigma = np.sum(1.0 / diff, axis=2)
            w = ratio / (1.0 - ratio * sigma)
        bad = ~np.isfinite(w)
        if np.any(bad):
            # stationary point or coincident estimates: nudge off it
            w[bad] = 1e-3 * (1.0 + np.abs(za[bad])) * np.exp(1j * _PHASE)
        z[active] = za - w
        sweeps[active] += 1
        conv = np.all(np.abs(w) < STEP_TOL * (1.0 + np.abs(za)), axis=1)
        done[active[conv]] = True
        active = active[~conv]

    abs_p, rel = _backward_error(a, z)
    residual = np.max(abs_p, axis=1)
    if not np.all(done):
        failed = np.flatnonzero(~done & (np.max(rel, axis=1) > RESIDUAL_TOL))
        if failed.size:
            k = int(failed[0])
            raise NonConvergence(
                f"root solver did not converge in {max_sweeps} sweeps "
                f"(relative residual {np.max(rel[k]):.3e})",
                coeffs=c[k],
            )
    return z, residual, sweeps


def roots(p: PointPolynomial) -> RootSet:
    """All ``N`` roots of ``p`` with multiplicity.

    Examples
    --------
    >>> roots(PointPolynomial((1, 1))).roots
    ((-1+0j),)
    """
    z, residual, sweeps = roots_batch(p.as_array())
    return RootSet(tuple(complex(v) for v in z[0]), float(residual[0]), int(sweeps[0]))


def hurwitz_margin(p: PointPolynomial) -> float:
    """Largest real part among the roots of ``p``; negative means Hurwitz."""
    return float(max(r.real for r in roots(p).roots))


def is_hurwitz(margin: float) -> bool:
    """Strict Hurwitz decision on a margin; the solver tolerance band counts as unstable."""
    return margin < -BOUNDARY_TOL


def poly_from_roots(roots_, leading: complex = 1.0) -> PointPolynomial:
    """Expand ``leading * prod(s - r)`` into ascending monomial coefficients."""
    leading = complex(leading)
    if leading == 0:
        raise ValidationError("leading coefficient must be nonzero")
    c = [leading]
    for r in roots_:
        r = complex(r)
        shifted = [0j] + c
        for k in range(len(c)):
            shifted[k] -= r * c[k]
        c = shifted
    return PointPolynomial(tuple(c))


def sector_margins_batch(z: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Per-row sector margins ``(alpha, beta)`` of a root array of shape (M, N).

    Rows containing a root outside the open left half-plane yield NaN.
    """
    z = np.atleast_2d(z)
    ang = angle_2pi(z)
    alpha = np.min(ang - HALF_PI, axis=1)
    beta = np.min(1.5 * math.pi - ang, axis=1)
    unstable = np.any(z.real >= 0.0, axis=1)
    alpha[unstable] = np.nan
    beta[unstable] = np.nan
    return alpha, beta


def root_sector(p: PointPolynomial) -> Sector:
    """Tightest sector ``[pi/2 + alpha, 3pi/2 - beta]`` holding every root of ``p``.

    Raises
    ------
    NotHurwitz
        If any root has nonnegative real part.
    """
    z = np.array(roots(p).roots)
    if np.any(z.real >= 0.0):
        raise NotHurwitz(f"polynomial has a root with Re >= 0: {p}", coeffs=p.coeffs)
    alpha, beta = sector_margins_batch(z[None, :])
    return Sector(float(alpha[0]), float(beta[0]))
