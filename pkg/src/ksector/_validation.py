"""Input coercion for the estimator interface."""

from __future__ import annotations

import numpy as np

from .exceptions import ValidationError
from .interval import ComplexIntervalBox, RealInterval
from .kharitonov import IntervalPolynomial
from .polyroot import PointPolynomial


def check_interval_polynomial(X) -> IntervalPolynomial:
    """Coerce ``X`` into an :class:`IntervalPolynomial`.

    Accepted forms are an ``IntervalPolynomial``, or an array of shape
    ``(N+1, 2)`` holding real ``[lo, hi]`` rows, or of shape ``(N+1, 4)``
    holding ``[re_lo, re_hi, im_lo, im_hi]`` rows, lowest degree first.
    """
    if isinstance(X, IntervalPolynomial):
        return X
    if isinstance(X, PointPolynomial):
        return IntervalPolynomial.from_point(X)
    arr = np.asarray(X, dtype=float)
    if arr.ndim != 2 or arr.shape[1] not in (2, 4):
        raise ValidationError(
            f"expected interval coefficients of shape (N+1, 2) or (N+1, 4), got {arr.shape}"
        )
    if not np.all(np.isfinite(arr)):
        raise ValidationError("interval endpoints must be finite")
    if arr.shape[1] == 2:
        return IntervalPolynomial.from_real(arr.tolist())
    boxes = tuple(
        ComplexIntervalBox(RealInterval(r[0], r[1]), RealInterval(r[2], r[3])) for r in arr
    )
    return IntervalPolynomial(boxes)


def check_point_coefficients(X, degree=None) -> np.ndarray:
    """Coerce ``X`` into a complex array of shape (M, N+1) of point polynomials."""
    if isinstance(X, PointPolynomial):
        X = [X.coeffs]
    elif isinstance(X, (list, tuple)) and X and all(isinstance(p, PointPolynomial) for p in X):
        X = [p.coeffs for p in X]
    arr = np.asarray(X, dtype=complex)
    if arr.ndim == 1:
        arr = arr[None, :]
    if arr.ndim != 2 or arr.shape[1] < 2:
        raise ValidationError(f"expected coefficients of shape (M, N+1) with N >= 1, got {arr.shape}")
    if degree is not None and arr.shape[1] != degree + 1:
        raise ValidationError(
            f"expected degree-{degree} polynomials ({degree + 1} coefficients), got {arr.shape[1]}"
        )
    if not np.all(np.isfinite(arr)):
        raise ValidationError("coefficients must be finite")
    if np.any(arr[:, -1] == 0):
        raise ValidationError("leading coefficient must be nonzero")
    return arr
