"""Scikit-learn style wrappers around the sector computations.

``fit`` takes an interval polynomial (or its endpoint array) and learns a
containing sector.  ``transform`` maps point polynomials to their root-sector
margins and ``predict`` tells whether their roots lie inside the fitted
sector.  Hyper-parameters follow the ``get_params``/``set_params`` protocol,
so the estimators can be cloned and grid-searched like any other.

>>> est = KharitonovSector().fit([[4.71, 4.91], [7.71, 7.91], [3.9, 4.1], [0.9, 1.1]])
>>> est.certificate_.hurwitz
True
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from ._validation import check_interval_polynomial, check_point_coefficients
from .exceptions import NotCertified
from .kharitonov import DEFAULT_MAX_VERTICES, certify
from .oracle import sample_sector, vertex_sector
from .polyroot import roots_batch, sector_margins_batch
from .sector import DEFAULT_TOL, kharitonov_brackets, sector_from_brackets

__all__ = ["KharitonovSector", "VertexSector", "SampledSector"]


class _SectorMixin:
    """``transform``/``predict``/``score`` shared by all sector estimators."""

    def transform(self, X):
        """Root-sector margins ``(alpha, beta)`` of each polynomial; NaN if not Hurwitz.

        Parameters
        ----------
        X : array_like of shape (M, N+1)
            Point polynomial coefficients, lowest degree first.

        Returns
        -------
        ndarray of shape (M, 2)
        """
        check_is_fitted(self, "sector_")
        C = check_point_coefficients(X)
        z, _, _ = roots_batch(C)
        a, b = sector_margins_batch(z)
        return np.column_stack([a, b])

    def predict(self, X):
        """Whether each polynomial has all its roots inside the fitted sector."""
        m = self.transform(X)
        with np.errstate(invalid="ignore"):
            return (m[:, 0] >= self.sector_.alpha) & (m[:, 1] >= self.sector_.beta)

    def score(self, X, y=None):
        """Fraction of polynomials in ``X`` whose roots lie inside the sector."""
        return float(np.mean(self.predict(X)))

    @property
    def sector_degrees_(self):
        check_is_fitted(self, "sector_")
        return self.sector_.degrees


class KharitonovSector(_SectorMixin, BaseEstimator):
    """Certified containing sector from rotated Kharitonov tests and bisection.

    Parameters
    ----------
    tol : float, default=1e-4*pi
        Bisection tolerance in radians.
    scan_check : bool, default=False
        Grid-scan the sector test after bisecting to detect non-monotonicity.
    parallel : bool, default=False
        Run the left and right bisections in two threads.

    Attributes
    ----------
    certificate_ : Certificate
    brackets_ : dict
        ``{'left': Bracket, 'right': Bracket}``.
    sector_ : Sector
    is_real_ : bool
    degree_ : int
    """

    def __init__(self, tol=DEFAULT_TOL, scan_check=False, parallel=False):
        self.tol = tol
        self.scan_check = scan_check
        self.parallel = parallel

    def fit(self, X, y=None):
        P = check_interval_polynomial(X)
        cert = certify(P)
        if not cert.hurwitz:
            raise NotCertified(
                f"Kharitonov vertex {cert.failing_index + 1} is not Hurwitz; no sector exists"
            )
        self.certificate_ = cert
        self.brackets_ = kharitonov_brackets(P, self.tol, self.scan_check, self.parallel)
        self.sector_ = sector_from_brackets(self.brackets_)
        self.is_real_ = P.is_real
        self.degree_ = P.degree
        self.polynomial_ = P
        return self


class VertexSector(_SectorMixin, BaseEstimator):
    """Sector spanned by the roots of every vertex polynomial."""

    def __init__(self, max_vertices=DEFAULT_MAX_VERTICES):
        self.max_vertices = max_vertices

    def fit(self, X, y=None):
        P = check_interval_polynomial(X)
        self.report_ = vertex_sector(P, self.max_vertices)
        self.sector_ = self.report_.sector
        self.degree_ = P.degree
        return self


class SampledSector(_SectorMixin, BaseEstimator):
    """Sector spanned by the roots of uniformly sampled members.

    Parameters
    ----------
    n_samples : int, default=10**6
    random_state : int, default=0
        Seed of the sample stream; results do not depend on ``n_jobs``.
    n_jobs : int, default=1
    """

    def __init__(self, n_samples=10**6, random_state=0, n_jobs=1):
        self.n_samples = n_samples
        self.random_state = random_state
        self.n_jobs = n_jobs

    def fit(self, X, y=None):
        P = check_interval_polynomial(X)
        self.report_ = sample_sector(P, self.n_samples, self.random_state, self.n_jobs)
        self.sector_ = self.report_.sector
        self.degree_ = P.degree
        return self

