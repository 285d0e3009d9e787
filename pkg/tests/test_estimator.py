import math

import numpy as np
import pytest
from conftest import COMPLEX_IM, COMPLEX_RE, REAL_IV
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from ksector.estimator import KharitonovSector, SampledSector, VertexSector
from ksector.exceptions import NotCertified, ValidationError
from ksector.kharitonov import IntervalPolynomial, k4_vertices
from ksector.oracle import sample_block, vertex_sector
from ksector.polyroot import PointPolynomial
from ksector.sector import bisect

COMPLEX_ROWS = [list(r) + list(i) for r, i in zip(COMPLEX_RE, COMPLEX_IM)]


def test_get_params_and_clone():
    est = KharitonovSector(tol=1e-3, scan_check=True)
    assert est.get_params() == {"tol": 1e-3, "scan_check": True, "parallel": False}
    c = clone(est)
    assert c.get_params() == est.get_params() and c is not est
    assert SampledSector(n_samples=5).set_params(random_state=4).random_state == 4
    assert VertexSector().get_params() == {"max_vertices": 2**24}


def test_fit_from_arrays(complex_family, real_family):
    est = KharitonovSector().fit(COMPLEX_ROWS)
    assert est.polynomial_ == complex_family and not est.is_real_
    assert est.sector_.alpha == bisect(complex_family, "left").lo
    est = KharitonovSector().fit(REAL_IV)
    assert est.is_real_ and est.degree_ == 3
    assert est.polynomial_ == real_family
    assert est.sector_.alpha == est.sector_.beta


def test_fit_rejects_bad_input(unstable_family):
    with pytest.raises(NotCertified):
        KharitonovSector().fit(unstable_family)
    with pytest.raises(ValidationError):
        KharitonovSector().fit(np.ones((3, 3)))
    with pytest.raises(ValidationError):
        KharitonovSector().fit([[1, math.nan], [1, 1]])


def test_not_fitted():
    with pytest.raises(NotFittedError):
        KharitonovSector().transform([[1, 1]])


def test_transform_and_predict(real_family):
    est = KharitonovSector().fit(real_family)
    members = sample_block(real_family, 0, 0, 200)
    m = est.transform(members)
    assert m.shape == (200, 2)
    assert np.all(est.predict(members))
    assert est.score(members) == 1.0
    # a polynomial with a root at +1 is not Hurwitz: NaN margins, predicted outside
    bad = est.transform([[-1, 1]])
    assert np.isnan(bad).all() and not est.predict([[-1, 1]])[0]
    lo, hi = est.sector_degrees_
    assert lo + hi == pytest.approx(360.0)


def test_vertex_estimator_matches_oracle(complex_family):
    est = VertexSector().fit(complex_family)
    assert est.sector_ == vertex_sector(complex_family).sector
    verts = [v.coeffs for v in k4_vertices(IntervalPolynomial.from_real(REAL_IV))]
    assert VertexSector().fit(REAL_IV).predict(verts).all()


def test_sampled_estimator(complex_family):
    a = SampledSector(n_samples=2000, random_state=1).fit(complex_family)
    b = SampledSector(n_samples=2000, random_state=1, n_jobs=2).fit(complex_family)
    assert a.sector_ == b.sector_
    k = KharitonovSector().fit(complex_family)
    assert k.sector_.contains(a.sector_)


def test_point_polynomial_input():
    p = PointPolynomial((2, 3, 1))
    est = VertexSector().fit(p)
    assert est.transform(p)[0, 0] == pytest.approx(est.sector_.alpha)
