"""Acceptance criteria, one test (or one test per clause) per criterion.

Each test runs at the criterion's stated tolerance and runtime bound.  A
summary with one PASS/FAIL line per test is printed at the end of the run
(see ``conftest.py``).  Timed calls are made once beforehand so that import
and first-call overhead is not charged to the bound.
"""

import cmath
import math
import subprocess
import sys
import time

import numpy as np
import pytest
from conftest import match_roots, random_real_family, random_roots

from ksector.kharitonov import IntervalPolynomial, certify, k4_vertices, k8_vertices
from ksector.oracle import sample_block, sample_sector, vertex_sector
from ksector.polyroot import hurwitz_margin, poly_from_roots, roots, roots_batch
from ksector.sector import DEFAULT_TOL, bisect, kharitonov_sector, rotate

PI = math.pi

K8_REFERENCE = [
    (3.1475 - 0.23j, 6.655 - 0.425j, 4.4 - 0.15j, 0.9 + 0.1j),
    (3.1475 - 0.43j, 6.455 - 0.425j, 4.4 + 0.05j, 1.1 + 0.1j),
    (2.9475 - 0.23j, 6.655 - 0.225j, 4.6 - 0.15j, 0.9 - 0.1j),
    (2.9475 - 0.43j, 6.455 - 0.225j, 4.6 + 0.05j, 1.1 - 0.1j),
    (3.1475 - 0.23j, 6.455 - 0.225j, 4.4 - 0.15j, 1.1 - 0.1j),
    (3.1475 - 0.43j, 6.655 - 0.225j, 4.4 + 0.05j, 0.9 - 0.1j),
    (2.9475 - 0.23j, 6.455 - 0.425j, 4.6 - 0.15j, 1.1 + 0.1j),
    (2.9475 - 0.43j, 6.655 - 0.425j, 4.6 + 0.05j, 0.9 + 0.1j),
]
V1 = (3.1475 - 0.23j, 6.455 - 0.425j, 4.4 + 0.05j, 1.1 - 0.1j)
V2 = (2.9475 - 0.43j, 6.655 - 0.225j, 4.4 - 0.15j, 1.1 - 0.1j)
REAL_ATTAINING = (4.71, 7.91, 3.9, 1.1)

S_COMPLEX = (141.9432, 214.1573)
S_REAL = (126.7957, 233.2043)


def timed(fn, *args, **kwargs):
    fn(*args, **kwargs)
    t0 = time.perf_counter()
    out = fn(*args, **kwargs)
    return out, time.perf_counter() - t0


def intersects(bracket, lo_pi, hi_pi):
    return bracket.lo <= hi_pi * PI and lo_pi * PI <= bracket.hi


def test_criterion_01_k8_listing(complex_family):
    vs, dt = timed(k8_vertices, complex_family)
    assert [v.coeffs for v in vs] == [tuple(complex(c) for c in row) for row in K8_REFERENCE]
    assert dt < 0.010


def test_criterion_02_certificate(complex_family):
    cert, dt = timed(certify, complex_family)
    assert cert.hurwitz and len(cert.margins) == 8
    assert all(m < 0 for m in cert.margins)
    assert dt < 0.050


def test_criterion_03_left_bracket(complex_family):
    b, dt = timed(bisect, complex_family, "left", DEFAULT_TOL)
    assert b.width <= DEFAULT_TOL
    assert dt < 2.0
    assert intersects(b, 0.2527, 0.2528), f"bracket [{b.lo / PI:.6f}, {b.hi / PI:.6f}]π"


def test_criterion_04_right_bracket(complex_family):
    b, dt = timed(bisect, complex_family, "right", DEFAULT_TOL)
    assert b.width <= DEFAULT_TOL
    assert dt < 2.0
    assert intersects(b, 0.2725, 0.2726), f"bracket [{b.lo / PI:.6f}, {b.hi / PI:.6f}]π"


def test_criterion_05_real_bracket(real_family):
    b, dt = timed(bisect, real_family, "left", DEFAULT_TOL)
    assert b.width <= DEFAULT_TOL
    assert dt < 2.0
    assert intersects(b, 0.2005, 0.2006), f"bracket [{b.lo / PI:.6f}, {b.hi / PI:.6f}]π"


def test_criterion_05_real_ccw_symmetry(real_family):
    left = bisect(real_family, "left", DEFAULT_TOL)
    right, dt = timed(bisect, real_family, "right", DEFAULT_TOL)
    assert abs(left.lo - right.lo) <= 2 * DEFAULT_TOL
    assert abs(left.hi - right.hi) <= 2 * DEFAULT_TOL
    assert dt < 2.0


def test_criterion_06_vertex_sector_complex(complex_family):
    rep, dt = timed(vertex_sector, complex_family)
    lo, hi = rep.sector.degrees
    assert rep.count == 256
    assert abs(lo - 140.3779) <= 1e-3 and abs(hi - 215.679) <= 1e-3
    assert rep.attaining_left.coeffs == V1 and rep.attaining_right.coeffs == V2
    assert dt < 1.0


def test_criterion_06_vertex_sector_real(real_family):
    rep, dt = timed(vertex_sector, real_family)
    lo, hi = rep.sector.degrees
    assert rep.count == 16
    assert abs(lo - 126.7268) <= 1e-3 and abs(hi - 233.2732) <= 1e-3
    assert dt < 1.0


def test_criterion_06_real_attaining_vertex(real_family):
    rep = vertex_sector(real_family)
    assert rep.attaining_left.coeffs == REAL_ATTAINING, f"attained by {rep.attaining_left}"


def _sampled(P, count, expected, tol_deg):
    t0 = time.perf_counter()
    S = sample_sector(P, count, seed=0)
    dt = time.perf_counter() - t0
    K = kharitonov_sector(P)
    V = vertex_sector(P).sector
    assert K.alpha <= V.alpha and K.beta <= V.beta
    assert V.alpha <= S.sector.alpha and V.beta <= S.sector.beta
    lo, hi = S.sector.degrees
    assert abs(lo - expected[0]) <= tol_deg, f"lower edge {lo:.4f}° vs {expected[0]}°"
    assert abs(hi - expected[1]) <= tol_deg, f"upper edge {hi:.4f}° vs {expected[1]}°"
    return dt


@pytest.mark.slow
def test_criterion_07_sampled_complex(complex_family):
    assert _sampled(complex_family, 10**6, S_COMPLEX, 0.5) < 60.0


@pytest.mark.slow
def test_criterion_07_sampled_real(real_family):
    assert _sampled(real_family, 10**6, S_REAL, 0.5) < 60.0


def test_criterion_07_smoke_complex(complex_family):
    assert _sampled(complex_family, 10**4, S_COMPLEX, 2.0) < 2.0


def test_criterion_07_smoke_real(real_family):
    assert _sampled(real_family, 10**4, S_REAL, 2.0) < 2.0


def test_criterion_08_k8_to_k4_degeneration():
    rng = np.random.default_rng(2024)
    for _ in range(200):
        P = random_real_family(rng, int(rng.integers(1, 9)))
        k8 = k8_vertices(IntervalPolynomial(P.coeffs, is_real=False))
        for a, b in ((0, 5), (1, 4), (2, 7), (3, 6)):
            assert k8[a].coeffs == k8[b].coeffs
        assert {v.coeffs for v in k8} == {v.coeffs for v in k4_vertices(P)}


def test_criterion_09_rotation_property():
    rng = np.random.default_rng(9)
    worst = 0.0
    for _ in range(500):
        p = poly_from_roots(random_roots(rng, int(rng.integers(1, 9)), radius=5.0, min_sep=1e-2))
        theta = float(rng.uniform(-PI / 2, PI / 2))
        if abs(theta) >= PI / 2:
            continue
        rotated = rotate(IntervalPolynomial.from_point(p), theta).midpoint()
        expected = [cmath.exp(-1j * theta) * z for z in roots(p).roots]
        worst = max(worst, match_roots(roots(rotated).roots, expected))
    assert worst <= 1e-8, f"largest root mismatch {worst:.3e}"


def test_criterion_10_soundness_sampling(complex_family, real_family, unstable_family):
    for P in (complex_family, real_family):
        assert certify(P).hurwitz
        z, _, _ = roots_batch(sample_block(P, 10, 0, 1000))
        assert np.all(z.real.max(axis=1) < 0)
    assert not certify(unstable_family).hurwitz
    assert hurwitz_margin(certify(unstable_family).vertices[0]) >= 0


def test_criterion_11_determinism(problems_dir):
    cmd = [sys.executable, "-m", "ksector", "conjecture", "--format", "machine",
           "--samples", "20000", "--seed", "0", str(problems_dir / "complex_example.json")]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and len(a) > 1000
