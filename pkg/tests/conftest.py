import math
from pathlib import Path

import numpy as np
import pytest

from ksector.kharitonov import IntervalPolynomial

PROBLEMS = Path(__file__).resolve().parents[1] / "problems"

COMPLEX_RE = [(2.9475, 3.1475), (6.455, 6.655), (4.4, 4.6), (0.9, 1.1)]
COMPLEX_IM = [(-0.43, -0.23), (-0.425, -0.225), (-0.15, 0.05), (-0.1, 0.1)]
REAL_IV = [(4.71, 4.91), (7.71, 7.91), (3.9, 4.1), (0.9, 1.1)]


@pytest.fixture
def complex_family():
    return IntervalPolynomial.from_complex(COMPLEX_RE, COMPLEX_IM)


@pytest.fixture
def real_family():
    return IntervalPolynomial.from_real(REAL_IV)


@pytest.fixture
def unstable_family():
    # contains s^2 + 1 (roots on the axis) and s^2 - s + 1 (roots in the RHP)
    return IntervalPolynomial.from_real([(1, 1), (-1, 1), (1, 1)])


@pytest.fixture
def problems_dir():
    return PROBLEMS


def random_real_family(rng, degree):
    centers = rng.uniform(-5, 5, degree + 1)
    widths = rng.uniform(0, 1, degree + 1) * (rng.random(degree + 1) > 0.2)
    centers[-1] = rng.uniform(1, 3)
    widths[-1] = min(widths[-1], 0.5)
    return IntervalPolynomial.from_real(
        [(c - w / 2, c + w / 2) for c, w in zip(centers, widths)]
    )


def random_roots(rng, n, radius=5.0, min_sep=1e-2, left_half=False):
    out = []
    while len(out) < n:
        r = radius * math.sqrt(rng.random())
        z = r * np.exp(1j * rng.uniform(0, 2 * math.pi))
        if left_half:
            z = complex(-abs(z.real) - 0.05, z.imag)
        if all(abs(z - w) >= min_sep for w in out):
            out.append(complex(z))
    return out


def match_roots(a, b):
    """Greedy nearest-neighbour pairing; returns the largest pair distance."""
    b = list(b)
    worst = 0.0
    for z in a:
        k = min(range(len(b)), key=lambda j: abs(z - b[j]))
        worst = max(worst, abs(z - b[k]))
        b.pop(k)
    return worst


# ---------------------------------------------------------------------------
# Acceptance summary: one line per criterion at the end of the session.

_ACCEPTANCE = []


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    if "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    _ACCEPTANCE.append((name, report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _ACCEPTANCE:
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{status}  {name}")
