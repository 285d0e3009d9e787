import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ksector.exceptions import ValidationError
from ksector.interval import ComplexIntervalBox, RealInterval, add, contains_zero, negate, scale

finite = st.floats(min_value=-1e6, max_value=1e6, allow_nan=False, allow_infinity=False)


@st.composite
def intervals(draw):
    a, b = draw(finite), draw(finite)
    return RealInterval(min(a, b), max(a, b))


@pytest.mark.parametrize(
    "x, y, expected",
    [
        (2, (1, 3), (2, 6)),
        (-1, (1, 2), (-2, -1)),
        (0, (-5, 7), (0, 0)),
    ],
)
def test_scale_examples(x, y, expected):
    out = scale(x, RealInterval(*y))
    assert (out.lo, out.hi) == expected


@pytest.mark.parametrize(
    "u, v, expected",
    [
        ((1, 2), (3, 4), (4, 6)),
        ((-1, 1), (0, 0), (-1, 1)),
        ((0, 1), (-1, 0), (-1, 1)),
    ],
)
def test_add_examples(u, v, expected):
    out = add(RealInterval(*u), RealInterval(*v))
    assert (out.lo, out.hi) == expected


@pytest.mark.parametrize(
    "re, im, expected",
    [
        ((-1, 1), (-1, 1), True),
        ((0.9, 1.1), (-0.1, 0.1), False),
        ((0, 0), (0, 0), True),
    ],
)
def test_contains_zero_examples(re, im, expected):
    assert contains_zero(ComplexIntervalBox(RealInterval(*re), RealInterval(*im))) is expected


def test_invalid_intervals_rejected():
    with pytest.raises(ValidationError):
        RealInterval(2, 1)
    with pytest.raises(ValidationError):
        RealInterval(0, math.inf)
    with pytest.raises(ValidationError):
        RealInterval(math.nan, 0)
    with pytest.raises(ValidationError):
        scale(math.nan, RealInterval(0, 1))


def test_zero_width_interval_is_valid():
    iv = RealInterval.point(3.5)
    assert iv.is_degenerate and 3.5 in iv
    box = ComplexIntervalBox.point(1 - 2j)
    assert box.is_degenerate and (1 - 2j) in box and not box.is_real


def test_box_accepts_pairs():
    box = ComplexIntervalBox((1, 2), (3, 4))
    assert box.re == RealInterval(1, 2) and box.im == RealInterval(3, 4)
    assert ComplexIntervalBox(RealInterval(1, 2)).is_real


@given(x=st.floats(-10, 10), y=intervals(), t=st.floats(0, 1))
def test_scale_contains_products(x, y, t):
    point = min(max(y.lo + t * (y.hi - y.lo), y.lo), y.hi)
    out = scale(x, y)
    assert out.lo <= out.hi
    # round-to-nearest is monotone, so containment holds without slack
    assert out.lo <= x * point <= out.hi


@given(y=intervals())
def test_scale_identities(y):
    assert scale(1, y) == y
    assert scale(-1, scale(-1, y)) == y
    assert negate(negate(y)) == y
    assert scale(-1, y) == negate(y)


@pytest.mark.parametrize(
    "u, v, w",
    [
        ((1, 2), (3, 4), (-5, 0.5)),
        ((-0.25, 0.75), (0, 0), (8, 16)),
        ((-3, -1), (2, 2), (0.5, 1.5)),
    ],
)
def test_add_commutative_associative(u, v, w):
    u, v, w = RealInterval(*u), RealInterval(*v), RealInterval(*w)
    assert add(u, v) == add(v, u)
    assert add(add(u, v), w) == add(u, add(v, w))
