"""Interval polynomials, Kharitonov vertex polynomials and Hurwitz certificates."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .exceptions import DegenerateLeading, NotReal, TooManyVertices, ValidationError
from .interval import ComplexIntervalBox, RealInterval, contains_zero
from .polyroot import PointPolynomial, hurwitz_margin, is_hurwitz

__all__ = [
    "IntervalPolynomial",
    "Certificate",
    "K8_PATTERN",
    "K4_PATTERN",
    "k8_vertices",
    "k4_vertices",
    "certify",
    "vertex_count",
    "vertex_array",
    "enumerate_all_vertices",
    "DEFAULT_MAX_VERTICES",
]

DEFAULT_MAX_VERTICES = 2**24

L, U = 0, 1

# (real endpoint, imaginary endpoint) chosen for coefficient n, indexed by n % 4.
K8_PATTERN = (
    ((U, U), (U, L), (L, L), (L, U)),
    ((U, L), (L, L), (L, U), (U, U)),
    ((L, U), (U, U), (U, L), (L, L)),
    ((L, L), (L, U), (U, U), (U, L)),
    ((U, U), (L, U), (L, L), (U, L)),
    ((U, L), (U, U), (L, U), (L, L)),
    ((L, U), (L, L), (U, L), (U, U)),
    ((L, L), (U, L), (U, U), (L, U)),
)

# Real endpoint chosen for coefficient n, indexed by n % 4.
K4_PATTERN = (
    (L, L, U, U),
    (L, U, U, L),
    (U, U, L, L),
    (U, L, L, U),
)


@dataclass(frozen=True)
class IntervalPolynomial:
    """Family ``sum [a_n + i b_n] s**n`` with independent rectangular coefficients.

    Parameters
    ----------
    coeffs : sequence of ComplexIntervalBox
        Coefficient boxes, lowest degree first.
    is_real : bool, optional
        Whether every imaginary interval is exactly ``[0, 0]``.  Inferred from
        the boxes when omitted; an explicit ``True`` is checked against them.
    """

    coeffs: tuple
    is_real: Optional[bool] = None

    def __post_init__(self):
        boxes = tuple(
            b if isinstance(b, ComplexIntervalBox) else ComplexIntervalBox(*b) for b in self.coeffs
        )
        if len(boxes) < 2:
            raise ValidationError("an interval polynomial needs degree N >= 1")
        if contains_zero(boxes[-1]):
            raise DegenerateLeading(
                "leading coefficient box contains zero; the degree could drop and "
                "roots escape to infinity, so 0 must be excluded from [a_N + i b_N]"
            )
        all_real = all(b.is_real for b in boxes)
        flag = all_real if self.is_real is None else bool(self.is_real)
        if flag and not all_real:
            raise ValidationError("is_real=True but some imaginary interval is not [0, 0]")
        object.__setattr__(self, "coeffs", boxes)
        object.__setattr__(self, "is_real", flag)

    @classmethod
    def from_real(cls, intervals) -> IntervalPolynomial:
        """Real family from ``[(lo, hi), ...]``."""
        return cls(tuple(ComplexIntervalBox(RealInterval(*iv)) for iv in intervals), True)

    @classmethod
    def from_complex(cls, re, im) -> IntervalPolynomial:
        """Complex family from parallel lists of real and imaginary ``(lo, hi)`` pairs."""
        if len(re) != len(im):
            raise ValidationError("real and imaginary interval lists differ in length")
        boxes = tuple(
            ComplexIntervalBox(RealInterval(*r), RealInterval(*i)) for r, i in zip(re, im)
        )
        return cls(boxes)

    @classmethod
    def from_point(cls, p: PointPolynomial) -> IntervalPolynomial:
        return cls(tuple(ComplexIntervalBox.point(c) for c in p.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def endpoints(self) -> np.ndarray:
        """Array of shape (N+1, 2, 2): ``[n, part, side]`` with part 0=re, 1=im and side 0=lo, 1=hi."""
        return np.array(
            [[[b.re.lo, b.re.hi], [b.im.lo, b.im.hi]] for b in self.coeffs], dtype=float
        )

    def midpoint(self) -> PointPolynomial:
        return PointPolynomial(tuple(b.midpoint for b in self.coeffs))

    def contains(self, p: PointPolynomial) -> bool:
        if p.degree != self.degree:
            return False
        return all(c in b for c, b in zip(p.coeffs, self.coeffs))

    def __str__(self):
        parts = []
        for n, b in enumerate(self.coeffs):
            box = f"[{b.re.lo:g},{b.re.hi:g}]"
            if not self.is_real:
                box = f"({box}+i[{b.im.lo:g},{b.im.hi:g}])"
            parts.append(box if n == 0 else f"{box}s" if n == 1 else f"{box}s^{n}")
        return " + ".join(parts)


@dataclass(frozen=True)
class Certificate:
    """Outcome of the Kharitonov vertex test.

    ``margins`` holds the Hurwitz margins of the vertices that were evaluated;
    evaluation stops at the first failing vertex.
    """

    hurwitz: bool
    margins: tuple
    failing_index: Optional[int]
    vertices: tuple
    kind: str

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)


def _select(iv: RealInterval, choice: int) -> float:
    return iv.hi if choice == U else iv.lo


def k8_vertices(P: IntervalPolynomial) -> list[PointPolynomial]:
    """The eight complex Kharitonov polynomials ``K_1 ... K_8`` of ``P``."""
    out = []
    for pattern in K8_PATTERN:
        cs = []
        for n, box in enumerate(P.coeffs):
            ca, cb = pattern[n % 4]
            cs.append(complex(_select(box.re, ca), _select(box.im, cb)))
        out.append(PointPolynomial(tuple(cs)))
    return out


def k4_vertices(P: IntervalPolynomial) -> list[PointPolynomial]:
    """The four real Kharitonov polynomials ``K_1 ... K_4`` of a real family."""
    if not P.is_real:
        raise NotReal("k4_vertices needs a real interval polynomial")
    out = []
    for pattern in K4_PATTERN:
        cs = tuple(complex(_select(box.re, pattern[n % 4]), 0.0) for n, box in enumerate(P.coeffs))
        out.append(PointPolynomial(cs))
    return out


def certify(P: IntervalPolynomial, executor=None) -> Certificate:
    """Decide whether every member of ``P`` is Hurwitz via its Kharitonov polynomials.

    Real families use the four real vertices, complex ones the eight complex
    vertices.  Vertices are checked in index order and the test stops at the
    first one that is not Hurwitz.

    Parameters
    ----------
    P : IntervalPolynomial
    executor : concurrent.futures.Executor, optional
        When given, all vertex margins are computed concurrently; the result
        is identical to the sequential one (lowest failing index wins).
    """
    if P.is_real:
        vertices, kind = k4_vertices(P), "K4"
    else:
        vertices, kind = k8_vertices(P), "K8"

    # builtin map is lazy, so the sequential path stops at the first failure
    evaluate = map if executor is None else executor.map
    margins = []
    for i, m in enumerate(evaluate(hurwitz_margin, vertices)):
        margins.append(m)
        if not is_hurwitz(m):
            return Certificate(False, tuple(margins), i, tuple(vertices), kind)
    return Certificate(True, tuple(margins), None, tuple(vertices), kind)


def _free_components(P: IntervalPolynomial):
    """(n, part) pairs of non-degenerate interval components, in enumeration order."""
    ends = P.endpoints()
    free = []
    for n in range(P.degree + 1):
        for part in (0, 1):
            if ends[n, part, 0] != ends[n, part, 1]:
                free.append((n, part))
    return ends, free


def vertex_count(P: IntervalPolynomial) -> int:
    return 2 ** len(_free_components(P)[1])


def vertex_array(P: IntervalPolynomial, max_vertices: int = DEFAULT_MAX_VERTICES) -> np.ndarray:
    """All vertex polynomials of ``P`` as a complex array of shape (M, N+1).

    Rows follow lexicographic order over the non-degenerate components
    ``(re_0, im_0, re_1, im_1, ...)`` with the first component varying
    slowest and the lower endpoint first.
    """
    ends, free = _free_components(P)
    k = len(free)
    count = 2**k
    if count > max_vertices:
        raise TooManyVertices(
            f"{count} vertex polynomials (2^{k}) exceed the cap of {max_vertices}; "
            "raise --max-vertices to proceed"
        )
    idx = np.arange(count, dtype=np.int64)
    re = np.broadcast_to(ends[:, 0, 0], (count, P.degree + 1)).copy()
    im = np.broadcast_to(ends[:, 1, 0], (count, P.degree + 1)).copy()
    for j, (n, part) in enumerate(free):
        bit = (idx >> (k - 1 - j)) & 1
        target = re if part == 0 else im
        target[:, n] = np.where(bit == 1, ends[n, part, 1], ends[n, part, 0])
    return re + 1j * im


def enumerate_all_vertices(
    P: IntervalPolynomial, max_vertices: int = DEFAULT_MAX_VERTICES
) -> list[PointPolynomial]:
    """Every endpoint combination of ``P`` as a point polynomial.

    Raises
    ------
    TooManyVertices
        If ``2**(number of non-degenerate components)`` exceeds ``max_vertices``.
    """
    return [PointPolynomial(tuple(row)) for row in vertex_array(P, max_vertices)]


def pattern_of(vertex: PointPolynomial, P: IntervalPolynomial) -> Sequence[str]:
    """Endpoint labels (``'L'``/``'U'`` or ``'-'`` for degenerate) for each component of a vertex."""
    labels = []
    for c, box in zip(vertex.coeffs, P.coeffs):
        for v, iv in ((c.real, box.re), (c.imag, box.im)):
            if iv.is_degenerate:
                labels.append("-")
            elif v == iv.lo:
                labels.append("L")
            elif v == iv.hi:
                labels.append("U")
            else:
                labels.append("?")
    return labels

