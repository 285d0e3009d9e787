"""Kharitonov certificates and containing root sectors for interval polynomials."""

__version__ = "0.1.0"

from .angles import Sector
from .estimator import KharitonovSector, SampledSector, VertexSector
from .exceptions import (
    DegenerateLeading,
    KSectorError,
    NonConvergence,
    NotCertified,
    NotHurwitz,
    NotHurwitzVertex,
    NotReal,
    ParseError,
    TooManyVertices,
    ValidationError,
)
from .interval import ComplexIntervalBox, RealInterval, add, contains_zero, negate, scale
from .kharitonov import (
    Certificate,
    IntervalPolynomial,
    certify,
    enumerate_all_vertices,
    k4_vertices,
    k8_vertices,
)
from .oracle import ConjectureReport, SectorReport, conjecture_experiment, sample_sector, vertex_sector
from .polyroot import PointPolynomial, RootSet, hurwitz_margin, poly_from_roots, root_sector, roots
from .problem import parse_problem
from .sector import (
    Bracket,
    bisect,
    kharitonov_sector,
    rotate,
    test_left_sector,
    test_right_sector,
)
