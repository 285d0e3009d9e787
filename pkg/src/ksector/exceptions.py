"""Exception hierarchy shared by the library and the command-line tool."""


class KSectorError(Exception):
    """Base class for all errors raised by ksector."""

    exit_code = 2


class ValidationError(KSectorError, ValueError):
    """Input data violates a structural invariant."""

    exit_code = 2


class ParseError(ValidationError):
    """A problem file could not be read as structured data."""


class DegenerateLeading(ValidationError):
    """The leading coefficient box contains zero, so the degree may drop."""


class NotReal(ValidationError):
    """A real-only operation received a polynomial with imaginary parts."""


class NonConvergence(KSectorError, ArithmeticError):
    """The root solver did not meet its residual tolerance.

    Parameters
    ----------
    message : str
        Human readable description.
    coeffs : sequence of complex, optional
        Coefficients of the offending polynomial, lowest degree first.
    """

    exit_code = 3

    def __init__(self, message, coeffs=None):
        super().__init__(message)
        self.coeffs = None if coeffs is None else tuple(complex(c) for c in coeffs)


class NotHurwitz(KSectorError):
    """A polynomial has a root with nonnegative real part."""

    exit_code = 1

    def __init__(self, message, coeffs=None):
        super().__init__(message)
        self.coeffs = None if coeffs is None else tuple(complex(c) for c in coeffs)


class NotHurwitzVertex(NotHurwitz):
    """A vertex polynomial of an interval family is not Hurwitz."""


class NotCertified(KSectorError):
    """The Kharitonov certificate of the unrotated family fails."""

    exit_code = 1


class TooManyVertices(KSectorError):
    """Vertex enumeration would exceed the configured cap."""

    exit_code = 4
