"""Exception hierarchy shared by all tscalc modules.

Everything raised on purpose derives from :class:`CalcError`.  Parse-time
problems additionally derive from :class:`ParseError` so callers (notably
the CLI) can distinguish "bad input text" from "bad mathematics".
"""


class CalcError(Exception):
    """Base class for all tscalc errors."""


class ParseError(CalcError):
    """Base class for errors raised while parsing input text."""


class ExprSyntaxError(ParseError):
    """Malformed expression or scale text.

    Carries the character offset of the problem; renders as
    ``"<offset>: <message>"`` for single-line CLI display.
    """

    def __init__(self, position: int, message: str):
        self.position = position
        self.message = message
        super().__init__(f"{position}: {message}")


class InvalidSegment(ParseError):
    """Segment bounds out of order, non-finite, or an empty point set."""


class InvalidStep(ParseError):
    """Non-positive step in a uniform-grid scale spec."""


class PointNotInDomain(CalcError):
    """The point is outside the domain of the requested operation."""


class PointNotInScale(PointNotInDomain):
    """The point does not belong to the time scale at all."""


class EmptyDomain(CalcError):
    """The derived domain (e.g. after trimming an endpoint) is empty."""


class DegenerateRange(CalcError):
    """An operation that needs a < b was given a degenerate range."""


class DomainError(CalcError):
    """Evaluation hit a mathematical domain violation (ln of a
    non-positive number, division by zero, overflow, ...)."""

    def __init__(self, message: str, t: float | None = None, node: str | None = None):
        self.t = t
        self.node = node
        super().__init__(message)


class NoConvergence(CalcError):
    """Iterative refinement did not settle within the allowed iterations."""


class AlphaOutOfRange(CalcError):
    """A convex-combination weight was outside [0, 1]."""


class ExponentOutOfRange(CalcError):
    """An inequality exponent p was outside its admissible range."""


class QuadratureFailure(CalcError):
    """Adaptive quadrature hit its depth cap with the error estimate
    still above tolerance."""

    def __init__(self, message: str, err_estimate: float = float("nan")):
        self.err_estimate = err_estimate
        super().__init__(message)


class SignChange(CalcError):
    """A function required to be one-signed changes sign on the range."""
