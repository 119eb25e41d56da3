"""Exception hierarchy.

Every error is a ``ValueError`` so callers that only care about bad input can
catch that; the CLI maps the classes onto exit codes.
"""


class BettiError(ValueError):
    """Base class for all library errors."""


class MalformedInput(BettiError):
    pass


class DimensionMismatch(MalformedInput):
    pass


class IndexOutOfRange(MalformedInput):
    pass


class ConstantMonomial(BettiError):
    pass


class InvalidMove(BettiError):
    pass


class TooFewVariables(BettiError):
    pass


class SizeExceedsAmbient(BettiError):
    pass


class DegreeZero(BettiError):
    pass


class MixedDegrees(MalformedInput):
    pass


class ZeroDegreeGenerator(MalformedInput):
    pass


class MathPreconditionError(BettiError):
    """A mathematical hypothesis (Borel, stable, admissible...) does not hold."""


class NotBorel(MathPreconditionError):
    pass


class NotStable(MathPreconditionError):
    pass


class NotAdmissible(MathPreconditionError):
    def __init__(self, message, degree=None):
        super().__init__(message)
        self.degree = degree


class TailNotStabilized(MathPreconditionError):
    pass


class PreconditionViolated(MathPreconditionError):
    pass


class SizeGuardError(BettiError):
    pass


class TooManyGenerators(SizeGuardError):
    pass


class AmbientTooLarge(SizeGuardError):
    pass
