"""Exception hierarchy.

Every error raised on bad input derives from :class:`ThresholdError`, which is a
``ValueError`` so callers that only care about "bad input" can catch that.
"""


class ThresholdError(ValueError):
    pass


# parsing
class EmptyInput(ThresholdError):
    pass


class FirstTokenNonzero(ThresholdError):
    pass


class NegativeToken(ThresholdError):
    pass


class MalformedRunLength(ThresholdError):
    pass


class MalformedCode(ThresholdError):
    pass


class MalformedExpression(ThresholdError):
    pass


# structure
class NonUniformK(ThresholdError):
    pass


class NotUniform(ThresholdError):
    pass


class UniformityExceedsOrder(ThresholdError):
    pass


class DimensionMismatch(ThresholdError):
    pass


# spectra
class EmptySpectrum(ThresholdError):
    pass


class MissingZeroEigenvalue(ThresholdError):
    pass


class NonPositiveK(ThresholdError):
    pass


class SpectrumExceedsPhi(ThresholdError):
    pass


class MixedK(ThresholdError):
    pass


# Ferrers diagrams
class NegativeDegree(ThresholdError):
    pass


class NoBlocks(ThresholdError):
    pass


class RoundTripMismatch(ThresholdError):
    pass


# integrality
class AllZero(ThresholdError):
    pass


class NonPositiveR(ThresholdError):
    pass


# oracle
class NoConvergence(ArithmeticError):
    pass


class CountMismatch(ThresholdError):
    pass
