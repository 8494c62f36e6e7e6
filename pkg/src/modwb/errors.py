"""Exception hierarchy.

Every error raised on purpose by the library derives from :class:`ModwbError`,
so the CLI can map "the computation failed" to a single exit code.
"""


class ModwbError(Exception):
    pass


class PreconditionError(ModwbError, ValueError):
    """An operation was called outside its documented domain."""


# exact core
class PrecisionError(ModwbError, IndexError):
    """A coefficient beyond the known precision was requested."""


class NotInvertible(ModwbError, ZeroDivisionError):
    pass


class UnsupportedEtaQuotient(PreconditionError):
    pass


class DivergenceRisk(PreconditionError):
    pass


class PoleAtPrime(ModwbError, ZeroDivisionError):
    pass


# classical forms
class UnsupportedWeight(PreconditionError):
    pass


class BadPrimeForLevel(PreconditionError):
    pass


class PrecisionExhausted(PrecisionError):
    pass


class NotNormalized(PreconditionError):
    pass


class NotAnEigenvector(ModwbError):
    pass


class IncompleteEigenData(PreconditionError):
    pass


# curves
class SingularCurve(PreconditionError):
    pass


class BadReduction(PreconditionError):
    pass


class Unsupported(PreconditionError):
    pass


class InconsistentCounts(ModwbError):
    pass


# Siegel
class NotSymplectic(PreconditionError):
    pass


class NotPositiveDefinite(PreconditionError):
    pass


class InsufficientCoefficients(PrecisionError):
    pass


# zeta
class SingularSatake(PreconditionError):
    pass


class UnresolvedSatake(ModwbError):
    pass


class DegreeMismatch(ModwbError):
    pass
