"""Exception hierarchy.

Every failure the library can report is a ``RamifyError``.  The CLI maps
``PrecisionExhausted`` to exit code 2 and every other subclass to exit code 1.
"""


class RamifyError(Exception):
    """Base class for all library errors."""


class PrecisionExhausted(RamifyError):
    """A valuation or equality could not be certified at the working precision."""


class ZeroElement(RamifyError):
    pass


class NegativeValuation(RamifyError):
    pass


class DivisionByZero(RamifyError, ZeroDivisionError):
    pass


class FieldMismatch(RamifyError):
    pass


class NotMonic(RamifyError):
    pass


class Unsupported(RamifyError):
    """The request lies outside the supported fragment (documented limits)."""


class ValidationError(RamifyError):
    """Input description failed validation; ``where`` names the offending field."""

    def __init__(self, message, where=None):
        super().__init__(message if where is None else f"{where}: {message}")
        self.where = where


class HenselHypothesisFailed(RamifyError):
    pass


class ActionNotClosed(RamifyError):
    pass


class NotARoot(RamifyError):
    pass


class DegreeMismatch(RamifyError):
    pass


class NotPExtension(RamifyError):
    pass


class InvariantsUncertified(RamifyError):
    pass


class GeneratorSearchFailed(RamifyError):
    pass


class NotCaseIII(RamifyError):
    pass


class EquivalenceViolation(RamifyError):
    pass


class NoDecomposition(RamifyError):
    pass


class RamificationAssertion(RamifyError):
    """An internal consistency assertion between two routes failed."""


class NotDegreeOne(RamifyError):
    pass


class NotFaithful(RamifyError):
    pass


class NotWellRamified(RamifyError):
    pass


class ConductorMismatch(RamifyError):
    pass


class DepthMismatch(RamifyError):
    pass


class NotAbelian(RamifyError):
    pass


class NonIntegralInstance(RamifyError):
    pass


class IdentityViolation(RamifyError):
    pass


class UnknownSuite(RamifyError):
    pass


class UnknownName(RamifyError):
    pass
