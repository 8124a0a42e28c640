"""Exception hierarchy shared across the library."""


class ChernlabError(Exception):
    """Base class for all library errors."""


class ValidationError(ChernlabError):
    pass


class DivisionByZero(ChernlabError):
    pass


class IncompatibleField(ChernlabError):
    pass


class IncompatibleRing(ChernlabError):
    pass


class UnassignedVariable(ChernlabError):
    pass


class ResourceLimit(ChernlabError):
    pass


class NotSymmetric(ChernlabError):
    pass


class NotFiniteDimensional(ChernlabError):
    pass


class InfiniteDimensional(ChernlabError):
    """The complement of a leading-term ideal is provably infinite."""


class NotLocal(ChernlabError):
    pass


class NonIntegralCoefficient(ChernlabError):
    pass


class PrecisionExceeded(ChernlabError):
    pass


class DegreeCeiling(ChernlabError):
    pass


class LambdaOutOfRange(ChernlabError):
    pass


class InexactDivision(ChernlabError):
    pass


class NotAUnit(ChernlabError):
    pass


class NotACharacterTable(ValidationError):
    """Orthogonality or consistency failure in a character table."""


class NegativeStructureConstant(ChernlabError):
    pass


class InconsistentFusion(ChernlabError):
    pass


class UnknownGroup(ChernlabError):
    pass


class NonIntegralMultiplicity(ChernlabError):
    pass


class NoMatchingClass(ChernlabError):
    pass


class CertificateMismatch(ChernlabError):
    """A pipeline clause failed; the message names the first failed clause."""


class SchemaError(ChernlabError):
    pass


class UsageError(ChernlabError):
    pass
