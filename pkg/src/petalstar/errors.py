class PetalError(ValueError):
    """Base class for every error raised by petalstar."""


class ZeroLeadingCoefficient(PetalError):
    pass


class NonzeroConstantTerm(PetalError):
    pass


class InvalidParameters(PetalError):
    pass


class InadmissibleInput(PetalError):
    pass


class InsufficientCoefficients(PetalError):
    pass


class DomainViolation(PetalError):
    pass


class SeriesUnreliable(PetalError):
    pass


class UnknownFunctional(PetalError):
    pass
