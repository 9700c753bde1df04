"""Exception hierarchy shared by all ncalg modules."""


class NcalgError(ValueError):
    """Base class for every error raised by the library."""


class StructuralError(NcalgError):
    """Operands live over different fields or alphabets."""


class DomainError(NcalgError):
    """An argument lies outside the domain of an operation."""


class PreconditionError(NcalgError):
    """A documented precondition of an operation does not hold."""
