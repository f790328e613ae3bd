"""Exception hierarchy shared by all modules."""


class NetstabError(Exception):
    """Base class; the CLI maps subclasses to exit codes."""

    exit_code = 3


class DomainError(NetstabError):
    """Input is outside the mathematical domain of an operation."""


class DegenerateResultant(DomainError):
    pass


class Unsupported(DomainError):
    pass


class NotStabilized(NetstabError):
    exit_code = 4


class SingularMatrix(DomainError):
    pass


class FieldMismatch(DomainError):
    """Arithmetic between different quadratic fields."""


class UnclassifiedExtensionPoint(NetstabError):
    """Singular points over fields of degree > 2 block a verdict."""

    exit_code = 4

    def __init__(self, message, factors=()):
        super().__init__(message)
        self.factors = list(factors)


class Undecidable(NetstabError):
    exit_code = 4


class NoSmoothMember(DomainError):
    pass


class PointNotOnQuadric(DomainError):
    pass


class DegenerateGale(DomainError):
    pass


class ProvenanceInvalid(DomainError):
    pass


class Degenerate(DomainError):
    pass


class UnknownSymbol(DomainError):
    pass


class ParseError(NetstabError):
    exit_code = 2

    def __init__(self, message, offset=None):
        if offset is not None:
            message = f"{message} at offset {offset}"
        super().__init__(message)
        self.offset = offset


class PolySyntaxError(ParseError):
    pass


class UnknownVariable(ParseError):
    pass


class NonHomogeneous(ParseError):
    pass
