"""Exception hierarchy shared by all modules."""


class MonomultError(Exception):
    """Base class for every error raised by the package."""


class ParseError(MonomultError):
    """Malformed monomial expression; `position` is a 0-based column."""

    def __init__(self, message, position=0, text=None):
        self.message = message
        self.position = position
        self.text = text
        super().__init__(f"{message} (at position {position})")


class ZeroIdeal(MonomultError):
    pass


class EmptySet(MonomultError):
    pass


class DimensionMismatch(MonomultError):
    pass


class ComputationLimit(MonomultError):
    """An intermediate size exceeded the configured cap."""


class NotSeparable(MonomultError):
    """No facet separates the query point; the witness precondition fails."""


class NotInClosure(MonomultError):
    pass


class InvalidWitness(MonomultError):
    pass


class ZeroPolynomial(MonomultError):
    pass
