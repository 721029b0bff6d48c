"""Exception types raised across the package."""


class KnotError(Exception):
    """Base class for all errors raised by seifertkit."""


class ParseError(KnotError):
    pass


class NonPositiveLetter(ParseError):
    pass


class EmptyWord(ParseError):
    pass


class NotAKnot(KnotError):
    """The braid closure has more than one component (or unused generators)."""


class InvalidPower(KnotError):
    pass


class InvalidSeifertMatrix(KnotError):
    """A matrix fails det(V - V^T) = 1 or is not square of even size."""


class DegenerateForm(KnotError):
    pass


class DimensionMismatch(KnotError):
    pass


class DefiniteForm(KnotError):
    """No class of the requested framing sign exists."""


class UnreachableFraming(KnotError):
    pass


class NotPrimitive(KnotError):
    pass


class NotUnitFraming(KnotError):
    pass


class NoAttestation(KnotError):
    """No framing +-1 annulus is attested, so no conclusion can be drawn."""


class NotCoprime(KnotError):
    pass
