"""Exception types raised by the library."""


class HyperstemError(Exception):
    """Base class for all library errors."""


class SpecError(HyperstemError, ValueError):
    """Malformed or invalid algebra spec (bad rank, unknown family, bad syntax)."""


class NotARootError(HyperstemError, ValueError):
    pass


class NotPositiveError(HyperstemError, ValueError):
    pass


class NotInStemError(HyperstemError, ValueError):
    pass


class NotStronglyOrthogonalError(HyperstemError, ValueError):
    pass


class NonCartanError(HyperstemError, ValueError):
    """A proposed simple system is not a basis of the root system."""


class DimensionMismatchError(HyperstemError, ValueError):
    pass


class ObstructionError(HyperstemError):
    """No structure of the requested kind exists (rank or dimension obstruction)."""


class InvalidRhoError(HyperstemError, ValueError):
    pass


class BadBMatrixError(HyperstemError, ValueError):
    pass


class NotAdmissibleError(HyperstemError, ValueError):
    pass


class NotAComplexStructureError(HyperstemError, ValueError):
    pass


class NotMatchingError(HyperstemError, ValueError):
    pass


class VerificationError(HyperstemError):
    """An identity that must hold exactly failed."""
