"""Exception types raised across the package."""


class MclagError(Exception):
    pass


class DimensionMismatch(MclagError, ValueError):
    pass


class ComplexNotExact(MclagError):
    """Raised when d1 @ d2 != 0 for a would-be chain complex."""


class InvalidRepresentation(MclagError):
    pass


class NotACycle(MclagError):
    pass


class NotSymmetric(MclagError, ValueError):
    pass


class NotUnimodular(MclagError, ValueError):
    pass


class NotSymplectic(MclagError, ValueError):
    pass


class NotUpperTriangularBlockForm(MclagError, ValueError):
    pass


class CompatibilityViolation(MclagError):
    """The two halves of a fiber-product element disagree mod 2.

    This can only come from a bug; valid data never triggers it.
    """


class InvalidAction(MclagError):
    pass


class UnjustifiedSplitting(MclagError):
    pass


class UnknownJob(MclagError, KeyError):
    pass


class UnsupportedGenus(MclagError, ValueError):
    pass
