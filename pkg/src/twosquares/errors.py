"""Exception hierarchy shared by all modules."""


class TwoSquaresError(Exception):
    """Base class for every error raised by this package."""


class InvalidInput(TwoSquaresError, ValueError):
    """The caller supplied an argument outside an operation's domain."""


class NotAnInvolution(InvalidInput):
    """The map is not closed on the set, or is not self-inverse there."""


class FixedPointArgument(InvalidInput):
    """A fixed point was given where a non-fixed point is required."""


class NotMember(InvalidInput):
    """An element was expected to belong to a set but does not."""


class EvenCardinality(InvalidInput):
    """A fixed point was requested from an involution on an even-sized set."""


class BoundaryCase(InvalidInput):
    """A triple sits on a windmill type boundary (2y = x or y = x + z)."""


class BadResidue(InvalidInput):
    """A prime is not congruent to 1 mod 4, or p != 4k + 1."""


class NotPrime(InvalidInput):
    pass


class NotOddPrime(InvalidInput):
    pass


class NoDecomposition(InvalidInput):
    """The integer is not a sum of two squares."""


class TooLarge(InvalidInput):
    """A rendered grid would exceed the configured size limit."""


class ArithmeticOverflow(TwoSquaresError, OverflowError):
    """A value left the supported fixed-width natural range."""


class InvariantViolation(TwoSquaresError, AssertionError):
    """An internal check that the mathematics guarantees has failed.

    Seeing this means there is a bug, not a bad input.
    """
