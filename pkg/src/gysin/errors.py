"""Exception hierarchy for the gysin package."""


class GysinError(Exception):
    """Base class for all package errors."""


class NotDivisible(GysinError):
    """Exact polynomial division has no polynomial quotient."""


class NotNormalCrossing(GysinError):
    """A denominator factor cannot be normalized for the requested residue order."""


class NotSimplePole(GysinError):
    """A variable does not sit in the denominator as a standalone simple pole."""


class NegativeMultiplicity(GysinError):
    """Multiset subtraction drove a multiplicity below zero."""


class NotWeylSymmetric(GysinError):
    """The input class is not symmetric under the space's Weyl group."""


class ResidualVariable(GysinError):
    """A residue variable survived into a push-forward result."""


class NotPolynomial(GysinError):
    """A localization sum failed to reduce to a polynomial."""


class ParseError(GysinError):
    """Input text does not match the grammar.

    Carries the 0-based position of the offending token when known.
    """

    def __init__(self, message, position=None):
        if position is not None:
            message = "%s (at position %d)" % (message, position)
        super().__init__(message)
        self.position = position


class UnknownVariable(ParseError):
    """A parsed variable does not exist for the given space."""
