"""Exception hierarchy.

Input and domain errors derive from ``LTError`` (a ``ValueError``); the
internal consistency failure ``ParityViolation`` is a ``RuntimeError`` so it
is never swallowed by code that catches bad input.
"""


class LTError(ValueError):
    """Base class for rejected inputs and domain preconditions."""


class NotReal(LTError):
    """A cyclotomic element is not fixed by complex conjugation."""


class NotPalindromic(LTError):
    pass


class OddSize(LTError):
    pass


class NotUnimodular(LTError):
    """det(A - A^T) != 1, so A is not a Seifert matrix of a knot."""


class NotCoprime(LTError):
    pass


class NotPrimePower(LTError):
    pass


class NotHomologySphereCover(LTError):
    """The n-fold branched cover has nontrivial first homology."""

    def __init__(self, order, n=None):
        self.order = order
        self.n = n
        super().__init__(f"|H1|={order}")


class ParityViolation(RuntimeError):
    """An averaged signature came out half-integral.

    This can only happen through an implementation bug, so it is raised
    loudly rather than rounded away.
    """


class BadAlpha(LTError):
    """A point of the circle that cannot be parsed or used as requested."""


class UnknownKnot(LTError):
    pass


class CatalogError(LTError):
    pass


class ParseError(CatalogError):
    pass


class ValidationError(CatalogError):
    pass


class DuplicateName(CatalogError):
    pass
