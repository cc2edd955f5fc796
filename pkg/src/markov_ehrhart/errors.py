"""Shared exception types."""


class MismatchedDiscriminant(ValueError):
    """Arithmetic combined two quadratic elements over different fields."""


class IrrationalDirection(ValueError):
    """An edge direction is not proportional to an integer vector."""


class DegenerateTriangle(ValueError):
    """Vertices are collinear."""


class NotATriangle(ValueError):
    """A mutation image is a quadrilateral, not a triangle."""


class NonUnimodular(ValueError):
    """A map requested with congruence semantics has |det| != 1."""


class RootNotMaximal(ValueError):
    """A branch walk was started at an entry that is not the largest."""


class NonDivisible(ValueError):
    """An exact integer division has a nonzero remainder."""


class InvalidCompanion(ValueError):
    """A companion lift does not belong to the required residue class."""


class InsufficientSamples(ValueError):
    """A fit or verification was requested with too few samples."""


class InconsistentFit(Exception):
    """A candidate period fails on at least one sample.

    Carries the first violated sample.
    """

    def __init__(self, t, expected, actual):
        self.t = t
        self.expected = expected
        self.actual = actual
        super().__init__(f"sample t={t}: expected {expected}, got {actual}")


class BudgetExceeded(Exception):
    """A computation would exceed its configured budget."""
