"""Exceptions shared across the package."""


class ClosureEscape(Exception):
    """A generator mapped a coset outside the table being partitioned.

    Signals that the reduction depth N is too small or the table is not
    closed under the acting subgroup.
    """


class BudgetExceeded(Exception):
    """An enumeration grew past the configured coset budget."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class OrbitCollision(Exception):
    """Two anchors claimed as distinct met in one orbit (counterexample)."""

    def __init__(self, message, key=None, labels=()):
        super().__init__(message)
        self.key = key
        self.labels = labels


class ResolutionExceeded(Exception):
    """A Schwartz-function operation needs a finer cell partition than the cap."""
