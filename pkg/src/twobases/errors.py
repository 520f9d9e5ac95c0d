"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument is outside the mathematical domain of the operation."""


class UnsupportedBaseError(DomainError):
    """The base does not satisfy a precondition (e.g. its quasi-greedy
    expansion was not detected to be eventually periodic within the step
    budget)."""


class NoRootByCaseError(DomainError):
    """The pair (c, d) falls in a monotonicity case with no root in the
    requested bracket."""


class NotFoundWithinBoundsError(LookupError):
    """A search exhausted its configured bounds without finding the object."""
