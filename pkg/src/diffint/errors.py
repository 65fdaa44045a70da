"""Exception types raised by diffint."""


class DiffintError(ValueError):
    """Base class for all argument and data errors raised by this package."""


class DomainError(DiffintError):
    """A point lies outside the support of a measure."""


class DegreeError(DiffintError):
    """A polynomial degree exceeds what the family provides."""


class DesignError(DiffintError):
    """A filter design request violates its constraints."""


class InputError(DiffintError):
    """Sampled data is missing, too short or not uniformly spaced."""
