"""Exception types shared across the package."""


class GinfanError(Exception):
    pass


class DimensionError(GinfanError, ValueError):
    """Shapes or lengths do not fit together."""


class DomainError(GinfanError, ValueError):
    """A parameter is outside the range an operation is defined for."""


class NoBasisError(GinfanError, ValueError):
    """The matrix has rank zero, so there is no column basis."""


class InvalidDirectionError(GinfanError, ValueError):
    pass


class IdealFormatError(GinfanError, ValueError):
    """An ideal file could not be parsed or describes a non-homogeneous ideal."""


class PreconditionError(GinfanError, ValueError):
    """E.g. ``dim I_d != d + 1`` where the bound needs it."""


class StabilityError(GinfanError):
    """Sampled coordinate changes disagree on the fan component.

    ``diagnostics`` carries the per-sample vertex sets.
    """

    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}


class EnumerationLimitError(GinfanError):
    def __init__(self, count, limit):
        super().__init__(
            f"brute force would enumerate {count} minors (limit {limit}); "
            "raise the limit to opt in")
        self.count = count
        self.limit = limit


class SamplingError(GinfanError):
    """Rejection sampling hit its attempt cap."""


class ChainConsistencyError(GinfanError):
    pass
