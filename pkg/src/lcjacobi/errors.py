"""Exception types shared across the toolkit."""


class InvalidModelError(ValueError):
    """Coefficient model descriptor is malformed or out of range."""


class IndexRangeError(IndexError):
    """Query beyond the declared range of a tabulated model."""


class OverflowIndexError(OverflowError):
    """A recurrence entry or coefficient overflowed; carries the index."""

    def __init__(self, message: str, index: int):
        super().__init__(message)
        self.index = index


class TruncationError(RuntimeError):
    """A truncated sum failed to converge; carries the partial values."""

    def __init__(self, message: str, partial=None, tail_estimate=None):
        super().__init__(message)
        self.partial = partial
        self.tail_estimate = tail_estimate


class NotLimitCircleError(ValueError):
    """Operation requires a model classified LC_candidate."""


class SpectralPointError(ValueError):
    """Denominator of a resolvent coefficient vanished (z is spectral)."""

    def __init__(self, message: str, denominator=None):
        super().__init__(message)
        self.denominator = denominator


class BandConvergenceError(RuntimeError):
    """Interior-band extraction of a limit value did not stabilize."""
