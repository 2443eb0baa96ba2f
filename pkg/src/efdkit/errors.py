"""Exception types shared across the toolkit."""


class EfdkitError(Exception):
    """Base class for all efdkit errors."""


class InvalidInputError(EfdkitError):
    """Raised when an input signal, spectrum or band is malformed."""


class SegmentationInfeasibleError(EfdkitError):
    """Raised when a spectrum does not carry enough structure for the
    requested number of segments.

    Attributes
    ----------
    found : int
        Number of usable candidates (local maxima or boundary candidates)
        actually present in the magnitude profile.
    required : int
        Number of candidates the request would have needed.
    """

    def __init__(self, message, found, required):
        super().__init__(message)
        self.found = found
        self.required = required


class InvalidSegmentationError(EfdkitError):
    """Raised when a segmentation cannot drive filter construction,
    e.g. degenerate adjacent boundaries."""


class EmptyBandError(EfdkitError):
    """Raised when an ideal filter band contains no spectrum bins."""

    def __init__(self, message, band_index):
        super().__init__(message)
        self.band_index = band_index


class NumericError(EfdkitError):
    """Raised on internal numerical failures (non-finite results)."""
