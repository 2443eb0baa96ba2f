"""Decomposition results shared by all methods."""

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import InvalidInputError
from .segmentation import Segmentation
from .spectral import Signal


@dataclass(frozen=True)
class ModeSet:
    """Ordered decomposed components plus the metadata that produced them.

    ``modes`` are Signals in ascending frequency-band order, each with the
    source signal's length and sample rate.  ``residual`` carries spectral
    content outside all bands (EFD with inward outer boundaries); it is
    None for methods that cover the whole axis.
    """

    modes: Sequence[Signal]
    method: str
    segmentation: Optional[Segmentation] = None
    residual: Optional[Signal] = None

    def __post_init__(self):
        if len(self.modes) == 0:
            raise InvalidInputError("mode set must contain at least one mode")
        lengths = {len(m) for m in self.modes}
        rates = {m.sample_rate_hz for m in self.modes}
        if len(lengths) != 1 or len(rates) != 1:
            raise InvalidInputError("modes must share one length and sample rate")
        object.__setattr__(self, "modes", tuple(self.modes))

    def __len__(self):
        return len(self.modes)

    @property
    def sample_rate_hz(self):
        return self.modes[0].sample_rate_hz

    def reconstruction(self) -> np.ndarray:
        """Sum of all modes (plus the residual when present)."""
        total = np.sum([m.samples for m in self.modes], axis=0)
        if self.residual is not None:
            total = total + self.residual.samples
        return total
