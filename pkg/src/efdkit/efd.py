"""Empirical Fourier decomposition: improved segmentation plus an ideal
(zero-transition) band-pass filter bank realized as exact spectral masks.

Bands follow a half-open bin convention (a bin exactly on an internal
boundary belongs to the higher band; the last band is right-closed), so the
bands partition the covered bins and reconstruction is exact.  Bins outside
the outer boundaries are returned as a residual signal, never dropped
silently.
"""

from dataclasses import dataclass, replace
from typing import Sequence, Tuple

import numpy as np

from .errors import EmptyBandError, InvalidInputError
from .modes import ModeSet
from .segmentation import MagnitudeProfile, Segmentation, segment_improved
from .spectral import Signal, forward_spectrum, mirror_extend

EFD_METHOD = "efd"

# bin-position snap tolerance: boundaries produced by segmentation sit on
# exact bin frequencies up to rounding of 2*pi*k/R
_SNAP = 1e-6


@dataclass(frozen=True)
class IdealFilterBank:
    """Disjoint ascending bin ranges, one per segment.

    ``bands`` holds (lo, hi) inclusive bin-index pairs.  Each filter is
    exactly 1 on its band and exactly 0 elsewhere.
    """

    bands: Sequence[Tuple[int, int]]
    n_bins: int

    def __post_init__(self):
        object.__setattr__(self, "bands", tuple(tuple(b) for b in self.bands))

    def mask(self, n) -> np.ndarray:
        lo, hi = self.bands[n]
        out = np.zeros(self.n_bins, dtype=bool)
        out[lo : hi + 1] = True
        return out

    def coverage(self) -> np.ndarray:
        """Boolean mask of bins covered by any band."""
        out = np.zeros(self.n_bins, dtype=bool)
        for lo, hi in self.bands:
            out[lo : hi + 1] = True
        return out


def build_ideal_bank(segmentation: Segmentation, spectrum_bins: int) -> IdealFilterBank:
    """Bin ranges for each segment under the half-open convention."""
    if spectrum_bins < 1:
        raise InvalidInputError("spectrum_bins must be positive")
    r = segmentation.source_length
    pos = segmentation.boundaries * r / (2.0 * np.pi)
    snapped = np.where(np.abs(pos - np.round(pos)) < _SNAP, np.round(pos), pos)
    edges = np.ceil(snapped).astype(int)
    bands = []
    for n in range(segmentation.n_segments):
        lo = edges[n]
        if n == segmentation.n_segments - 1:
            # last band right-closed at its boundary bin
            hi = int(np.floor(snapped[n + 1] + _SNAP))
        else:
            hi = edges[n + 1] - 1
        hi = min(hi, spectrum_bins - 1)
        if lo > hi:
            raise EmptyBandError("segment %d contains no spectrum bins" % n, band_index=n)
        bands.append((int(lo), int(hi)))
    return IdealFilterBank(bands=bands, n_bins=spectrum_bins)


def apply_ideal_bank(signal: Signal, bank: IdealFilterBank, method=EFD_METHOD,
                     segmentation=None) -> ModeSet:
    """Mask the half-spectrum per band and invert: one real mode per band,
    plus the uncovered content as the residual."""
    bins = np.fft.rfft(signal.samples)
    if bank.n_bins != bins.size:
        raise InvalidInputError(
            "bank built for %d bins, signal has %d" % (bank.n_bins, bins.size)
        )
    modes = [
        Signal(np.fft.irfft(np.where(bank.mask(n), bins, 0.0), n=len(signal)),
               signal.sample_rate_hz)
        for n in range(len(bank.bands))
    ]
    leftover = np.where(bank.coverage(), 0.0, bins)
    residual = Signal(np.fft.irfft(leftover, n=len(signal)), signal.sample_rate_hz)
    return ModeSet(modes=modes, method=method, segmentation=segmentation, residual=residual)


def efd_decompose(signal: Signal, n_modes: int, extension: str = "mirror") -> ModeSet:
    """Full EFD pipeline: spectrum, improved segmentation, ideal filtering.

    Returns ``n_modes`` real modes in ascending band order; their sum plus
    the residual reproduces the input to rounding.

    With ``extension="mirror"`` (the default) the segmentation still comes
    from the raw spectrum, but filtering runs on the even extension of the
    signal and the modes are truncated back, which keeps non-periodic
    trends from leaking across bands.  ``extension="none"`` filters the
    raw samples directly, making each mode the exact masked-DFT inverse of
    the input.
    """
    if n_modes < 1:
        raise InvalidInputError("n_modes must be >= 1")
    if extension not in ("mirror", "none"):
        raise InvalidInputError("extension must be 'mirror' or 'none'")
    spectrum = forward_spectrum(signal)
    profile = MagnitudeProfile.from_spectrum(spectrum)
    segmentation = segment_improved(profile, n_modes)
    if extension == "none":
        bank = build_ideal_bank(segmentation, spectrum.bins.size)
        return apply_ideal_bank(signal, bank, segmentation=segmentation)
    extended = mirror_extend(signal)
    seg_ext = replace(segmentation, source_length=len(extended))
    bank = build_ideal_bank(seg_ext, len(extended) // 2 + 1)
    full = apply_ideal_bank(extended, bank, segmentation=seg_ext)
    n = len(signal)
    modes = [Signal(m.samples[:n], signal.sample_rate_hz) for m in full.modes]
    residual = Signal(full.residual.samples[:n], signal.sample_rate_hz)
    return ModeSet(modes=modes, method=EFD_METHOD, segmentation=segmentation,
                   residual=residual)
