"""Time-frequency representation: per-mode instantaneous amplitude and
frequency tracks, and their rasterization onto a time-frequency grid."""

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import InvalidInputError
from .fdm import BandAnalytic
from .spectral import Signal, analytic_signal

# envelope below this (relative to the track peak) has no defined phase;
# the IF is reported as 0 there
_AMP_FLOOR = 1e-12


@dataclass(frozen=True)
class TfrTrack:
    """Instantaneous amplitude and frequency along one mode."""

    time: np.ndarray
    inst_amplitude: np.ndarray
    inst_frequency_hz: np.ndarray

    def __post_init__(self):
        if not (len(self.time) == len(self.inst_amplitude) == len(self.inst_frequency_hz)):
            raise InvalidInputError("track sequences must share one length")
        if np.any(self.inst_amplitude < 0):
            raise InvalidInputError("instantaneous amplitude must be non-negative")


@dataclass(frozen=True)
class TfrRaster:
    """Amplitude magnitudes on a (time x frequency) grid."""

    time_axis: np.ndarray
    freq_axis: np.ndarray
    magnitude: np.ndarray
    clipped: int = 0

    def __post_init__(self):
        if self.magnitude.shape != (len(self.time_axis), len(self.freq_axis)):
            raise InvalidInputError("raster dimensions must match axes")
        if not np.all(np.isfinite(self.magnitude)):
            raise InvalidInputError("raster magnitudes must be finite")


def _track_from_amp_phase(amp, phase, sample_rate_hz):
    freq = np.gradient(phase) * sample_rate_hz / (2.0 * np.pi)
    degenerate = amp < _AMP_FLOOR * amp.max() if amp.max() > 0 else np.ones_like(amp, bool)
    freq = np.where(degenerate, 0.0, freq)
    time = np.arange(len(amp)) / sample_rate_hz
    return TfrTrack(time=time, inst_amplitude=amp, inst_frequency_hz=freq)


def mode_tfr(mode: Signal) -> TfrTrack:
    """Amplitude and IF of a mode via its analytic signal.

    IF is the central difference of the unwrapped analytic phase (one-sided
    at the endpoints), reported as 0 where the envelope vanishes.
    """
    z = analytic_signal(mode)
    return _track_from_amp_phase(z.amplitude, z.phase, mode.sample_rate_hz)


def band_tfr(band: BandAnalytic) -> TfrTrack:
    """Track taken directly from a band-analytic component (FDM path,
    no second Hilbert pass)."""
    return _track_from_amp_phase(band.amplitude, band.phase, band.sample_rate_hz)


def benchmark_tfr(analytic_components: Sequence[Signal]) -> list:
    """Ground-truth tracks: mode_tfr applied to each theoretical component."""
    return [mode_tfr(c) for c in analytic_components]


def raster_tfr(tracks: Sequence[TfrTrack], freq_axis) -> TfrRaster:
    """Deposit each track's amplitude at the nearest frequency bin per time
    step; overlapping deposits sum.  Out-of-range IF values are clipped to
    the edge bins and counted."""
    freq_axis = np.asarray(freq_axis, dtype=float)
    if freq_axis.ndim != 1 or freq_axis.size < 2:
        raise InvalidInputError("freq_axis must be a 1-D grid with >= 2 points")
    if not tracks:
        raise InvalidInputError("need at least one track")
    time = tracks[0].time
    for tr in tracks:
        if len(tr.time) != len(time) or not np.allclose(tr.time, time):
            raise InvalidInputError("tracks must share a time axis")
    mag = np.zeros((len(time), freq_axis.size))
    clipped = 0
    for tr in tracks:
        idx = np.searchsorted(0.5 * (freq_axis[1:] + freq_axis[:-1]), tr.inst_frequency_hz)
        clipped += int(np.sum((tr.inst_frequency_hz < freq_axis[0])
                              | (tr.inst_frequency_hz > freq_axis[-1])))
        np.add.at(mag, (np.arange(len(time)), idx), tr.inst_amplitude)
    return TfrRaster(time_axis=time, freq_axis=freq_axis, magnitude=mag, clipped=clipped)


def raster_rmse(a: TfrRaster, b: TfrRaster) -> float:
    """RMSE between two rasters over all cells (shared grid required)."""
    if a.magnitude.shape != b.magnitude.shape:
        raise InvalidInputError("rasters must share one grid")
    return float(np.sqrt(np.mean((a.magnitude - b.magnitude) ** 2)))
