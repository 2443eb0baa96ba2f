"""Discrete Fourier machinery: half-spectrum transforms and analytic signals.

Conventions
-----------
The forward transform is the unnormalized DFT with kernel e^{-j w t}; the
inverse carries the 1/R factor.  Only the non-negative half of the spectrum
is stored (Hermitian symmetry), with bin k at normalized angular frequency
w_k = 2*pi*k/R in [0, pi].
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidInputError

#: Tag recorded on every Spectrum so downstream scaling is explicit.
FFT_CONVENTION = "fft-unnormalized-forward"


@dataclass(frozen=True)
class Signal:
    """Uniformly sampled real-valued time series.

    Parameters
    ----------
    samples : ndarray
        Real sample values, non-empty and finite.
    sample_rate_hz : float
        Sampling rate in Hz, strictly positive.
    """

    samples: np.ndarray
    sample_rate_hz: float

    def __post_init__(self):
        samples = np.asarray(self.samples, dtype=float)
        if samples.ndim != 1 or samples.size == 0:
            raise InvalidInputError("signal must be a non-empty 1-D sequence")
        if not np.all(np.isfinite(samples)):
            raise InvalidInputError("signal samples must be finite")
        if not (self.sample_rate_hz > 0):
            raise InvalidInputError("sample_rate_hz must be positive")
        object.__setattr__(self, "samples", samples)

    def __len__(self):
        return self.samples.size

    @property
    def duration_s(self):
        return self.samples.size / self.sample_rate_hz

    @property
    def times(self):
        return np.arange(self.samples.size) / self.sample_rate_hz


@dataclass(frozen=True)
class Spectrum:
    """Half-spectrum of a real signal: bins for non-negative frequencies.

    ``bins[k]`` corresponds to normalized angular frequency 2*pi*k/R where
    R = ``source_length``.  Length is floor(R/2) + 1.
    """

    bins: np.ndarray
    source_length: int
    sample_rate_hz: float
    normalization: str = field(default=FFT_CONVENTION)

    def __post_init__(self):
        bins = np.asarray(self.bins, dtype=complex)
        if bins.ndim != 1 or bins.size == 0:
            raise InvalidInputError("spectrum bins must be a non-empty 1-D sequence")
        if self.source_length < 1 or bins.size != self.source_length // 2 + 1:
            raise InvalidInputError(
                "spectrum has %d bins, inconsistent with source_length %d"
                % (bins.size, self.source_length)
            )
        object.__setattr__(self, "bins", bins)

    @property
    def omegas(self):
        """Normalized angular frequency of each bin, in [0, pi]."""
        return 2.0 * np.pi * np.arange(self.bins.size) / self.source_length

    @property
    def freqs_hz(self):
        return np.arange(self.bins.size) * self.sample_rate_hz / self.source_length

    @property
    def magnitudes(self):
        return np.abs(self.bins)


@dataclass(frozen=True)
class AnalyticSignal:
    """Complex analytic extension of a real signal (one-sided spectrum)."""

    values: np.ndarray
    sample_rate_hz: float

    def __post_init__(self):
        values = np.asarray(self.values, dtype=complex)
        if values.ndim != 1 or values.size == 0:
            raise InvalidInputError("analytic signal must be non-empty and 1-D")
        object.__setattr__(self, "values", values)

    @property
    def amplitude(self):
        return np.abs(self.values)

    @property
    def phase(self):
        """Unwrapped instantaneous phase in radians."""
        return np.unwrap(np.angle(self.values))


def forward_spectrum(signal: Signal) -> Spectrum:
    """Half-spectrum DFT of a signal (unnormalized forward transform)."""
    return Spectrum(
        bins=np.fft.rfft(signal.samples),
        source_length=len(signal),
        sample_rate_hz=signal.sample_rate_hz,
    )


def mirror_extend(signal: Signal) -> Signal:
    """Even (mirror) extension: the signal followed by its reversal.

    Filtering the extension instead of the raw signal suppresses the
    spectral leakage a non-periodic trend produces at the wrap-around
    point (leakage magnitudes fall off one order faster in frequency).
    The first half of any linear filter output is then taken as the
    result for the original samples.
    """
    return Signal(
        np.concatenate([signal.samples, signal.samples[::-1]]),
        signal.sample_rate_hz,
    )


def inverse_spectrum(spectrum: Spectrum) -> np.ndarray:
    """Real samples recovered from a half-spectrum (1/R-scaled inverse).

    The Hermitian extension is implied, so the output is real with length
    ``spectrum.source_length``.
    """
    return np.fft.irfft(spectrum.bins, n=spectrum.source_length)


def analytic_signal(signal: Signal) -> AnalyticSignal:
    """Analytic signal via the frequency-domain construction.

    DC (and the Nyquist bin for even lengths) are kept as-is, interior
    positive-frequency bins are doubled, negative frequencies are zeroed.
    The real part of the result equals the input samples to rounding.
    """
    r = len(signal)
    bins = np.fft.rfft(signal.samples)
    weights = np.full(bins.size, 2.0)
    weights[0] = 1.0
    if r % 2 == 0:
        weights[-1] = 1.0
    full = np.zeros(r, dtype=complex)
    full[: bins.size] = bins * weights
    values = np.fft.ifft(full)
    return AnalyticSignal(values=values, sample_rate_hz=signal.sample_rate_hz)
