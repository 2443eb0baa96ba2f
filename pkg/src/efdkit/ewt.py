"""Empirical wavelet transform: Meyer-type filter bank over a segmentation.

Filter responses are sampled on half-spectrum bins only.  Decomposition is
frequency-domain multiplication followed by the inverse transform; the bank
satisfies the partition-of-unity property (squared responses sum to one)
whenever the transition ratio obeys its non-overlap bound, which the
construction guarantees.
"""

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import InvalidInputError, InvalidSegmentationError
from .modes import ModeSet
from .segmentation import Segmentation
from .spectral import Signal

EWT_METHOD = "ewt"


def beta(x):
    """Smooth 0-to-1 ramp: 0 for x <= 0, 1 for x >= 1, and the quartic
    polynomial x^4 (35 - 84 x + 70 x^2 - 20 x^3) in between."""
    x = np.asarray(x, dtype=float)
    core = x ** 4 * (35.0 - 84.0 * x + 70.0 * x ** 2 - 20.0 * x ** 3)
    out = np.where(x <= 0.0, 0.0, np.where(x >= 1.0, 1.0, core))
    return out if out.ndim else float(out)


def compute_gamma(segmentation: Segmentation, signal_length: int) -> float:
    """Transition ratio ((R-1)/R) * min_n (w_{n+1}-w_n)/(w_{n+1}+w_n).

    Strictly below the non-overlap bound for every R >= 2, so transition
    phases of adjacent filters never overlap.
    """
    if signal_length < 2:
        raise InvalidInputError("signal_length must be >= 2")
    b = segmentation.boundaries
    diffs = np.diff(b)
    sums = b[1:] + b[:-1]
    if np.any(diffs <= 0) or np.any(sums <= 0):
        raise InvalidSegmentationError("degenerate adjacent boundaries")
    return (signal_length - 1) / signal_length * float(np.min(diffs / sums))


@dataclass(frozen=True)
class EwtFilterBank:
    """Scaling response plus N-1 wavelet responses on half-spectrum bins."""

    scaling_response: np.ndarray
    wavelet_responses: Sequence[np.ndarray]
    gamma: float
    taus: np.ndarray

    @property
    def responses(self):
        return [self.scaling_response, *self.wavelet_responses]

    def unity_residual(self) -> float:
        """Max deviation of the squared-response sum from 1 over all bins."""
        total = np.sum([r ** 2 for r in self.responses], axis=0)
        return float(np.max(np.abs(total - 1.0)))


def _cos_ramp(omega, center, tau):
    """Falling edge through ``center``: 1 below the transition, 0 above."""
    return np.cos(0.5 * np.pi * beta((tau + omega - center) / (2.0 * tau)))


def _sin_ramp(omega, center, tau):
    """Rising edge through ``center``: 0 below the transition, 1 above."""
    return np.sin(0.5 * np.pi * beta((tau + omega - center) / (2.0 * tau)))


def build_filter_bank(segmentation: Segmentation, signal_length: int) -> EwtFilterBank:
    """Meyer-type bank for the given boundaries, sampled at bin frequencies.

    The scaling function occupies the first segment; wavelet n spans
    boundaries n..n+1 with beta-smoothed transitions of half-width
    tau_n = gamma * w_n.  The last wavelet is clamped at pi with no upper
    transition.
    """
    gamma = compute_gamma(segmentation, signal_length)
    b = segmentation.boundaries
    n_seg = segmentation.n_segments
    omega = 2.0 * np.pi * np.arange(signal_length // 2 + 1) / signal_length
    taus = gamma * b

    w1, t1 = b[1], taus[1]
    scaling = np.where(
        omega <= w1 - t1, 1.0,
        np.where(omega <= w1 + t1, _cos_ramp(omega, w1, t1), 0.0),
    )

    wavelets = []
    for n in range(1, n_seg):
        lo, tlo = b[n], taus[n]
        rising = np.where(
            omega <= lo - tlo, 0.0,
            np.where(omega <= lo + tlo, _sin_ramp(omega, lo, tlo), 1.0),
        )
        if n == n_seg - 1:
            falling = 1.0  # upper boundary is pi: no transition
        else:
            hi, thi = b[n + 1], taus[n + 1]
            falling = np.where(
                omega <= hi - thi, 1.0,
                np.where(omega <= hi + thi, _cos_ramp(omega, hi, thi), 0.0),
            )
        wavelets.append(rising * falling)

    return EwtFilterBank(scaling, wavelets, gamma, taus)


def ewt_decompose(signal: Signal, segmentation: Segmentation) -> ModeSet:
    """Decompose a signal into one mode per segment (scaling band first).

    Each filter is applied once; with transition phases the single-pass
    mode sum is not an exact reconstruction, which is reported separately
    by :func:`reconstruction_residual`.
    """
    if len(signal) != segmentation.source_length:
        raise InvalidInputError(
            "signal length %d does not match segmentation source length %d"
            % (len(signal), segmentation.source_length)
        )
    bank = build_filter_bank(segmentation, len(signal))
    bins = np.fft.rfft(signal.samples)
    modes = [
        Signal(np.fft.irfft(bins * resp, n=len(signal)), signal.sample_rate_hz)
        for resp in bank.responses
    ]
    return ModeSet(modes=modes, method=EWT_METHOD, segmentation=segmentation)


def reconstruction_residual(signal: Signal, mode_set: ModeSet) -> float:
    """Relative l2 error between the mode sum and the input signal."""
    diff = mode_set.reconstruction() - signal.samples
    denom = np.linalg.norm(signal.samples)
    return float(np.linalg.norm(diff) / denom) if denom > 0 else float(np.linalg.norm(diff))
