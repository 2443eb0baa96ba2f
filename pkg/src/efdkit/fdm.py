"""Fourier decomposition method: greedy forward (LTH) and backward (HTL)
scans extracting Fourier intrinsic band functions from the analytic
signal's Fourier coefficients.

A candidate band is admissible when the discrete instantaneous frequency
of its band-analytic signal never drops below -tol_if.  Samples where the
envelope vanishes have no defined phase; the forward scan skips the IF
check there (an equal-strength beat is absorbed into one band), while the
backward scan treats a vanishing envelope as a band split.  This pair of
policies makes the two scans' well-known inconsistency deterministic.
"""

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import InvalidInputError
from .modes import ModeSet
from .spectral import Signal

FDM_LTH = "fdm-lth"
FDM_HTL = "fdm-htl"

DEFAULT_TOL_IF = 1e-10

# relative envelope floor below which the phase is considered undefined
_AMP_FLOOR = 1e-12
# coefficients below this (relative to the largest) cannot change a band's
# admissibility verdict and are skipped during scans
_COEFF_FLOOR = 1e-13


@dataclass(frozen=True)
class BandAnalytic:
    """Band-limited analytic component with instantaneous amplitude/phase."""

    values: np.ndarray
    amplitude: np.ndarray
    phase: np.ndarray
    sample_rate_hz: float

    def instantaneous_frequency_hz(self) -> np.ndarray:
        """Central-difference IF of the unwrapped phase, one-sided at the
        endpoints."""
        d = np.gradient(self.phase)
        return d * self.sample_rate_hz / (2.0 * np.pi)


@dataclass(frozen=True)
class FibfSet:
    """Ordered FIBFs with the coefficient band edges that produced them.

    ``band_edges`` is [M_0, M_1, ..., M_K]: increasing from 0 for LTH,
    decreasing from U/2 for HTL.  ``mean`` is the subtracted sample mean,
    reported as a residual trend rather than a FIBF.
    """

    fibfs: Sequence[Signal]
    band_edges: Sequence[int]
    direction: str
    mean: float

    def __post_init__(self):
        object.__setattr__(self, "fibfs", tuple(self.fibfs))
        object.__setattr__(self, "band_edges", tuple(int(m) for m in self.band_edges))

    def bands(self):
        """Inclusive coefficient index ranges, one per FIBF."""
        e = self.band_edges
        if self.direction == FDM_LTH:
            return [(e[k] + 1, e[k + 1]) for k in range(len(e) - 1)]
        return [(e[k + 1], e[k] - 1) for k in range(len(e) - 1)]

    def to_mode_set(self) -> ModeSet:
        """Modes in ascending frequency order.

        The subtracted mean is folded back into the lowest band so modes
        compare directly against ground-truth components that carry their
        own means.
        """
        order = list(self.fibfs if self.direction == FDM_LTH
                     else reversed(self.fibfs))
        rate = self.fibfs[0].sample_rate_hz
        order[0] = Signal(order[0].samples + self.mean, rate)
        return ModeSet(modes=order, method=self.direction)


def fourier_coefficients(signal: Signal) -> np.ndarray:
    """Analytic-series coefficients a_m = (2/U) sum f(u) e^{-j m phi0 u}.

    The sample mean is subtracted first.  Returns an array of length U/2
    indexed by m; entry 0 is unused (zero).
    """
    u = len(signal)
    if u % 2 != 0:
        raise InvalidInputError("FDM requires an even signal length, got %d" % u)
    f = signal.samples - signal.samples.mean()
    a = 2.0 / u * np.fft.fft(f)[: u // 2]
    a[0] = 0.0
    return a


def band_analytic(coeffs: np.ndarray, lo: int, hi: int,
                  sample_rate_hz: float = 1.0) -> BandAnalytic:
    """Band-analytic signal z(u) = sum_{m=lo..hi} a_m e^{j m phi0 u}."""
    u = 2 * len(coeffs)
    if not (1 <= lo <= hi <= u // 2 - 1):
        raise InvalidInputError("band [%d, %d] outside [1, %d]" % (lo, hi, u // 2 - 1))
    full = np.zeros(u, dtype=complex)
    full[lo : hi + 1] = coeffs[lo : hi + 1]
    z = u * np.fft.ifft(full)
    return BandAnalytic(
        values=z,
        amplitude=np.abs(z),
        phase=np.unwrap(np.angle(z)),
        sample_rate_hz=sample_rate_hz,
    )


def _admissible(z: np.ndarray, tol_if: float, strict_envelope: bool) -> bool:
    """Non-decreasing-phase test, with the stated vanishing-envelope policy.

    The discrete IF is the central difference of the unwrapped phase (the
    same estimate :meth:`BandAnalytic.instantaneous_frequency_hz` reports),
    skipped wherever its stencil touches a vanishing-envelope sample."""
    amp = np.abs(z)
    peak = amp.max()
    if peak == 0.0:
        return True
    degenerate = amp < _AMP_FLOOR * peak
    if strict_envelope and degenerate.any():
        return False
    d = np.gradient(np.unwrap(np.angle(z)))
    skip = degenerate.copy()
    skip[:-1] |= degenerate[1:]
    skip[1:] |= degenerate[:-1]
    return bool(np.all(d[~skip] >= -tol_if))


def _scan(signal: Signal, tol_if: float, forward: bool):
    """Greedy maximal-band scan shared by the two directions.

    For each band the scan walks every candidate edge and keeps the
    farthest admissible one (exhaustive over prefixes), updating the
    band-analytic signal incrementally.  Negligible coefficients leave the
    candidate signal unchanged and carry the previous verdict.
    """
    u = len(signal)
    a = fourier_coefficients(signal)
    mean = float(signal.samples.mean())
    top = u // 2 - 1
    if top < 1:
        raise InvalidInputError("signal too short for FDM")
    phi0 = 2.0 * np.pi / u
    samples_idx = np.arange(u)
    step = np.exp((1j if forward else -1j) * phi0 * samples_idx)
    coeff_floor = _COEFF_FLOOR * np.abs(a).max()

    edges = [0 if forward else u // 2]
    bands = []
    while True:
        start = edges[-1] + 1 if forward else edges[-1] - 1
        stop = top if forward else 1
        if (forward and start > top) or (not forward and start < 1):
            break
        cur = np.exp(1j * phi0 * start * samples_idx)
        z = np.zeros(u, dtype=complex)
        best = start
        verdict = None
        rng = range(start, stop + 1) if forward else range(start, stop - 1, -1)
        for m in rng:
            if np.abs(a[m]) <= coeff_floor:
                if verdict is None:
                    verdict = _admissible(z + a[m] * cur, tol_if, not forward)
            else:
                z = z + a[m] * cur
                verdict = _admissible(z, tol_if, not forward)
            if verdict:
                best = m
            cur = cur * step
        edges.append(best)
        lo, hi = (edges[-2] + 1, best) if forward else (best, edges[-2] - 1)
        band = band_analytic(a, lo, hi, signal.sample_rate_hz)
        bands.append(band)
        if best == stop:
            break
    fibfs = [Signal(np.real(b.values), signal.sample_rate_hz) for b in bands]
    return fibfs, edges, mean, bands


def fdm_lth(signal: Signal, tol_if: float = DEFAULT_TOL_IF) -> FibfSet:
    """Forward (low-to-high) scan: bands [M_{k-1}+1, M_k] up to U/2 - 1."""
    fibfs, edges, mean, _ = _scan(signal, tol_if, forward=True)
    return FibfSet(fibfs=fibfs, band_edges=edges, direction=FDM_LTH, mean=mean)


def fdm_htl(signal: Signal, tol_if: float = DEFAULT_TOL_IF) -> FibfSet:
    """Backward (high-to-low) scan: bands [M_k, M_{k-1}-1] down to 1."""
    fibfs, edges, mean, _ = _scan(signal, tol_if, forward=False)
    return FibfSet(fibfs=fibfs, band_edges=edges, direction=FDM_HTL, mean=mean)


def fibf_tracks(signal: Signal, fibf_set: FibfSet):
    """Band-analytic components for each FIBF band, for TFR use."""
    a = fourier_coefficients(signal)
    return [band_analytic(a, lo, hi, signal.sample_rate_hz) for lo, hi in fibf_set.bands()]
