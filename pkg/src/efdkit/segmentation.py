"""Spectrum segmentation: local maxima, lowest minima, and the improved
adaptive-sorting technique.

All three techniques partition the normalized frequency axis [0, pi] into
contiguous bands.  The classic techniques pin the outer boundaries to 0 and
pi; the improved technique lets both ends move inward, which is what
excludes trivial noise-only segments.
"""

from dataclasses import dataclass

import numpy as np

from .errors import InvalidInputError, InvalidSegmentationError, SegmentationInfeasibleError
from .spectral import Spectrum

LOCAL_MAXIMA = "local-maxima"
LOWEST_MINIMA = "lowest-minima"
IMPROVED_ADAPTIVE = "improved-adaptive"


@dataclass(frozen=True)
class MagnitudeProfile:
    """Half-spectrum magnitudes with their bin-to-frequency mapping."""

    magnitudes: np.ndarray
    source_length: int
    sample_rate_hz: float

    def __post_init__(self):
        mags = np.asarray(self.magnitudes, dtype=float)
        if mags.ndim != 1 or mags.size == 0:
            raise InvalidInputError("magnitude profile must be non-empty and 1-D")
        if not np.all(np.isfinite(mags)) or np.any(mags < 0):
            raise InvalidInputError("magnitudes must be finite and non-negative")
        object.__setattr__(self, "magnitudes", mags)

    @classmethod
    def from_spectrum(cls, spectrum: Spectrum) -> "MagnitudeProfile":
        return cls(
            magnitudes=spectrum.magnitudes,
            source_length=spectrum.source_length,
            sample_rate_hz=spectrum.sample_rate_hz,
        )

    def bin_omega(self, k):
        """Normalized angular frequency of bin ``k``."""
        return 2.0 * np.pi * np.asarray(k) / self.source_length


@dataclass(frozen=True)
class Segmentation:
    """Ordered boundary frequencies delimiting contiguous bands of [0, pi].

    ``boundaries`` holds N+1 strictly increasing normalized frequencies for
    N segments.  ``technique`` records which segmentation produced them.
    """

    boundaries: np.ndarray
    technique: str
    source_length: int
    sample_rate_hz: float

    def __post_init__(self):
        bounds = np.asarray(self.boundaries, dtype=float)
        if bounds.size < 2:
            raise InvalidSegmentationError("segmentation needs at least 2 boundaries")
        if np.any(np.diff(bounds) <= 0):
            raise InvalidSegmentationError("boundaries must be strictly increasing")
        if bounds[0] < 0 or bounds[-1] > np.pi + 1e-12:
            raise InvalidSegmentationError("boundaries must lie in [0, pi]")
        object.__setattr__(self, "boundaries", bounds)

    @property
    def n_segments(self):
        return self.boundaries.size - 1

    @property
    def boundaries_hz(self):
        return self.boundaries * self.sample_rate_hz / (2.0 * np.pi)

    def to_json_dict(self):
        return {
            "technique": self.technique,
            "boundaries_normalized": list(self.boundaries),
            "boundaries_hz": list(self.boundaries_hz),
        }


def find_local_maxima(magnitudes) -> np.ndarray:
    """Indices of strict local maxima; plateau runs collapse to their
    lowest-index bin.  Endpoints are never maxima."""
    mags = np.asarray(magnitudes, dtype=float)
    n = mags.size
    out = []
    i = 1
    while i < n - 1:
        if mags[i] <= mags[i - 1]:
            i += 1
            continue
        # mags[i] > mags[i-1]: walk the plateau starting at i
        j = i
        while j + 1 < n and mags[j + 1] == mags[i]:
            j += 1
        if j + 1 < n and mags[j + 1] < mags[i]:
            out.append(i)
        i = j + 1
    return np.array(out, dtype=int)


def _top_k_by_magnitude(indices, magnitudes, k):
    """First ``k`` indices ranked by descending magnitude, ties broken
    toward lower frequency; returned in ascending frequency order."""
    order = sorted(range(len(indices)), key=lambda i: (-magnitudes[indices[i]], indices[i]))
    picked = [indices[i] for i in order[:k]]
    return np.sort(np.array(picked, dtype=int))


def _argmin_range(mags, lo, hi, inclusive):
    """Index of the minimum of ``mags`` on [lo, hi] (or its open interior);
    ties resolve to the lowest index."""
    if inclusive:
        a, b = lo, hi + 1
    else:
        a, b = lo + 1, hi
    if a >= b:
        raise InvalidSegmentationError(
            "no bins available between candidate frequencies %d and %d" % (lo, hi)
        )
    return a + int(np.argmin(mags[a:b]))


def segment_local_maxima(profile: MagnitudeProfile, n_segments: int) -> Segmentation:
    """Midpoint boundaries between the retained spectrum peaks.

    The first ``n_segments - 1`` largest local maxima are retained; each
    internal boundary is the midpoint of consecutive peak frequencies with
    a virtual peak at 0.  Outer boundaries are pinned to 0 and pi.
    """
    if n_segments < 1:
        raise InvalidInputError("n_segments must be >= 1")
    mags = profile.magnitudes
    maxima = find_local_maxima(mags)
    needed = n_segments - 1
    if maxima.size < needed:
        raise SegmentationInfeasibleError(
            "found %d local maxima, need %d" % (maxima.size, needed),
            found=maxima.size, required=needed,
        )
    peaks = _top_k_by_magnitude(list(maxima), mags, needed)
    peak_omegas = np.concatenate(([0.0], profile.bin_omega(peaks)))
    internal = 0.5 * (peak_omegas[:-1] + peak_omegas[1:])
    boundaries = np.concatenate(([0.0], internal, [np.pi]))
    return Segmentation(boundaries, LOCAL_MAXIMA, profile.source_length, profile.sample_rate_hz)


def segment_lowest_minima(profile: MagnitudeProfile, n_segments: int) -> Segmentation:
    """Boundaries at the lowest spectrum minimum between retained peaks.

    Peak retention matches the local maxima technique (first N-1 largest,
    with a virtual peak at frequency 0); each internal boundary is the
    argmin of the magnitudes strictly between consecutive peaks, ties
    resolving to the lowest frequency.
    """
    if n_segments < 1:
        raise InvalidInputError("n_segments must be >= 1")
    mags = profile.magnitudes
    maxima = find_local_maxima(mags)
    needed = n_segments - 1
    if maxima.size < needed:
        raise SegmentationInfeasibleError(
            "found %d local maxima, need %d" % (maxima.size, needed),
            found=maxima.size, required=needed,
        )
    peaks = _top_k_by_magnitude(list(maxima), mags, needed)
    edges = np.concatenate(([0], peaks))
    internal_bins = [
        _argmin_range(mags, edges[i], edges[i + 1], inclusive=False)
        for i in range(edges.size - 1)
    ]
    boundaries = np.concatenate((
        [0.0], profile.bin_omega(np.array(internal_bins, dtype=int)), [np.pi],
    ))
    return Segmentation(boundaries, LOWEST_MINIMA, profile.source_length, profile.sample_rate_hz)


def segment_improved(profile: MagnitudeProfile, n_segments: int) -> Segmentation:
    """Adaptive-sorting segmentation used by the EFD.

    Candidates are the magnitudes at frequency 0, at pi, and at every local
    maximum.  The frequencies of the N largest candidates (ties toward lower
    frequency) become sorted anchors; each boundary is the magnitude argmin
    between consecutive anchors, or the shared anchor itself when two
    anchors coincide.  The outer boundaries may sit strictly inside (0, pi),
    in which case the spectral content outside them is left to the caller
    as a residual.
    """
    if n_segments < 1:
        raise InvalidInputError("n_segments must be >= 1")
    mags = profile.magnitudes
    last = mags.size - 1
    candidates = [0] + list(find_local_maxima(mags)) + [last]
    if len(candidates) < n_segments:
        raise SegmentationInfeasibleError(
            "found %d boundary candidates, need %d" % (len(candidates), n_segments),
            found=len(candidates), required=n_segments,
        )
    anchors = _top_k_by_magnitude(candidates, mags, n_segments)
    edges = np.concatenate(([0], anchors, [last]))
    boundary_bins = []
    prev = -1
    for i in range(edges.size - 1):
        if edges[i] == edges[i + 1]:
            b = int(edges[i])
        else:
            # keep boundaries strictly increasing even when anchors are
            # adjacent bins: never search at or below the previous boundary
            lo = max(int(edges[i]), prev + 1)
            b = _argmin_range(mags, lo, int(edges[i + 1]), inclusive=True)
        if b <= prev:
            raise InvalidSegmentationError(
                "degenerate adjacent anchors around bin %d" % b
            )
        boundary_bins.append(b)
        prev = b
    boundaries = profile.bin_omega(np.array(boundary_bins, dtype=int))
    return Segmentation(boundaries, IMPROVED_ADAPTIVE, profile.source_length, profile.sample_rate_hz)
