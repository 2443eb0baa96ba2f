import numpy as np
import pytest

from efdkit.errors import InvalidInputError, SegmentationInfeasibleError
from efdkit.segmentation import (
    MagnitudeProfile,
    Segmentation,
    find_local_maxima,
    segment_improved,
    segment_local_maxima,
    segment_lowest_minima,
)
from efdkit.spectral import Signal, forward_spectrum


def _profile_from_mags(mags, source_length=None, rate=1.0):
    mags = np.asarray(mags, dtype=float)
    if source_length is None:
        source_length = 2 * (mags.size - 1)
    return MagnitudeProfile(mags, source_length, rate)


def _tone_profile(freqs_hz, amps, fs=1000.0, n=1000):
    t = np.arange(n) / fs
    x = np.sum([a * np.cos(2 * np.pi * f * t) for f, a in zip(freqs_hz, amps)],
               axis=0)
    return MagnitudeProfile.from_spectrum(forward_spectrum(Signal(x, fs)))


def test_find_local_maxima_basic():
    assert list(find_local_maxima([0, 1, 0, 2, 0])) == [1, 3]
    # endpoints never qualify
    assert list(find_local_maxima([5, 1, 2, 1, 9])) == [2]
    assert list(find_local_maxima([1, 2, 3, 4])) == []


def test_find_local_maxima_plateau_collapses_to_lowest_index():
    assert list(find_local_maxima([0, 2, 2, 2, 0])) == [1]
    # plateau running into the end is not a maximum
    assert list(find_local_maxima([0, 2, 2])) == []


def test_segmentation_validation():
    from efdkit.errors import InvalidSegmentationError

    with pytest.raises(InvalidSegmentationError):
        Segmentation(np.array([0.0, 1.0, 1.0]), "x", 100, 1.0)
    with pytest.raises(InvalidSegmentationError):
        Segmentation(np.array([0.0, 4.0]), "x", 100, 1.0)


def test_local_maxima_midpoint_boundaries():
    prof = _tone_profile([100.0, 200.0], [1.0, 1.0])
    seg = segment_local_maxima(prof, 3)
    # virtual peak at 0: midpoints at 50 and 150 Hz
    assert np.allclose(seg.boundaries_hz, [0.0, 50.0, 150.0, 500.0])


def test_local_maxima_retains_largest_peaks():
    prof = _tone_profile([100.0, 200.0, 300.0], [1.0, 0.2, 0.9])
    seg = segment_local_maxima(prof, 3)
    # the 200 Hz peak is the smallest and must be dropped
    assert np.allclose(seg.boundaries_hz, [0.0, 50.0, 200.0, 500.0])


def test_lowest_minima_picks_spectrum_valley():
    mags = np.array([0.0, 1.0, 9.0, 1.0, 0.2, 1.0, 8.0, 1.0, 0.5])
    prof = _profile_from_mags(mags)
    seg = segment_lowest_minima(prof, 3)
    bins = seg.boundaries / (2 * np.pi) * prof.source_length
    # interior argmins: between 0 and peak 2 -> bin 1; between peaks -> bin 4
    assert np.allclose(bins[1:3], [1, 4])
    assert seg.boundaries[0] == 0.0 and seg.boundaries[-1] == pytest.approx(np.pi)


def test_lowest_minima_tie_breaks_low_frequency():
    mags = np.array([0.0, 1.0, 9.0, 0.5, 0.5, 0.5, 9.0, 1.0])
    prof = _profile_from_mags(mags)
    seg = segment_lowest_minima(prof, 3)
    bins = np.rint(seg.boundaries / (2 * np.pi) * prof.source_length).astype(int)
    # the flat valley between the peaks resolves to its lowest-index bin
    assert list(bins[1:3]) == [1, 3]


def test_improved_excludes_trivial_low_segment():
    # strong tones away from DC with a small noise floor near 0: the first
    # boundary should move above 0 instead of spanning the empty low band
    rng = np.random.default_rng(0)
    fs, n = 1000.0, 1000
    t = np.arange(n) / fs
    x = np.cos(2 * np.pi * 100 * t) + np.cos(2 * np.pi * 200 * t)
    x = x + 0.05 * rng.standard_normal(n)
    prof = MagnitudeProfile.from_spectrum(forward_spectrum(Signal(x, fs)))
    seg = segment_improved(prof, 2)
    assert seg.boundaries_hz[0] > 0.0
    # both tones still separated
    assert seg.boundaries_hz[0] < 100 < seg.boundaries_hz[1] < 200 <= seg.boundaries_hz[2]


def test_improved_duplicate_anchor_boundary():
    # when the last bin itself is an anchor, the final boundary must sit on it
    mags = np.array([0.0, 1.0, 7.0, 1.0, 0.0, 1.0, 9.0])
    prof = _profile_from_mags(mags)
    seg = segment_improved(prof, 2)
    bins = np.rint(seg.boundaries / (2 * np.pi) * prof.source_length).astype(int)
    assert bins[-1] == 6
    assert bins[1] == 4


def test_infeasible_segmentations_raise():
    # a monotone profile has no interior maxima at all
    prof = _profile_from_mags([0.0, 1.0, 2.0, 3.0, 4.0, 5.0])
    with pytest.raises(SegmentationInfeasibleError) as err:
        segment_local_maxima(prof, 5)
    assert err.value.required == 4 and err.value.found == 0
    with pytest.raises(SegmentationInfeasibleError):
        segment_improved(_profile_from_mags([1.0, 2.0]), 5)
    with pytest.raises(InvalidInputError):
        segment_improved(prof, 0)
