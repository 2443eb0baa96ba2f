import numpy as np
import pytest

from efdkit.errors import InvalidInputError
from efdkit.spectral import Signal
from efdkit.tfr import (
    TfrTrack,
    benchmark_tfr,
    mode_tfr,
    raster_rmse,
    raster_tfr,
)


def _tone(f, a, fs=200.0, n=800, phase=0.0):
    t = np.arange(n) / fs
    return Signal(a * np.cos(2 * np.pi * f * t + phase), fs)


def _interior(x, margin=0.1):
    k = int(len(x) * margin)
    return x[k:-k]


def test_tone_track_amplitude_and_frequency():
    tr = mode_tfr(_tone(13.0, 2.0))
    assert abs(np.median(_interior(tr.inst_frequency_hz)) - 13.0) < 0.005 * 13.0
    assert abs(np.median(_interior(tr.inst_amplitude)) - 2.0) < 0.005 * 2.0


def test_zero_signal_track_is_zero():
    tr = mode_tfr(Signal(np.zeros(100), 10.0))
    assert np.all(tr.inst_amplitude == 0.0)
    assert np.all(tr.inst_frequency_hz == 0.0)


def test_track_time_shift_invariance():
    # an integer-cycle tone has an exact analytic signal, so a phase shift
    # (= time shift) leaves the interior IF untouched
    fs, f = 500.0, 25.0
    a = mode_tfr(_tone(f, 1.0, fs=fs))
    b = mode_tfr(_tone(f, 1.0, fs=fs, phase=0.7))
    ia, ib = _interior(a.inst_frequency_hz), _interior(b.inst_frequency_hz)
    assert np.max(np.abs(ia - ib)) < 1e-6


def test_track_validation():
    t = np.arange(4.0)
    with pytest.raises(InvalidInputError):
        TfrTrack(t, np.ones(3), np.ones(4))
    with pytest.raises(InvalidInputError):
        TfrTrack(t, -np.ones(4), np.ones(4))


def test_benchmark_tfr_shapes():
    comps = [_tone(5.0, 1.0), _tone(40.0, 0.5)]
    tracks = benchmark_tfr(comps)
    assert len(tracks) == 2
    assert benchmark_tfr([]) == []


def test_raster_single_tone_occupies_one_row():
    tr = mode_tfr(_tone(10.0, 1.0))
    freq_axis = np.arange(0.0, 100.0, 0.5)
    raster = raster_tfr([tr], freq_axis)
    interior = raster.magnitude[50:-50]
    occupied = np.where(interior.sum(axis=0) > 0)[0]
    assert list(occupied) == [20]  # the 10 Hz bin


def test_raster_mass_conservation():
    tracks = [mode_tfr(_tone(10.0, 1.0)), mode_tfr(_tone(30.0, 0.5))]
    freq_axis = np.arange(0.0, 100.0, 0.5)
    raster = raster_tfr(tracks, freq_axis)
    total = sum(tr.inst_amplitude.sum() for tr in tracks)
    assert raster.magnitude.sum() == pytest.approx(total)


def test_raster_clips_out_of_range_frequencies():
    time = np.arange(5) / 5.0
    tr = TfrTrack(time, np.ones(5), np.array([1.0, 2.0, 99.0, 3.0, -4.0]))
    raster = raster_tfr([tr], np.arange(0.0, 10.0, 1.0))
    assert raster.clipped == 2
    assert raster.magnitude.sum() == pytest.approx(5.0)


def test_raster_requires_shared_time_axis():
    a = mode_tfr(_tone(10.0, 1.0, n=800))
    b = mode_tfr(_tone(10.0, 1.0, n=400))
    with pytest.raises(InvalidInputError):
        raster_tfr([a, b], np.arange(0.0, 100.0, 1.0))


def test_raster_rmse_zero_for_identical():
    tr = mode_tfr(_tone(10.0, 1.0))
    axis = np.arange(0.0, 100.0, 0.5)
    r1 = raster_tfr([tr], axis)
    r2 = raster_tfr([tr], axis)
    assert raster_rmse(r1, r2) == 0.0
