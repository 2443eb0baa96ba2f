import numpy as np
import pytest

from efdkit.efd import apply_ideal_bank, build_ideal_bank, efd_decompose
from efdkit.errors import EmptyBandError, InvalidInputError
from efdkit.segmentation import MagnitudeProfile, Segmentation, segment_improved
from efdkit.spectral import Signal, forward_spectrum


def _seg(bin_edges, source_length, rate=1.0):
    boundaries = 2 * np.pi * np.asarray(bin_edges, dtype=float) / source_length
    return Segmentation(boundaries, "test", source_length, rate)


def _tones(freqs_amps, fs, n):
    t = np.arange(n) / fs
    return Signal(
        np.sum([a * np.cos(2 * np.pi * f * t) for f, a in freqs_amps], axis=0),
        fs,
    )


def test_bank_half_open_convention():
    # a bin exactly on an internal boundary belongs to the higher band;
    # the last band is closed on the right
    bank = build_ideal_bank(_seg([0, 10, 20], 128), 65)
    assert bank.bands == ((0, 9), (10, 20))


def test_bank_bands_are_disjoint_and_ordered():
    bank = build_ideal_bank(_seg([3, 17, 40, 64], 128), 65)
    assert bank.bands == ((3, 16), (17, 39), (40, 64))
    cov = bank.coverage()
    assert cov.sum() == 64 - 3 + 1


def test_bank_empty_band_rejected():
    # no spectrum bin falls inside (10.2, 10.8)
    with pytest.raises(EmptyBandError) as err:
        build_ideal_bank(_seg([0, 10.2, 10.8], 128), 65)
    assert err.value.band_index == 1


def test_filters_have_no_transition_bins():
    bank = build_ideal_bank(_seg([0, 10, 32], 64), 33)
    for n in range(2):
        mask = bank.mask(n)
        assert mask.dtype == bool  # response is exactly 0/1


def test_zero_leakage_outside_band():
    rng = np.random.default_rng(2)
    sig = Signal(rng.standard_normal(256), 32.0)
    bank = build_ideal_bank(_seg([0, 40, 90, 128], 256), 129)
    ms = apply_ideal_bank(sig, bank)
    for n, mode in enumerate(ms.modes):
        spec = np.abs(np.fft.rfft(mode.samples))
        outside = spec[~bank.mask(n)]
        assert np.max(outside) < 1e-12 * max(np.max(spec), 1.0)


def test_exact_reconstruction_with_residual():
    rng = np.random.default_rng(6)
    sig = Signal(rng.standard_normal(300), 10.0)
    bank = build_ideal_bank(_seg([5, 40, 100], 300), 151)
    ms = apply_ideal_bank(sig, bank)
    rec = ms.reconstruction()
    assert np.max(np.abs(rec - sig.samples)) < 1e-12


def test_three_tones_isolated_exactly():
    # well-separated integer-bin tones, unextended filtering: each mode is
    # exactly one tone
    fs, n = 1000.0, 1000
    sig = _tones([(50.0, 1.0), (170.0, 0.8), (390.0, 0.5)], fs, n)
    ms = efd_decompose(sig, 3, extension="none")
    t = sig.times
    truths = [np.cos(2 * np.pi * 50 * t), 0.8 * np.cos(2 * np.pi * 170 * t),
              0.5 * np.cos(2 * np.pi * 390 * t)]
    for mode, truth in zip(ms.modes, truths):
        assert np.max(np.abs(mode.samples - truth)) < 1e-10


def test_mirror_path_reconstructs_exactly():
    rng = np.random.default_rng(8)
    sig = Signal(rng.standard_normal(777), 100.0)
    ms = efd_decompose(sig, 3, extension="mirror")
    rec = ms.reconstruction()
    assert np.max(np.abs(rec - sig.samples)) < 1e-12


def test_decompose_argument_validation():
    sig = _tones([(50.0, 1.0)], 1000.0, 1000)
    with pytest.raises(InvalidInputError):
        efd_decompose(sig, 0)
    with pytest.raises(InvalidInputError):
        efd_decompose(sig, 1, extension="reflect")


def test_mirror_extension_improves_trend_separation():
    # ramp + tone: periodic filtering smears the ramp's leakage into the
    # tone band, the mirror path does not
    fs, n = 1000.0, 1000
    t = np.arange(n) / fs
    sig = Signal(6.0 * t + np.cos(2 * np.pi * 20 * t), fs)
    truth = np.cos(2 * np.pi * 20 * t)

    def tone_err(extension):
        ms = efd_decompose(sig, 2, extension=extension)
        return min(
            np.sqrt(np.mean((m.samples - truth) ** 2)) for m in ms.modes
        )

    assert tone_err("mirror") < 0.5 * tone_err("none")
