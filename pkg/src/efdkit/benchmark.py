"""Benchmark harness: method dispatch, RMSE tables, the two-tone
decomposition-performance map, and wall-clock timing."""

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace

import numpy as np
from scipy.optimize import linear_sum_assignment

from .efd import efd_decompose
from .errors import EfdkitError, InvalidInputError
from .ewt import ewt_decompose
from .fdm import fdm_htl, fdm_lth, fibf_tracks
from .segmentation import MagnitudeProfile, segment_local_maxima, segment_lowest_minima
from .spectral import Signal, forward_spectrum, mirror_extend
from .testsignals import MODE_COUNTS, generate, sig6_spec
from .tfr import band_tfr, benchmark_tfr, mode_tfr, raster_rmse, raster_tfr

METHODS = ("efd", "ewt-maxima", "ewt-minima", "fdm-lth", "fdm-htl")

Q_EPSILON = 0.5


def decompose_with(method: str, signal: Signal, n_modes=None, extension="mirror"):
    """Run one decomposition method; returns modes in ascending band order.

    EFD and EWT filter the mirror-extended signal by default (segmentation
    always comes from the raw spectrum); FDM operates on the raw samples
    since its scans depend on the analytic coefficients of the signal
    itself.
    """
    if method == "efd":
        return list(efd_decompose(signal, n_modes, extension=extension).modes)
    if method in ("ewt-maxima", "ewt-minima"):
        profile = MagnitudeProfile.from_spectrum(forward_spectrum(signal))
        segment = segment_local_maxima if method == "ewt-maxima" else segment_lowest_minima
        seg = segment(profile, n_modes)
        if extension == "mirror":
            extended = mirror_extend(signal)
            seg_ext = replace(seg, source_length=len(extended))
            n = len(signal)
            return [Signal(m.samples[:n], signal.sample_rate_hz)
                    for m in ewt_decompose(extended, seg_ext).modes]
        return list(ewt_decompose(signal, seg).modes)
    if method == "fdm-lth":
        return list(fdm_lth(signal).to_mode_set().modes)
    if method == "fdm-htl":
        return list(fdm_htl(signal).to_mode_set().modes)
    raise InvalidInputError("unknown method %r" % method)


def rmse(decomposed: Signal, analytic: Signal) -> float:
    """Root-mean-square error between a decomposed mode and its truth."""
    if len(decomposed) != len(analytic):
        raise InvalidInputError("rmse requires equal lengths")
    return float(np.sqrt(np.mean((decomposed.samples - analytic.samples) ** 2)))


def match_modes(modes, truths):
    """Index of the mode matched to each truth component.

    With at least as many modes as truths the matching is a minimal-RMSE
    permutation; with fewer modes (a method merged components) each truth
    takes its individually closest mode, so one mode may serve several
    truths.
    """
    cost = np.array([[rmse(m, c) for m in modes] for c in truths])
    if len(modes) >= len(truths):
        rows, cols = linear_sum_assignment(cost)
        out = np.empty(len(truths), dtype=int)
        out[rows] = cols
        return list(out)
    return [int(np.argmin(row)) for row in cost]


def component_rmses(modes, truths):
    """Per-truth RMSE after minimal-RMSE matching."""
    matched = match_modes(modes, truths)
    return [rmse(modes[j], truths[i]) for i, j in enumerate(matched)]


def q_value(c1: Signal, sig6c1: Signal, sig6c2: Signal, epsilon=Q_EPSILON) -> int:
    """Binary decomposition acceptability for the two-tone signal."""
    if not (len(c1) == len(sig6c1) == len(sig6c2)):
        raise InvalidInputError("q_value requires equal lengths")
    denom = np.linalg.norm(sig6c2.samples)
    if denom == 0:
        raise InvalidInputError("zero-norm reference component")
    ratio = np.linalg.norm(c1.samples - sig6c1.samples) / denom
    return 0 if ratio <= epsilon else 1


def default_a_axis(n=32):
    """Logarithmic amplitude-ratio grid in [0.01, 100) that contains 1."""
    return np.logspace(-2, 2, n, endpoint=False)


def default_lambda_axis(n=32):
    return np.linspace(0.01, 1.0, n)


@dataclass(frozen=True)
class QMap:
    a_axis: np.ndarray
    lambda_axis: np.ndarray
    q: np.ndarray
    method: str
    failures: list = field(default_factory=list)


def _spectral_centroid_hz(mode: Signal) -> float:
    """Power-weighted spectral centroid; squaring the magnitudes keeps
    broadband leakage tails from dragging the centroid off a tone."""
    spec = forward_spectrum(mode)
    power = spec.magnitudes ** 2
    total = power.sum()
    if total == 0:
        return 0.0
    return float(np.sum(spec.freqs_hz * power) / total)


def _pick_c1(modes):
    """The mode standing in for the 1 Hz component: spectral centroid
    nearest 1 Hz."""
    centroids = [_spectral_centroid_hz(m) for m in modes]
    return modes[int(np.argmin(np.abs(np.array(centroids) - 1.0)))]


def q_cell(method: str, a: float, lambda_r: float, epsilon=Q_EPSILON):
    """Evaluate one (a, lambda_r) cell; returns (q, error message or None)."""
    signal, comps = generate(sig6_spec(a, lambda_r))
    n_modes = MODE_COUNTS["sig6"].get(method.split("-")[0])
    try:
        modes = decompose_with(method, signal, n_modes)
        return q_value(_pick_c1(modes), comps[0], comps[1], epsilon), None
    except EfdkitError as exc:
        return 1, str(exc)


def _worker_count(n_workers):
    if n_workers is not None:
        return max(1, int(n_workers))
    env = os.environ.get("EFDKIT_THREADS")
    if env:
        return max(1, int(env))
    return min(os.cpu_count() or 1, 8)


def _q_row(args):
    method, a, lambda_axis, epsilon = args
    return [q_cell(method, a, lam, epsilon) for lam in lambda_axis]


def q_map(method: str, a_axis=None, lambda_axis=None, epsilon=Q_EPSILON,
          n_workers=None) -> QMap:
    """Decomposition-performance map over the (a, lambda_r) grid.

    Cells are independent and evaluated in parallel (row granularity);
    per-cell failures are recorded as q = 1 with an annotation and never
    abort the map.
    """
    a_axis = default_a_axis() if a_axis is None else np.asarray(a_axis, dtype=float)
    lambda_axis = (default_lambda_axis() if lambda_axis is None
                   else np.asarray(lambda_axis, dtype=float))
    jobs = [(method, a, lambda_axis, epsilon) for a in a_axis]
    workers = _worker_count(n_workers)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_q_row, jobs))
    else:
        rows = [_q_row(j) for j in jobs]
    q = np.array([[cell[0] for cell in row] for row in rows], dtype=int)
    failures = [
        {"a": float(a_axis[i]), "lambda_r": float(lambda_axis[j]), "error": rows[i][j][1]}
        for i in range(len(a_axis)) for j in range(len(lambda_axis))
        if rows[i][j][1] is not None
    ]
    return QMap(a_axis=a_axis, lambda_axis=lambda_axis, q=q, method=method,
                failures=failures)


def default_tfr_freq_axis():
    """0-50 Hz in 0.25 Hz bins, the grid used for the TFR comparison."""
    return np.arange(0.0, 50.0 + 0.25, 0.25)


def method_tfr_tracks(method: str, signal: Signal, n_modes=None):
    """Instantaneous-amplitude/frequency tracks for one method's modes.

    EFD and EWT modes go through the analytic signal; FDM tracks come
    directly from the band-analytic components of the scan, with no second
    analytic pass.
    """
    if method in ("fdm-lth", "fdm-htl"):
        fibf_set = (fdm_lth if method == "fdm-lth" else fdm_htl)(signal)
        return [band_tfr(b) for b in fibf_tracks(signal, fibf_set)]
    return [mode_tfr(m) for m in decompose_with(method, signal, n_modes)]


def tfr_comparison(signal: Signal, components, methods=METHODS,
                   freq_axis=None, mode_counts=None):
    """Raster RMSE of each method's TFR against the ground-truth TFR.

    The benchmark raster comes from the analytic components' own tracks on
    the same grid.  Returns {method: rmse}.
    """
    freq_axis = default_tfr_freq_axis() if freq_axis is None else np.asarray(freq_axis)
    bench = raster_tfr(benchmark_tfr(components), freq_axis)
    out = {}
    for method in methods:
        n_modes = None if mode_counts is None else mode_counts.get(method.split("-")[0])
        tracks = method_tfr_tracks(method, signal, n_modes)
        out[method] = raster_rmse(raster_tfr(tracks, freq_axis), bench)
    return out


def time_methods(specs, repetitions=5, methods=METHODS):
    """Median wall-clock decomposition seconds per method per signal.

    Signal generation and I/O are excluded; one warm-up run per pair is
    discarded; timing runs are strictly serial.
    """
    if repetitions < 3:
        raise InvalidInputError("repetitions must be >= 3")
    table = {}
    for spec in specs:
        signal, _ = generate(spec)
        counts = MODE_COUNTS.get(spec.id, {})
        row = {}
        for method in methods:
            n_modes = counts.get(method.split("-")[0])
            decompose_with(method, signal, n_modes)  # warm-up
            times = []
            for _ in range(repetitions):
                t0 = time.perf_counter()
                decompose_with(method, signal, n_modes)
                times.append(time.perf_counter() - t0)
            row[method] = float(np.median(times))
        table[spec.id] = row
    return table
