"""Figure rendering for reports: spectra with segmentation boundaries,
stacked mode panels, TFR rasters, and the two-tone performance map.

All functions write PNG files and never open interactive windows.
"""

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np


def plot_segmentations(profile, segmentations, path, max_hz=None):
    """Magnitude spectrum with one panel per segmentation technique;
    boundaries are drawn as dashed vertical lines."""
    freqs = profile.bin_omega(np.arange(profile.magnitudes.size)) \
        * profile.sample_rate_hz / (2.0 * np.pi)
    fig, axes = plt.subplots(len(segmentations), 1, sharex=True,
                             figsize=(8, 2.4 * len(segmentations)),
                             squeeze=False)
    for ax, seg in zip(axes[:, 0], segmentations):
        ax.plot(freqs, profile.magnitudes, lw=0.8, color="tab:blue")
        for b in seg.boundaries_hz:
            ax.axvline(b, color="tab:red", ls="--", lw=0.8)
        ax.set_ylabel("|X(f)|")
        ax.set_title(seg.technique, fontsize=9)
        if max_hz is not None:
            ax.set_xlim(0, max_hz)
    axes[-1, 0].set_xlabel("frequency (Hz)")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_modes(signal, modes, path, residual=None):
    """Input signal on top, then one panel per mode (and the residual)."""
    panels = [("input", signal.samples)]
    panels += [("mode %d" % (i + 1), m.samples) for i, m in enumerate(modes)]
    if residual is not None:
        panels.append(("residual", residual.samples))
    t = signal.times
    fig, axes = plt.subplots(len(panels), 1, sharex=True,
                             figsize=(8, 1.6 * len(panels)), squeeze=False)
    for ax, (label, y) in zip(axes[:, 0], panels):
        ax.plot(t, y, lw=0.7, color="tab:blue")
        ax.set_ylabel(label, fontsize=8)
    axes[-1, 0].set_xlabel("time (s)")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_raster(raster, path, title=None):
    """TFR raster as a pseudocolor map, time on the horizontal axis."""
    fig, ax = plt.subplots(figsize=(8, 4))
    mesh = ax.pcolormesh(raster.time_axis, raster.freq_axis,
                         raster.magnitude.T, shading="auto", cmap="viridis")
    fig.colorbar(mesh, ax=ax, label="amplitude")
    ax.set_xlabel("time (s)")
    ax.set_ylabel("frequency (Hz)")
    if title:
        ax.set_title(title, fontsize=10)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_qmap(qmap, path):
    """Binary performance map: bright cells are successful decompositions
    (q = 0), dark cells failures, amplitude ratio on a log axis."""
    fig, ax = plt.subplots(figsize=(5.5, 4.5))
    mesh = ax.pcolormesh(qmap.lambda_axis, qmap.a_axis, 1 - qmap.q,
                         shading="auto", cmap="gray", vmin=0, vmax=1)
    ax.set_yscale("log")
    ax.set_xlabel(r"$\lambda_r$")
    ax.set_ylabel("a")
    ax.set_title("%s: q = 0 (bright) / q = 1 (dark)" % qmap.method, fontsize=10)
    fig.colorbar(mesh, ax=ax)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_timing(timing_table, methods, path):
    """Grouped bar chart of median decomposition times per signal."""
    signals = list(timing_table)
    x = np.arange(len(signals))
    width = 0.8 / len(methods)
    fig, ax = plt.subplots(figsize=(7, 4))
    for k, method in enumerate(methods):
        vals = [timing_table[s][method] for s in signals]
        ax.bar(x + (k - len(methods) / 2 + 0.5) * width, vals, width,
               label=method)
    ax.set_xticks(x)
    ax.set_xticklabels(signals)
    ax.set_ylabel("median time (s)")
    ax.set_yscale("log")
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
