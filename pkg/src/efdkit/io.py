"""File formats: signal CSV input, mode/track/raster/map output, and the
run manifest.

All floating-point output uses 17 significant digits so values round-trip
through text exactly.
"""

import csv
import json

import numpy as np

from .errors import InvalidInputError
from .spectral import Signal

FLOAT_FMT = "%.17g"

# relative jitter above which a time column is rejected as non-uniform
_JITTER_TOL = 1e-9


def _fmt(x):
    return FLOAT_FMT % float(x)


def load_signal_csv(path, rate=None) -> Signal:
    """Read a signal from CSV: either (t, value) rows with uniform t, or a
    single value column with the sample rate passed explicitly.

    A single non-numeric first row is treated as a header and skipped.
    """
    rows = []
    try:
        with open(path, newline="") as fh:
            for line_no, row in enumerate(csv.reader(fh)):
                row = [c.strip() for c in row if c.strip() != ""]
                if not row:
                    continue
                try:
                    rows.append([float(c) for c in row])
                except ValueError:
                    if line_no == 0:
                        continue  # header
                    raise InvalidInputError(
                        "non-numeric value on line %d of %s" % (line_no + 1, path)
                    )
    except OSError as exc:
        raise InvalidInputError("cannot read %s: %s" % (path, exc))
    if not rows:
        raise InvalidInputError("no samples in %s" % path)
    widths = {len(r) for r in rows}
    if len(widths) != 1:
        raise InvalidInputError("inconsistent column count in %s" % path)
    width = widths.pop()
    data = np.asarray(rows, dtype=float)
    if width == 1:
        if rate is None:
            raise InvalidInputError(
                "single-column input needs an explicit sample rate"
            )
        return Signal(data[:, 0], float(rate))
    if width != 2:
        raise InvalidInputError("expected 1 or 2 columns, got %d" % width)
    t, values = data[:, 0], data[:, 1]
    if len(t) < 2:
        raise InvalidInputError("need at least 2 samples to infer a rate")
    steps = np.diff(t)
    dt = np.mean(steps)
    if dt <= 0 or np.max(np.abs(steps - dt)) > _JITTER_TOL * max(abs(dt), 1.0):
        raise InvalidInputError("time column is not uniformly spaced")
    inferred = 1.0 / dt
    if rate is not None and abs(inferred - rate) > _JITTER_TOL * rate:
        raise InvalidInputError(
            "explicit rate %g conflicts with time column (%g)" % (rate, inferred)
        )
    return Signal(values, inferred)


def write_signal_csv(path, signal: Signal):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["t", "value"])
        for t, v in zip(signal.times, signal.samples):
            w.writerow([_fmt(t), _fmt(v)])


def write_modes_csv(path, modes, sample_rate_hz, residual=None):
    """One time column plus one column per mode (and the residual if given)."""
    if not modes:
        raise InvalidInputError("no modes to write")
    n = len(modes[0])
    header = ["t"] + ["mode_%d" % (i + 1) for i in range(len(modes))]
    columns = [np.arange(n) / sample_rate_hz] + [m.samples for m in modes]
    if residual is not None:
        header.append("residual")
        columns.append(residual.samples)
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(header)
        for row in zip(*columns):
            w.writerow([_fmt(v) for v in row])


def write_segmentation_json(path, segmentation):
    with open(path, "w") as fh:
        json.dump(segmentation.to_json_dict(), fh, indent=2)
        fh.write("\n")


def write_tracks_csv(path, tracks):
    """Long-form track table: time, track index, amplitude, frequency."""
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["t", "track", "inst_amplitude", "inst_frequency_hz"])
        for k, tr in enumerate(tracks):
            for t, a, f in zip(tr.time, tr.inst_amplitude, tr.inst_frequency_hz):
                w.writerow([_fmt(t), k, _fmt(a), _fmt(f)])


def write_raster_csv(path, raster):
    """Long-form raster table: time, frequency, magnitude."""
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["t", "freq_hz", "magnitude"])
        for i, t in enumerate(raster.time_axis):
            for j, f in enumerate(raster.freq_axis):
                w.writerow([_fmt(t), _fmt(f), _fmt(raster.magnitude[i, j])])


def _write_pgm(path, image):
    """Plain-text PGM, values scaled to 0..255 (max maps to 255)."""
    image = np.asarray(image, dtype=float)
    peak = image.max()
    scaled = np.zeros_like(image, dtype=int) if peak <= 0 else np.rint(
        image / peak * 255
    ).astype(int)
    with open(path, "w") as fh:
        fh.write("P2\n%d %d\n255\n" % (image.shape[1], image.shape[0]))
        for row in scaled:
            fh.write(" ".join(str(v) for v in row) + "\n")


def write_raster_pgm(path, raster):
    """Grayscale image of the raster, frequency on the vertical axis
    (lowest frequency at the bottom row)."""
    _write_pgm(path, raster.magnitude.T[::-1])


def write_qmap_csv(path, qmap):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["a", "lambda_r", "q"])
        for i, a in enumerate(qmap.a_axis):
            for j, lam in enumerate(qmap.lambda_axis):
                w.writerow([_fmt(a), _fmt(lam), int(qmap.q[i, j])])


def write_qmap_pgm(path, qmap):
    """q=1 cells render dark, q=0 bright; amplitude ratio on the vertical
    axis (largest at the top row)."""
    _write_pgm(path, (1 - qmap.q)[::-1])


def write_rmse_table_csv(path, table, methods, components):
    """Rows are components, columns are methods (mirrors the benchmark
    table layout).  ``table`` maps method -> list of per-component RMSEs."""
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["component"] + list(methods))
        for i, comp in enumerate(components):
            w.writerow([comp] + [_fmt(table[m][i]) for m in methods])


def write_timing_csv(path, timing_table, methods):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["signal"] + list(methods))
        for sid, row in timing_table.items():
            w.writerow([sid] + [_fmt(row[m]) for m in methods])


def write_manifest(path, manifest: dict):
    with open(path, "w") as fh:
        json.dump(manifest, fh, indent=2, sort_keys=True)
        fh.write("\n")
