"""Command-line front end: decompose signals from CSV, inspect spectrum
segmentations, compute time-frequency representations, and regenerate the
benchmark experiment suite.

Exit codes: 0 success, 2 usage error, 3 invalid input, 4 infeasible
segmentation, 5 numeric failure.
"""

import argparse
import json
import os
import sys

import numpy as np

from . import __version__
from .benchmark import (
    METHODS,
    component_rmses,
    decompose_with,
    default_a_axis,
    default_lambda_axis,
    default_tfr_freq_axis,
    method_tfr_tracks,
    q_map,
    tfr_comparison,
    time_methods,
)
from .errors import (
    EfdkitError,
    InvalidInputError,
    NumericError,
    SegmentationInfeasibleError,
)
from .io import (
    FLOAT_FMT,
    load_signal_csv,
    write_manifest,
    write_modes_csv,
    write_qmap_csv,
    write_qmap_pgm,
    write_raster_csv,
    write_raster_pgm,
    write_rmse_table_csv,
    write_segmentation_json,
    write_timing_csv,
    write_tracks_csv,
)
from .plotting import (
    plot_modes,
    plot_qmap,
    plot_raster,
    plot_segmentations,
    plot_timing,
)
from .segmentation import (
    MagnitudeProfile,
    segment_improved,
    segment_local_maxima,
    segment_lowest_minima,
)
from .spectral import forward_spectrum
from .testsignals import (
    DEFAULT_SEED,
    MODE_COUNTS,
    generate,
    sig1_spec,
    sig2_spec,
    sig3_spec,
    sig4_spec,
    sig5_spec,
)
from .tfr import raster_tfr

EXPERIMENTS = ("table2", "table3", "table4", "table5", "table6",
               "fig6", "fig7", "fig14")

_TECHNIQUES = {
    "local-maxima": segment_local_maxima,
    "lowest-minima": segment_lowest_minima,
    "improved": segment_improved,
}

#: methods compared in the benchmark tables (the EWT baseline uses
#: lowest-minima segmentation)
_TABLE_METHODS = ("efd", "ewt-minima", "fdm-lth", "fdm-htl")


def _parse_grid(text):
    try:
        na, nl = text.lower().split("x")
        na, nl = int(na), int(nl)
    except ValueError:
        raise InvalidInputError("grid must look like 32x32, got %r" % text)
    if na < 2 or nl < 2:
        raise InvalidInputError("grid axes need at least 2 points")
    return na, nl


def _outdir(args):
    os.makedirs(args.out, exist_ok=True)
    return args.out


def _load_input(args):
    return load_signal_csv(args.input, rate=args.rate)


def _manifest_base(args, experiment=None):
    import matplotlib
    import scipy

    info = {
        "efdkit_version": __version__,
        "numpy_version": np.__version__,
        "scipy_version": scipy.__version__,
        "matplotlib_version": matplotlib.__version__,
    }
    if experiment is not None:
        info["experiment"] = experiment
    return info


def cmd_decompose(args):
    signal = _load_input(args)
    out = _outdir(args)
    if args.method == "efd":
        from .efd import efd_decompose

        mode_set = efd_decompose(signal, args.modes, extension=args.extension)
        modes, residual = list(mode_set.modes), mode_set.residual
        segmentation = mode_set.segmentation
    else:
        modes = decompose_with(args.method, signal, args.modes,
                               extension=args.extension)
        residual = None
        segmentation = None
        if args.method in ("ewt-maxima", "ewt-minima"):
            profile = MagnitudeProfile.from_spectrum(forward_spectrum(signal))
            fn = segment_local_maxima if args.method == "ewt-maxima" \
                else segment_lowest_minima
            segmentation = fn(profile, args.modes)
    write_modes_csv(os.path.join(out, "modes.csv"), modes,
                    signal.sample_rate_hz, residual=residual)
    if segmentation is not None:
        write_segmentation_json(os.path.join(out, "segmentation.json"),
                                segmentation)
    recon = np.sum([m.samples for m in modes], axis=0)
    if residual is not None:
        recon = recon + residual.samples
    denom = np.linalg.norm(signal.samples)
    rel = np.linalg.norm(recon - signal.samples) / denom if denom else 0.0
    print("reconstruction_residual " + FLOAT_FMT % rel)
    return 0


def cmd_segment(args):
    signal = _load_input(args)
    profile = MagnitudeProfile.from_spectrum(forward_spectrum(signal))
    segmentation = _TECHNIQUES[args.technique](profile, args.segments)
    if args.out is not None:
        os.makedirs(args.out, exist_ok=True)
        write_segmentation_json(os.path.join(args.out, "segmentation.json"),
                                segmentation)
    print(json.dumps(segmentation.to_json_dict()))
    return 0


def cmd_tfr(args):
    signal = _load_input(args)
    out = _outdir(args)
    tracks = method_tfr_tracks(args.method, signal, args.modes)
    nyquist = signal.sample_rate_hz / 2.0
    freq_axis = np.linspace(0.0, nyquist, 201)
    raster = raster_tfr(tracks, freq_axis)
    write_tracks_csv(os.path.join(out, "tracks.csv"), tracks)
    write_raster_csv(os.path.join(out, "raster.csv"), raster)
    write_raster_pgm(os.path.join(out, "raster.pgm"), raster)
    plot_raster(raster, os.path.join(out, "raster.png"),
                title="%s TFR" % args.method)
    if raster.clipped:
        print("clipped_if_samples %d" % raster.clipped)
    return 0


def _reproduce_rmse_table(experiment, out, outputs):
    spec = {"table2": sig3_spec, "table3": sig4_spec, "table4": sig5_spec}[
        experiment
    ]()
    signal, comps = generate(spec)
    table = {}
    for method in _TABLE_METHODS:
        n = MODE_COUNTS[spec.id].get(method.split("-")[0])
        modes = decompose_with(method, signal, n)
        table[method] = component_rmses(modes, comps)
        plot_modes(signal, modes,
                   os.path.join(out, "%s_modes_%s.png" % (spec.id, method)))
        outputs.append("%s_modes_%s.png" % (spec.id, method))
    components = ["C%d" % (i + 1) for i in range(len(comps))]
    name = "%s_rmse.csv" % experiment
    write_rmse_table_csv(os.path.join(out, name), table, _TABLE_METHODS,
                         components)
    outputs.append(name)
    return {"signal": spec.id, "methods": _TABLE_METHODS}


def _reproduce_table5(out, outputs):
    signal, comps = generate(sig3_spec())
    freq_axis = default_tfr_freq_axis()
    rmses = tfr_comparison(signal, comps, methods=_TABLE_METHODS,
                           freq_axis=freq_axis,
                           mode_counts=MODE_COUNTS["sig3"])
    from .tfr import benchmark_tfr

    bench = raster_tfr(benchmark_tfr(comps), freq_axis)
    plot_raster(bench, os.path.join(out, "sig3_tfr_benchmark.png"),
                title="benchmark TFR")
    outputs.append("sig3_tfr_benchmark.png")
    for method in _TABLE_METHODS:
        tracks = method_tfr_tracks(method, signal, MODE_COUNTS["sig3"].get(
            method.split("-")[0]))
        raster = raster_tfr(tracks, freq_axis)
        plot_raster(raster, os.path.join(out, "sig3_tfr_%s.png" % method),
                    title="%s TFR" % method)
        outputs.append("sig3_tfr_%s.png" % method)
    with open(os.path.join(out, "table5_tfr_rmse.csv"), "w") as fh:
        fh.write("method,tfr_rmse\n")
        for method in _TABLE_METHODS:
            fh.write("%s,%s\n" % (method, FLOAT_FMT % rmses[method]))
    outputs.append("table5_tfr_rmse.csv")
    return {"signal": "sig3", "methods": _TABLE_METHODS}


def _reproduce_table6(out, outputs, repetitions=5):
    specs = [sig3_spec(), sig4_spec(), sig5_spec()]
    table = time_methods(specs, repetitions=repetitions)
    write_timing_csv(os.path.join(out, "table6_timing.csv"), table, METHODS)
    plot_timing(table, METHODS, os.path.join(out, "table6_timing.png"))
    outputs += ["table6_timing.csv", "table6_timing.png"]
    return {"signals": [s.id for s in specs], "repetitions": repetitions}


def _reproduce_fig(experiment, out, outputs, seed):
    spec = (sig1_spec if experiment == "fig6" else sig2_spec)(seed=seed)
    signal, _ = generate(spec)
    profile = MagnitudeProfile.from_spectrum(forward_spectrum(signal))
    n_low = MODE_COUNTS[spec.id]["ewt"]
    n_imp = MODE_COUNTS[spec.id]["efd"]
    lowest = segment_lowest_minima(profile, n_low)
    improved = segment_improved(profile, n_imp)
    for tag, seg in (("lowest_minima", lowest), ("improved", improved)):
        name = "%s_%s.json" % (spec.id, tag)
        write_segmentation_json(os.path.join(out, name), seg)
        outputs.append(name)
    name = "%s_segmentations.png" % spec.id
    plot_segmentations(profile, [lowest, improved], os.path.join(out, name),
                       max_hz=50.0)
    outputs.append(name)
    return {"signal": spec.id, "seed": seed}


def _reproduce_fig14(out, outputs, grid):
    na, nl = grid
    a_axis = default_a_axis(na)
    lambda_axis = default_lambda_axis(nl)
    for method in _TABLE_METHODS:
        qm = q_map(method, a_axis=a_axis, lambda_axis=lambda_axis)
        base = "fig14_%s" % method
        write_qmap_csv(os.path.join(out, base + ".csv"), qm)
        write_qmap_pgm(os.path.join(out, base + ".pgm"), qm)
        plot_qmap(qm, os.path.join(out, base + ".png"))
        outputs += [base + ".csv", base + ".pgm", base + ".png"]
        if qm.failures:
            with open(os.path.join(out, base + "_failures.json"), "w") as fh:
                json.dump(qm.failures, fh, indent=2)
            outputs.append(base + "_failures.json")
    return {"grid": "%dx%d" % grid, "methods": _TABLE_METHODS}


def cmd_reproduce(args):
    out = _outdir(args)
    outputs = []
    if args.experiment in ("table2", "table3", "table4"):
        params = _reproduce_rmse_table(args.experiment, out, outputs)
    elif args.experiment == "table5":
        params = _reproduce_table5(out, outputs)
    elif args.experiment == "table6":
        params = _reproduce_table6(out, outputs)
    elif args.experiment in ("fig6", "fig7"):
        params = _reproduce_fig(args.experiment, out, outputs, args.seed)
    else:
        params = _reproduce_fig14(out, outputs, _parse_grid(args.grid))
    manifest = _manifest_base(args, experiment=args.experiment)
    manifest["seed"] = args.seed
    manifest["parameters"] = params
    manifest["outputs"] = sorted(outputs)
    write_manifest(os.path.join(out, "manifest.json"), manifest)
    return 0


def cmd_timing(args):
    out = _outdir(args)
    table = time_methods([sig3_spec(), sig4_spec(), sig5_spec()],
                         repetitions=args.repetitions)
    write_timing_csv(os.path.join(out, "timing.csv"), table, METHODS)
    plot_timing(table, METHODS, os.path.join(out, "timing.png"))
    for sid, row in table.items():
        for method in METHODS:
            print("%s %s %s" % (sid, method, FLOAT_FMT % row[method]))
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="efdkit",
        description="Signal decomposition by adaptive spectrum segmentation "
                    "and ideal band-pass filtering, with EWT and FDM "
                    "baselines and a benchmark harness.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", help="decompose a CSV signal into modes")
    p.add_argument("input")
    p.add_argument("--method", choices=METHODS, default="efd")
    p.add_argument("--modes", type=int, default=2,
                   help="number of modes (ignored by the FDM scans)")
    p.add_argument("--rate", type=float, default=None,
                   help="sample rate for single-column input")
    p.add_argument("--extension", choices=("mirror", "none"), default="mirror")
    p.add_argument("--out", default=".")
    p.set_defaults(fn=cmd_decompose)

    p = sub.add_parser("segment", help="compute segmentation boundaries")
    p.add_argument("input")
    p.add_argument("--technique", choices=sorted(_TECHNIQUES), default="improved")
    p.add_argument("--segments", type=int, default=2)
    p.add_argument("--rate", type=float, default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(fn=cmd_segment)

    p = sub.add_parser("tfr", help="time-frequency representation of a signal")
    p.add_argument("input")
    p.add_argument("--method", choices=METHODS, default="efd")
    p.add_argument("--modes", type=int, default=2)
    p.add_argument("--rate", type=float, default=None)
    p.add_argument("--out", default=".")
    p.set_defaults(fn=cmd_tfr)

    p = sub.add_parser("reproduce", help="regenerate a benchmark experiment")
    p.add_argument("experiment", choices=EXPERIMENTS)
    p.add_argument("--out", default=".")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--grid", default="32x32",
                   help="fig14 grid as AxB (a steps x lambda steps)")
    p.set_defaults(fn=cmd_reproduce)

    p = sub.add_parser("timing", help="time all methods on the benchmark signals")
    p.add_argument("--repetitions", type=int, default=5)
    p.add_argument("--out", default=".")
    p.set_defaults(fn=cmd_timing)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except SegmentationInfeasibleError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 4
    except InvalidInputError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 3
    except (NumericError, EfdkitError, FloatingPointError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 5


if __name__ == "__main__":
    sys.exit(main())
