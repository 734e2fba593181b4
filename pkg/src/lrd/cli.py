"""Command-line surface.

Subcommands:
    decompose   grid a PnL CSV into a plot-ready measure matrix
    indicator   collapse a series into scalar indicators (JSON report)
    synth       generate a synthetic PnL CSV from a spec file
    compare     side-by-side indicator table for two series

Exit codes: 0 success, 1 usage/parse error, 2 numerical degeneracy,
3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import io as lio
from .decompose import decompose
from .errors import DegeneracyError, IoError, LRDError, UsageError, ValidationError
from .kernels import Kernel, eta_estimate, phi_indicator
from .measures import LOCAL_RETURN, LOCAL_RISK, LSR, MeasureKind, lra, measure_field
from .report import run_compare, sharpe_estimate
from .synth import GENERATOR_ID, generate
from .io import AnalysisConfig


class _Parser(argparse.ArgumentParser):
    """argparse variant that reports usage problems via exit code 1."""

    def error(self, message):
        raise UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="lrd", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_dec = sub.add_parser("decompose", help="export a measure grid as a heatmap matrix")
    p_dec.add_argument("input", help="PnL CSV (header 'date,pnl' or 'pnl')")
    p_dec.add_argument("--horizons", help="comma-separated box lengths (default 50,100,250,500,1000 clipped)")
    p_dec.add_argument("--measure", default="lsr", choices=("return", "risk", "lsr", "lra"))
    p_dec.add_argument("--beta", type=float, default=0.75, help="risk aversion for lra")
    p_dec.add_argument("--normalize", action="store_true", help="divide lra by its global std")
    p_dec.add_argument("--out", required=True, help="output path")
    p_dec.add_argument("--format", choices=("csv", "json"), help="default: by --out extension")

    p_ind = sub.add_parser("indicator", help="scalar indicators with jackknife errors")
    p_ind.add_argument("input", help="PnL CSV")
    p_ind.add_argument("--config", help="flat key=value config file")
    p_ind.add_argument("--out", help="report JSON path (default: stdout)")

    p_syn = sub.add_parser("synth", help="generate a synthetic PnL CSV")
    p_syn.add_argument("--spec", required=True, help="synth spec file (n, segments, noise_amplitude, seed)")
    p_syn.add_argument("--seed", type=int, help="override the spec's seed")
    p_syn.add_argument("--out", required=True, help="output CSV path")

    p_cmp = sub.add_parser("compare", help="two-series indicator report")
    p_cmp.add_argument("input_a", help="first PnL CSV")
    p_cmp.add_argument("input_b", help="second PnL CSV")
    p_cmp.add_argument("--config", help="flat key=value config file")
    p_cmp.add_argument("--out", help="also write the full JSON report here")

    return parser


def _load_config(path) -> AnalysisConfig:
    if path is None:
        return AnalysisConfig()
    return lio.parse_config(lio._read_text(path))


def _measure_kind(name: str, beta: float, normalize: bool) -> MeasureKind:
    if name == "lra":
        return lra(beta, normalize)
    return {"return": LOCAL_RETURN, "risk": LOCAL_RISK, "lsr": LSR}[name]


def _cmd_decompose(args) -> int:
    series = lio.load_csv(args.input)
    meta = lio.read_csv_metadata(args.input)
    if args.horizons:
        horizons = lio._int_list(args.horizons, None)
    else:
        horizons = AnalysisConfig().resolved_horizons(series.n)
    grid = decompose(series, horizons)
    fld = measure_field(grid, _measure_kind(args.measure, args.beta, args.normalize))
    fmt = args.format or ("json" if str(args.out).endswith(".json") else "csv")
    lio.export_field(fld, args.out, fmt, source_meta=meta)
    return 0


def _cmd_indicator(args) -> int:
    series = lio.load_csv(args.input)
    meta = lio.read_csv_metadata(args.input)
    config = _load_config(args.config)
    horizons = config.resolved_horizons(series.n)
    rhos = config.resolved_rho(horizons)
    grid = decompose(series, horizons)
    kind = _measure_kind(config.measure, config.beta, config.normalize)
    fld = measure_field(grid, kind)
    tau = config.resolved_tau(series.n)
    time_kernel = Kernel(config.kernel_time, center=tau, dilatation=config.resolved_delta_t(series.n))
    sharpe = sharpe_estimate(series)
    indicators = []
    for rho in rhos:
        scale_kernel = Kernel(config.kernel_scale, center=float(rho),
                              dilatation=config.resolved_delta_s(rho))
        phi = phi_indicator(fld, scale_kernel, time_kernel)
        eta_est = eta_estimate(fld, rho, time_kernel)
        indicators.append({
            "measure": kind.name,
            "rho": rho,
            "phi": {"value": phi.value, "jackknife_error": phi.jackknife_error,
                    "resampling_units": phi.resampling_units},
            "eta": {"value": eta_est.value, "jackknife_error": eta_est.error,
                    "resampling_units": eta_est.m},
            "tau": phi.tau,
            "delta_t": phi.delta_t,
            "delta_s": phi.delta_s,
            "kernel_time": phi.kernel_shapes[0],
            "kernel_scale": phi.kernel_shapes[1],
            "degenerate_cells_skipped": phi.degenerate_cells_skipped,
        })
    doc = {
        "n": series.n,
        "source_sha256": lio.series_checksum(series),
        "metadata": meta,
        "sharpe": {"value": sharpe.value, "jackknife_error": sharpe.error},
        "horizons": list(horizons),
        "indicators": indicators,
    }
    text = json.dumps(doc, indent=2) + "\n"
    if args.out:
        lio._write_text(args.out, text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_synth(args) -> int:
    spec = lio.parse_synth_spec(lio._read_text(args.spec), seed_override=args.seed)
    series = generate(spec)
    meta = {
        "generator": GENERATOR_ID,
        "seed": spec.seed,
        "n": spec.n,
        "noise_amplitude": repr(spec.noise_amplitude),
        "segments": ", ".join(f"{length}:{drift!r}" for length, drift in spec.segments),
    }
    lio.write_series_csv(args.out, series, metadata=meta)
    return 0


def _cmd_compare(args) -> int:
    series_a = lio.load_csv(args.input_a)
    series_b = lio.load_csv(args.input_b)
    config = _load_config(args.config)
    report = run_compare(
        series_a, series_b, config,
        names=("a", "b"),
        metadata=(lio.read_csv_metadata(args.input_a), lio.read_csv_metadata(args.input_b)),
    )
    sys.stdout.write(report.render_text())
    if args.out:
        lio._write_text(args.out, json.dumps(report.to_json_dict(), indent=2) + "\n")
    return 0


_COMMANDS = {
    "decompose": _cmd_decompose,
    "indicator": _cmd_indicator,
    "synth": _cmd_synth,
    "compare": _cmd_compare,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except (UsageError, ValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except DegeneracyError as exc:
        print(f"degenerate: {exc}", file=sys.stderr)
        return 2
    except IoError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return 3
    except LRDError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
