"""Side-by-side indicator report for two PnL series.

Mirrors the standard comparison-table layout: per series the annualized
Sharpe ratio, then per (measure, rho) the collapsed indicator phi and
the single-horizon average eta(tau, rho), each with a jackknife error.
Text output renders errors in bracketed last-digit form ("2.71(7)");
the JSON document carries full floating-point values.

The report is a pure function of (series_a, series_b, config), so two
runs on the same inputs produce byte-identical output.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .decompose import decompose
from .errors import ZeroVolatility
from .io import AnalysisConfig, series_checksum
from .jackknife import JackknifeEstimate, jackknife
from .kernels import IndicatorResult, Kernel, eta_estimate, phi_indicator
from .measures import DAILY, LSR, lra, measure_field, risk_floor
from .series import PnLSeries, increments


def format_bracketed(value: float, error: float) -> str:
    """Render value with last-digit uncertainty: (2.714, 0.068) -> '2.71(7)'.

    The error is rounded to one significant digit and the value to the
    matching decimal place; errors of ten or more bracket the rounded
    magnitude instead ("270(30)").
    """
    if not (math.isfinite(value) and math.isfinite(error)) or error < 0:
        raise ValueError(f"cannot format {value} +/- {error}")
    if error == 0.0:
        return f"{value:.6g}(0)"
    exponent = math.floor(math.log10(error))
    digit = round(error / 10 ** exponent)
    if digit == 10:
        digit = 1
        exponent += 1
    if exponent < 0:
        return f"{value:.{-exponent}f}({digit})"
    scale = 10 ** exponent
    return f"{round(value / scale) * scale:.0f}({digit * scale:.0f})"


@dataclass(frozen=True)
class SeriesSummary:
    name: str
    n: int
    sharpe: float
    sharpe_error: float
    checksum: str
    metadata: dict


@dataclass(frozen=True)
class IndicatorRow:
    series: str
    measure: str
    rho: int
    phi: IndicatorResult
    eta: JackknifeEstimate


@dataclass(frozen=True)
class CompareReport:
    config: dict
    series: tuple[SeriesSummary, SeriesSummary]
    rows: tuple[IndicatorRow, ...]

    def to_json_dict(self) -> dict:
        return {
            "config": self.config,
            "series": [
                {
                    "name": s.name,
                    "n": s.n,
                    "sharpe": {"value": s.sharpe, "jackknife_error": s.sharpe_error},
                    "source_sha256": s.checksum,
                    "metadata": s.metadata,
                }
                for s in self.series
            ],
            "indicators": [
                {
                    "series": row.series,
                    "measure": row.measure,
                    "rho": row.rho,
                    "phi": {
                        "value": row.phi.value,
                        "jackknife_error": row.phi.jackknife_error,
                        "resampling_units": row.phi.resampling_units,
                    },
                    "eta": {
                        "value": row.eta.value,
                        "jackknife_error": row.eta.error,
                        "resampling_units": row.eta.m,
                    },
                    "tau": row.phi.tau,
                    "delta_t": row.phi.delta_t,
                    "delta_s": row.phi.delta_s,
                    "kernel_time": row.phi.kernel_shapes[0],
                    "kernel_scale": row.phi.kernel_shapes[1],
                    "degenerate_cells_skipped": row.phi.degenerate_cells_skipped,
                }
                for row in self.rows
            ],
        }

    def render_text(self) -> str:
        a, b = self.series
        lines = [
            "pnl comparison report",
            "=====================",
            f"series {a.name}: n={a.n}  sharpe={format_bracketed(a.sharpe, a.sharpe_error)}",
            f"series {b.name}: n={b.n}  sharpe={format_bracketed(b.sharpe, b.sharpe_error)}",
            "kernels: time={kernel_time} scale={kernel_scale}  tau={tau}  "
            "delta_t={delta_t}  delta_s={delta_s}  beta={beta}".format(**self.config),
            "",
        ]
        header = ["measure", "rho",
                  f"phi[{a.name}]", f"phi[{b.name}]",
                  f"eta[{a.name}]", f"eta[{b.name}]"]
        by_key: dict[tuple[str, int], dict[str, IndicatorRow]] = {}
        for row in self.rows:
            by_key.setdefault((row.measure, row.rho), {})[row.series] = row
        table = [header]
        for (measure, rho), pair in by_key.items():
            ra, rb = pair[a.name], pair[b.name]
            table.append([
                measure,
                str(rho),
                format_bracketed(ra.phi.value, ra.phi.jackknife_error),
                format_bracketed(rb.phi.value, rb.phi.jackknife_error),
                format_bracketed(ra.eta.value, ra.eta.error),
                format_bracketed(rb.eta.value, rb.eta.error),
            ])
        widths = [max(len(row[col]) for row in table) for col in range(len(header))]
        for row in table:
            lines.append("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
        return "\n".join(lines) + "\n"


def sharpe_estimate(series: PnLSeries, annualization: float = DAILY) -> JackknifeEstimate:
    """Annualized Sharpe with a delete-one-increment jackknife error."""
    floor = risk_floor(series)

    def estimator(units):
        r = np.asarray(units)
        sigma = float(r.std())
        if sigma <= floor:
            raise ZeroVolatility("volatility at or below floor in replicate")
        return annualization * float(r.mean()) / sigma

    return jackknife(list(increments(series).increments), estimator)


def run_compare(series_a: PnLSeries, series_b: PnLSeries, config: AnalysisConfig,
                names: tuple[str, str] = ("a", "b"),
                metadata: tuple[dict, dict] = ({}, {})) -> CompareReport:
    """Full two-series pipeline: decompose, measure, collapse, resample.

    Both series are decomposed under the same configuration (horizons
    resolved per series length).  Reports both lsr and lra rows, the
    lra built with the configured beta and normalization.
    """
    summaries = []
    all_rows: list[IndicatorRow] = []
    rho_union: list[int] = []
    for series, name, meta in zip((series_a, series_b), names, metadata):
        horizons = config.resolved_horizons(series.n)
        rhos = config.resolved_rho(horizons)
        rho_union = sorted(set(rho_union) | set(rhos))
        grid = decompose(series, horizons)
        tau = config.resolved_tau(series.n)
        delta_t = config.resolved_delta_t(series.n)
        time_kernel = Kernel(config.kernel_time, center=tau, dilatation=delta_t)
        est = sharpe_estimate(series)
        summaries.append(
            SeriesSummary(
                name=name,
                n=series.n,
                sharpe=est.value,
                sharpe_error=est.error,
                checksum=series_checksum(series),
                metadata=dict(meta),
            )
        )
        for kind in (LSR, lra(config.beta, config.normalize)):
            fld = measure_field(grid, kind)
            for rho in rhos:
                scale_kernel = Kernel(
                    config.kernel_scale,
                    center=float(rho),
                    dilatation=config.resolved_delta_s(rho),
                )
                all_rows.append(
                    IndicatorRow(
                        series=name,
                        measure=kind.name,
                        rho=rho,
                        phi=phi_indicator(fld, scale_kernel, time_kernel),
                        eta=eta_estimate(fld, rho, time_kernel),
                    )
                )

    config_echo = {
        "horizons": list(config.horizons) if config.horizons is not None else "default",
        "measures": ["lsr", "lra"],
        "beta": config.beta,
        "normalize": config.normalize,
        "kernel_time": config.kernel_time,
        "kernel_scale": config.kernel_scale,
        "rho": rho_union,
        "tau": config.tau,
        "delta_t": config.delta_t,
        "delta_s": config.delta_s,
        "annualization": DAILY,
    }
    return CompareReport(
        config=config_echo,
        series=(summaries[0], summaries[1]),
        rows=tuple(all_rows),
    )
