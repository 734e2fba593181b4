"""File formats: series CSV, grid exports, and the flat config format.

Series CSV: UTF-8, comma-separated, header ``date,pnl`` or ``pnl``, one
sample per row, dates ISO-8601.  Lines starting with ``#`` are metadata
comments (``# key: value``) and are ignored by the parser but readable
via ``read_csv_metadata``; the synth command records its generator and
seed this way.

Grid exports: ``csv`` is a plot-ready long matrix (h, center_t, value,
flag), one row per cell; ``json`` is the full ``GridExport`` record.
Degenerate cells serialize as an empty CSV value / JSON null, never 0.

Config files: one ``key = value`` per line, ``#`` comments, lists
comma-separated.  Recognized analysis keys: horizons, measure (lsr|lra),
beta, normalize, kernel_time, kernel_scale, rho, tau (integer or
"last"), delta_t, delta_s (numbers or "paper" for the standard
convention delta_s = 100*rho, delta_t = timespan/4).  Synth-spec keys:
n, segments (length:drift pairs), noise_amplitude, seed.

All floats are written with ``repr`` so text round-trips are exact.
"""

from __future__ import annotations

import hashlib
import json
import math
from dataclasses import dataclass

from .errors import IoError, ParseError, UsageError
from .kernels import KERNEL_SHAPES
from .measures import MeasureField
from .series import PnLSeries, validate
from .synth import SynthSpec

DEFAULT_HORIZONS = (50, 100, 250, 500, 1000)


# -- series CSV ---------------------------------------------------------------

def _read_text(path) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise IoError(f"cannot read {path}: {exc}") from exc
    except UnicodeDecodeError as exc:
        raise ParseError(f"{path} is not UTF-8 text: {exc}") from exc


def _write_text(path, text: str) -> None:
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise IoError(f"cannot write {path}: {exc}") from exc


def load_csv(path) -> PnLSeries:
    """Parse a PnL CSV into a validated series.

    Raises:
        ParseError: bad header, wrong field count, or non-numeric value
            (with the 1-based line number).
        TooShort/NonFinite/LabelMismatch: propagated from validation.
        IoError: unreadable file.
    """
    header = None
    dated = False
    values: list[float] = []
    labels: list[str] = []
    for lineno, raw in enumerate(_read_text(path).splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if header is None:
            header = tuple(col.strip().lower() for col in line.split(","))
            if header == ("date", "pnl"):
                dated = True
            elif header != ("pnl",):
                raise ParseError(
                    f"expected header 'date,pnl' or 'pnl', got {line!r}", lineno
                )
            continue
        cols = [col.strip() for col in line.split(",")]
        if len(cols) != len(header):
            raise ParseError(
                f"expected {len(header)} fields, got {len(cols)}", lineno
            )
        try:
            values.append(float(cols[-1]))
        except ValueError:
            raise ParseError(f"non-numeric pnl value {cols[-1]!r}", lineno) from None
        if dated:
            labels.append(cols[0])
    if header is None:
        raise ParseError("no header row found")
    return validate(values, labels if dated else None)


def read_csv_metadata(path) -> dict:
    """Collect ``# key: value`` comment lines from a series CSV."""
    meta: dict[str, str] = {}
    for raw in _read_text(path).splitlines():
        line = raw.strip()
        if not line.startswith("#"):
            continue
        body = line.lstrip("#").strip()
        if ":" in body:
            key, _, val = body.partition(":")
            meta[key.strip()] = val.strip()
    return meta


def write_series_csv(path, series: PnLSeries, metadata: dict | None = None) -> None:
    """Write a series CSV with optional metadata comment lines."""
    lines = [f"# {k}: {v}" for k, v in (metadata or {}).items()]
    if series.labels is not None:
        lines.append("date,pnl")
        lines.extend(
            f"{lab},{float(val)!r}" for lab, val in zip(series.labels, series.values)
        )
    else:
        lines.append("pnl")
        lines.extend(f"{float(val)!r}" for val in series.values)
    _write_text(path, "\n".join(lines) + "\n")


def series_checksum(series: PnLSeries) -> str:
    """SHA-256 over the exact sample values (labels excluded)."""
    payload = ",".join(repr(float(v)) for v in series.values)
    return hashlib.sha256(payload.encode("ascii")).hexdigest()


# -- grid export --------------------------------------------------------------

@dataclass(frozen=True)
class GridExport:
    """Serializable snapshot of a MeasureField; flagged cells are None."""

    horizons: list[int]
    time_centers: list[list[float]]
    values: list[list[float | None]]
    flags: list[list[bool]]
    metadata: dict


def build_grid_export(fld: MeasureField, source_meta: dict | None = None) -> GridExport:
    kind = fld.kind
    metadata = {
        "measure": kind.name,
        "beta": kind.beta,
        "normalize": kind.normalize,
        "n": fld.grid.n,
        "source_sha256": series_checksum(fld.grid.source),
    }
    for key in ("generator", "seed"):
        if source_meta and key in source_meta:
            metadata[key] = source_meta[key]
    horizons = list(fld.horizons)
    return GridExport(
        horizons=horizons,
        time_centers=[[float(c) for c in fld.grid.row(h).center_t] for h in horizons],
        values=[
            [None if flg else float(val) for val, flg in zip(fld.values[h], fld.flags[h])]
            for h in horizons
        ],
        flags=[[bool(flg) for flg in fld.flags[h]] for h in horizons],
        metadata=metadata,
    )


def export_field(fld: MeasureField, path, fmt: str = "csv",
                 source_meta: dict | None = None) -> None:
    """Write a measure field to ``path`` as ``csv`` or ``json``."""
    export = build_grid_export(fld, source_meta)
    if fmt == "csv":
        lines = [f"# {k}: {v}" for k, v in export.metadata.items()]
        lines.append("h,center_t,value,flag")
        for h, centers, vals, flgs in zip(
            export.horizons, export.time_centers, export.values, export.flags
        ):
            for center, val, flg in zip(centers, vals, flgs):
                rendered = "" if val is None else repr(val)
                lines.append(f"{h},{center!r},{rendered},{int(flg)}")
        _write_text(path, "\n".join(lines) + "\n")
    elif fmt == "json":
        doc = {
            "horizons": export.horizons,
            "time_centers": export.time_centers,
            "values": export.values,
            "flags": export.flags,
            "metadata": export.metadata,
        }
        _write_text(path, json.dumps(doc, indent=2) + "\n")
    else:
        raise UsageError(f"unknown export format {fmt!r}")


def load_grid_export(path) -> GridExport:
    """Re-import a JSON grid export."""
    try:
        doc = json.loads(_read_text(path))
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid grid JSON: {exc}") from exc
    try:
        return GridExport(
            horizons=list(doc["horizons"]),
            time_centers=[list(row) for row in doc["time_centers"]],
            values=[list(row) for row in doc["values"]],
            flags=[list(row) for row in doc["flags"]],
            metadata=dict(doc["metadata"]),
        )
    except KeyError as exc:
        raise ParseError(f"grid JSON missing field {exc}") from exc


# -- flat config format ---------------------------------------------------------

@dataclass(frozen=True)
class AnalysisConfig:
    """Parsed analysis configuration; None means "use the defaults"."""

    horizons: tuple[int, ...] | None = None
    measure: str = "lsr"
    beta: float = 0.75
    normalize: bool = False
    kernel_time: str = "uniform"
    kernel_scale: str = "uniform"
    rho: tuple[int, ...] | None = None
    tau: int | str = "last"
    delta_t: float | str = "paper"
    delta_s: float | str = "paper"

    def resolved_horizons(self, n: int) -> tuple[int, ...]:
        """Explicit horizons as given; the default set clipped to n//h >= 2."""
        if self.horizons is not None:
            return self.horizons
        clipped = tuple(h for h in DEFAULT_HORIZONS if 2 <= h and n // h >= 2)
        if not clipped:
            raise UsageError(
                f"series of length {n} too short for default horizons {DEFAULT_HORIZONS}"
            )
        return clipped

    def resolved_rho(self, horizons: tuple[int, ...]) -> tuple[int, ...]:
        rho = self.rho if self.rho is not None else horizons
        missing = [r for r in rho if r not in horizons]
        if missing:
            raise UsageError(
                f"rho values {missing} not among the decomposed horizons {list(horizons)}"
            )
        return rho

    def resolved_tau(self, n: int) -> float:
        if self.tau == "last":
            return float(n - 1)
        tau = float(self.tau)
        if not 0 <= tau <= n - 1:
            raise UsageError(f"tau {tau} outside sample range [0, {n - 1}]")
        return tau

    def resolved_delta_t(self, n: int) -> float:
        if self.delta_t == "paper":
            return (n - 1) / 4.0
        return float(self.delta_t)

    def resolved_delta_s(self, rho: float) -> float:
        if self.delta_s == "paper":
            return 100.0 * float(rho)
        return float(self.delta_s)


def _parse_flat(text: str) -> dict[str, tuple[str, int]]:
    """Split ``key = value`` lines; returns value and line number per key."""
    out: dict[str, tuple[str, int]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ParseError(f"expected 'key = value', got {line!r}", lineno)
        key, _, val = line.partition("=")
        key = key.strip().lower()
        if key in out:
            raise ParseError(f"duplicate key {key!r}", lineno)
        out[key] = (val.strip(), lineno)
    return out


def _int_list(val: str, lineno: int) -> tuple[int, ...]:
    try:
        items = tuple(int(part.strip()) for part in val.split(",") if part.strip())
    except ValueError:
        raise ParseError(f"expected a comma-separated integer list, got {val!r}", lineno) from None
    if not items:
        raise ParseError("empty list", lineno)
    return items


def _number(val: str, lineno: int) -> float:
    try:
        num = float(val)
    except ValueError:
        raise ParseError(f"expected a number, got {val!r}", lineno) from None
    if not math.isfinite(num):
        raise ParseError(f"expected a finite number, got {val!r}", lineno)
    return num


def _boolean(val: str, lineno: int) -> bool:
    low = val.lower()
    if low in ("true", "yes", "1"):
        return True
    if low in ("false", "no", "0"):
        return False
    raise ParseError(f"expected a boolean, got {val!r}", lineno)


def parse_config(text: str) -> AnalysisConfig:
    """Parse the analysis config format into an AnalysisConfig."""
    entries = _parse_flat(text)
    kwargs: dict = {}
    for key, (val, lineno) in entries.items():
        if key == "horizons":
            kwargs["horizons"] = _int_list(val, lineno)
        elif key == "measure":
            if val.lower() not in ("lsr", "lra"):
                raise ParseError(f"measure must be lsr or lra, got {val!r}", lineno)
            kwargs["measure"] = val.lower()
        elif key == "beta":
            kwargs["beta"] = _number(val, lineno)
        elif key == "normalize":
            kwargs["normalize"] = _boolean(val, lineno)
        elif key in ("kernel_time", "kernel_scale"):
            if val.lower() not in KERNEL_SHAPES:
                raise ParseError(
                    f"{key} must be one of {', '.join(KERNEL_SHAPES)}, got {val!r}", lineno
                )
            kwargs[key] = val.lower()
        elif key == "rho":
            kwargs["rho"] = _int_list(val, lineno)
        elif key == "tau":
            if val.lower() == "last":
                kwargs["tau"] = "last"
            else:
                try:
                    kwargs["tau"] = int(val)
                except ValueError:
                    raise ParseError(f"tau must be an integer or 'last', got {val!r}", lineno) from None
        elif key in ("delta_t", "delta_s"):
            if val.lower() == "paper":
                kwargs[key] = "paper"
            else:
                num = _number(val, lineno)
                if num <= 0:
                    raise ParseError(f"{key} must be positive, got {val!r}", lineno)
                kwargs[key] = num
        else:
            raise ParseError(f"unknown config key {key!r}", lineno)
    return AnalysisConfig(**kwargs)


def parse_synth_spec(text: str, seed_override: int | None = None) -> SynthSpec:
    """Parse the synth-spec config format into a SynthSpec."""
    entries = _parse_flat(text)
    required = {"n", "segments", "noise_amplitude", "seed"} - set(entries)
    if seed_override is not None:
        required.discard("seed")
    if required:
        raise ParseError(f"missing synth keys: {', '.join(sorted(required))}")
    fields: dict = {}
    for key, (val, lineno) in entries.items():
        if key == "n":
            fields["n"] = int(_number(val, lineno))
        elif key == "segments":
            segments = []
            for part in val.split(","):
                part = part.strip()
                if not part:
                    continue
                length, sep, drift = part.partition(":")
                if not sep:
                    raise ParseError(
                        f"segment must be 'length:drift', got {part!r}", lineno
                    )
                try:
                    segments.append((int(length), float(drift)))
                except ValueError:
                    raise ParseError(f"bad segment {part!r}", lineno) from None
            if not segments:
                raise ParseError("segments list is empty", lineno)
            fields["segments"] = tuple(segments)
        elif key == "noise_amplitude":
            fields["noise_amplitude"] = _number(val, lineno)
        elif key == "seed":
            fields["seed"] = int(_number(val, lineno))
        else:
            raise ParseError(f"unknown synth key {key!r}", lineno)
    if seed_override is not None:
        fields["seed"] = int(seed_override)
    return SynthSpec(**fields)
