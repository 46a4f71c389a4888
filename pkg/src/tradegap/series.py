"""Annual GDP-per-capita series: CSV I/O, growth-rate splicing, log gaps.

File format is UTF-8 CSV with header ``year,value,source_tag`` (source_tag
optional).  No interpolation anywhere: operations fail loudly on missing
years rather than silently inventing data.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

import math

from .decomposition import GapDenominator, GapKind
from .errors import DataValidationError


@dataclass(frozen=True)
class Observation:
    year: int
    value: float
    source_tag: str = ""


@dataclass(frozen=True)
class GdpSeries:
    """Ordered annual observations; years strictly increasing, values > 0."""

    observations: tuple[Observation, ...]
    label: str = ""

    def __post_init__(self) -> None:
        if not self.observations:
            raise DataValidationError(f"empty series {self.label!r}")
        prev = None
        for obs in self.observations:
            if prev is not None and obs.year <= prev:
                raise DataValidationError(
                    f"series {self.label!r}: years not strictly increasing at {obs.year}"
                )
            if obs.value <= 0:
                raise DataValidationError(
                    f"series {self.label!r}: non-positive value {obs.value} in {obs.year}"
                )
            prev = obs.year

    @property
    def years(self) -> tuple[int, ...]:
        return tuple(o.year for o in self.observations)

    def has_year(self, year: int) -> bool:
        return any(o.year == year for o in self.observations)

    def value(self, year: int) -> float:
        for o in self.observations:
            if o.year == year:
                return o.value
        raise DataValidationError(f"series {self.label!r}: no observation for {year}")

    def __len__(self) -> int:
        return len(self.observations)


@dataclass(frozen=True)
class SpliceSpec:
    """Extend `base` past `splice_year` with `extension`'s growth rates."""

    base: str
    extension: str
    splice_year: int

    def apply(self, series_by_label: dict[str, GdpSeries]) -> GdpSeries:
        return splice(
            series_by_label[self.base], series_by_label[self.extension], self.splice_year
        )


def load_series(path: str | Path, label: str | None = None) -> GdpSeries:
    """Parse a CSV series file; diagnostics carry 1-based line numbers."""
    path = Path(path)
    if not path.exists():
        raise DataValidationError(f"series file not found: {path}")
    rows: list[Observation] = []
    with path.open(newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise DataValidationError(f"{path}: empty series (no header)") from None
        cols = [c.strip().lower() for c in header]
        if cols[:2] != ["year", "value"]:
            raise DataValidationError(
                f"{path}:1: header must be 'year,value[,source_tag]', got {','.join(header)!r}"
            )
        for lineno, row in enumerate(reader, start=2):
            if not row or all(not c.strip() for c in row):
                continue
            if len(row) < 2:
                raise DataValidationError(f"{path}:{lineno}: expected year,value[,source_tag]")
            try:
                year = int(row[0])
                value = float(row[1])
            except ValueError:
                raise DataValidationError(
                    f"{path}:{lineno}: malformed row {','.join(row)!r}"
                ) from None
            tag = row[2].strip() if len(row) > 2 else ""
            rows.append(Observation(year, value, tag))
    if not rows:
        raise DataValidationError(f"{path}: empty series")
    # re-raise invariant violations with the file in the message
    try:
        return GdpSeries(tuple(rows), label=label or path.stem)
    except DataValidationError as exc:
        raise DataValidationError(f"{path}: {exc}") from None


def write_series(series: GdpSeries, path: str | Path) -> None:
    """Inverse of load_series (round-trips valid series exactly)."""
    path = Path(path)
    with path.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["year", "value", "source_tag"])
        for o in series.observations:
            writer.writerow([o.year, repr(o.value), o.source_tag])


def splice(base: GdpSeries, extension: GdpSeries, splice_year: int) -> GdpSeries:
    """Extend `base` beyond `splice_year` using `extension`'s growth rates.

    Output equals ``base`` through ``splice_year``; every later value is
    ``value[t-1] * extension[t]/extension[t-1]``, with consecutive-year
    links required (a gap in the extension raises rather than bridging).
    Spliced rows are tagged ``spliced:<extension label>``.
    """
    for s, name in ((base, "base"), (extension, "extension")):
        if not s.has_year(splice_year):
            raise DataValidationError(
                f"splice year {splice_year} not present in {name} series {s.label!r}"
            )
    kept = [o for o in base.observations if o.year <= splice_year]
    ext_years = [y for y in extension.years if y > splice_year]
    out = list(kept)
    prev_year, prev_value = splice_year, kept[-1].value
    for year in ext_years:
        if year != prev_year + 1:
            raise DataValidationError(
                f"missing growth link: extension {extension.label!r} jumps "
                f"{prev_year} -> {year}"
            )
        prev_value = prev_value * (extension.value(year) / extension.value(prev_year))
        out.append(Observation(year, prev_value, f"spliced:{extension.label}"))
        prev_year = year
    return GdpSeries(tuple(out), label=base.label)


def log_gap(synthetic: GdpSeries, historical: GdpSeries, year: int) -> GapDenominator:
    """ln(synthetic[year] / historical[year]) as an explicit denominator."""
    return GapDenominator(
        GapKind.EXPLICIT, math.log(synthetic.value(year) / historical.value(year))
    )
