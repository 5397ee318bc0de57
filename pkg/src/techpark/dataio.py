"""Reading and writing the package's CSV and JSON formats.

Currency amounts are in billions throughout, with a plain decimal point.

macro CSV::

    year,nominal_gdp,inflation
    2010,45173,1.085
    2013,,1.0

SME CSV (one count and one turnover column per category)::

    year,individual_count,...,medium_count,individual_turnover,...,medium_turnover,total_turnover

Report JSON::

    {"base_year": 2013, "epsilon": 1350.0,
     "rows": [{"beta": 0.1, "year": 2013, "g": ..., "delta_g": ..., "epsilon": ...}]}
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from typing import IO, Iterable, Mapping, Sequence

from .errors import (
    CategoryExceedsTotal,
    DuplicateYear,
    MalformedRow,
    MissingColumns,
    NonPositiveInflation,
)
from .potential import PotentialReport, PotentialRow


@dataclass(frozen=True)
class SmeCategory:
    """One size class of small and medium enterprises.

    ``revenue_band`` is a ``(low, high)`` interval of annual revenue in
    billions; ``math.inf`` marks an open upper end.
    """

    name: str
    max_employees: int
    revenue_band: tuple[float, float]


# Russian partition; revenue thresholds of 60 and 400 million rubles.
# Individual entrepreneurs carry no revenue threshold.
DEFAULT_CATEGORIES: tuple[SmeCategory, ...] = (
    SmeCategory("individual", 5, (0.0, math.inf)),
    SmeCategory("micro", 16, (0.0, 0.06)),
    SmeCategory("small", 100, (0.06, 0.4)),
    SmeCategory("medium", 500, (0.4, math.inf)),
)


@dataclass(frozen=True)
class MacroRecord:
    year: int
    nominal_gdp: float | None
    inflation: float

    def __post_init__(self):
        if not self.inflation > 0:
            raise NonPositiveInflation(self.year, self.inflation)


@dataclass(frozen=True)
class SmeRecord:
    """One year of SME statistics.

    ``counts`` and ``turnover`` are keyed by category name; ``total_turnover``
    is the turnover ``S`` of all enterprises, SMEs included.
    """

    year: int
    counts: Mapping[str, int]
    turnover: Mapping[str, float]
    total_turnover: float

    def __post_init__(self):
        if not self.total_turnover > 0:
            raise CategoryExceedsTotal(
                f"{self.year}: total turnover must be positive, got {self.total_turnover!r}")
        for name, c in self.counts.items():
            if c < 0:
                raise ValueError(f"{self.year}: negative count for {name}")
        for name, s in self.turnover.items():
            if s < 0:
                raise ValueError(f"{self.year}: negative turnover for {name}")
            if s > self.total_turnover:
                raise CategoryExceedsTotal(
                    f"{self.year}: {name} turnover {s!r} exceeds total {self.total_turnover!r}")
        if sum(self.turnover.values()) > self.total_turnover:
            raise CategoryExceedsTotal(
                f"{self.year}: category turnovers sum to more than the total {self.total_turnover!r}")


MACRO_COLUMNS = ("year", "nominal_gdp", "inflation")


def sme_columns(categories: Sequence[SmeCategory] = DEFAULT_CATEGORIES) -> tuple[str, ...]:
    names = [c.name for c in categories]
    return ("year", *(f"{n}_count" for n in names), *(f"{n}_turnover" for n in names),
            "total_turnover")


def _reader(source: str | IO[str], required: Sequence[str]):
    text = source if isinstance(source, str) else source.read()
    reader = csv.DictReader(io.StringIO(text))
    if reader.fieldnames is None:
        raise MissingColumns("missing header row")
    header = [h.strip() for h in reader.fieldnames]
    missing = [c for c in required if c not in header]
    if missing:
        raise MissingColumns(f"missing columns: {', '.join(missing)}")
    reader.fieldnames = header
    return reader


def _cell(row: dict, key: str, line: int, kind, optional: bool = False):
    raw = row.get(key)
    raw = "" if raw is None else raw.strip()
    if raw == "":
        if optional:
            return None
        raise MalformedRow(line, f"empty {key}")
    try:
        if kind is int:
            value = int(raw)
        else:
            value = float(raw)
    except ValueError:
        raise MalformedRow(line, f"bad {key} value {raw!r}") from None
    if kind is float and not math.isfinite(value):
        raise MalformedRow(line, f"non-finite {key} value {raw!r}")
    return value


def _check_unique(records, lines):
    seen = {}
    for rec, line in zip(records, lines):
        if rec.year in seen:
            raise DuplicateYear(rec.year, line)
        seen[rec.year] = line


def parse_macro_series(source: str | IO[str]) -> list[MacroRecord]:
    """Parse a macro CSV into records sorted by year.

    Raises ``MalformedRow``, ``DuplicateYear`` or ``NonPositiveInflation``;
    no bad row is skipped or defaulted.
    """
    reader = _reader(source, MACRO_COLUMNS)
    records, lines = [], []
    for row in reader:
        line = reader.line_num
        year = _cell(row, "year", line, int)
        nominal = _cell(row, "nominal_gdp", line, float, optional=True)
        inflation = _cell(row, "inflation", line, float)
        if not inflation > 0:
            raise NonPositiveInflation(year, inflation, line)
        if nominal is not None and not nominal > 0:
            raise MalformedRow(line, f"nominal_gdp must be positive, got {nominal!r}")
        records.append(MacroRecord(year, nominal, inflation))
        lines.append(line)
    _check_unique(records, lines)
    return sorted(records, key=lambda r: r.year)


def parse_sme_series(source: str | IO[str],
                     categories: Sequence[SmeCategory] = DEFAULT_CATEGORIES) -> list[SmeRecord]:
    """Parse an SME CSV into records sorted by year.

    Column names follow ``sme_columns(categories)``, so a different national
    partition only needs a different ``categories`` tuple.
    """
    reader = _reader(source, sme_columns(categories))
    records, lines = [], []
    for row in reader:
        line = reader.line_num
        year = _cell(row, "year", line, int)
        counts, turnover = {}, {}
        for cat in categories:
            n = _cell(row, f"{cat.name}_count", line, int)
            if n < 0:
                raise MalformedRow(line, f"negative {cat.name}_count")
            s = _cell(row, f"{cat.name}_turnover", line, float)
            if s < 0:
                raise MalformedRow(line, f"negative {cat.name}_turnover")
            counts[cat.name] = n
            turnover[cat.name] = s
        total = _cell(row, "total_turnover", line, float)
        if not total > 0:
            raise MalformedRow(line, f"total_turnover must be positive, got {total!r}")
        try:
            rec = SmeRecord(year, counts, turnover, total)
        except CategoryExceedsTotal as exc:
            raise CategoryExceedsTotal(f"line {line}: {exc}") from None
        records.append(rec)
        lines.append(line)
    _check_unique(records, lines)
    return sorted(records, key=lambda r: r.year)


def _num(x) -> str:
    if x is None:
        return ""
    return repr(float(x)) if not isinstance(x, int) else str(x)


def format_macro_csv(records: Iterable[MacroRecord]) -> str:
    out = io.StringIO()
    w = csv.writer(out, lineterminator="\n")
    w.writerow(MACRO_COLUMNS)
    for r in records:
        w.writerow([r.year, _num(r.nominal_gdp), _num(r.inflation)])
    return out.getvalue()


def format_sme_csv(records: Iterable[SmeRecord],
                   categories: Sequence[SmeCategory] = DEFAULT_CATEGORIES) -> str:
    out = io.StringIO()
    w = csv.writer(out, lineterminator="\n")
    w.writerow(sme_columns(categories))
    for r in records:
        w.writerow([r.year,
                    *(int(r.counts[c.name]) for c in categories),
                    *(_num(r.turnover[c.name]) for c in categories),
                    _num(r.total_turnover)])
    return out.getvalue()


# -- reports ---------------------------------------------------------------

ROW_FIELDS = ("beta", "year", "g", "delta_g", "epsilon")


def report_to_dict(report: PotentialReport) -> dict:
    return {
        "base_year": report.base_year,
        "epsilon": report.epsilon,
        "rows": [{"beta": r.beta, "year": r.year, "g": r.g,
                  "delta_g": r.delta_g, "epsilon": r.epsilon} for r in report.rows],
        "scenario": dict(report.scenario),
        "diagnostics": dict(report.diagnostics),
    }


def emit_report(report: PotentialReport, format: str = "json") -> str:
    """Serialize a report as JSON or CSV.

    JSON output round-trips exactly through ``parse_report``. CSV carries the
    rows only and is meant for plotting.
    """
    if format == "json":
        return json.dumps(report_to_dict(report), indent=2) + "\n"
    if format == "csv":
        out = io.StringIO()
        w = csv.writer(out, lineterminator="\n")
        w.writerow(ROW_FIELDS)
        for r in report.rows:
            w.writerow([repr(r.beta), r.year, repr(r.g), repr(r.delta_g), repr(r.epsilon)])
        return out.getvalue()
    raise ValueError(f"unknown report format {format!r}")


def parse_report(source: str | IO[str]) -> PotentialReport:
    text = source if isinstance(source, str) else source.read()
    data = json.loads(text)
    rows = tuple(
        PotentialRow(beta=float(r["beta"]), year=int(r["year"]), g=float(r["g"]),
                     delta_g=float(r["delta_g"]),
                     epsilon=float(r.get("epsilon", data["epsilon"])))
        for r in data["rows"])
    return PotentialReport(base_year=data["base_year"], epsilon=data["epsilon"], rows=rows,
                           scenario=data.get("scenario", {}),
                           diagnostics=data.get("diagnostics", {}))
