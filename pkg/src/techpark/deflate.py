"""Nominal to real conversion against a fixed base year.

Cumulative inflation runs backward from the base year::

    T(base) = 1
    T(y)    = inflation(y) * T(y + 1)      for y < base

so the deflator is ``1 / T(y)`` and the real value is ``nominal(y) * T(y)``.
With the Russian 2010-2013 factors (1.085, 1.060, 1.064) this gives
T = 1.224, 1.128, 1.064 and deflators 0.817, 0.887, 0.940.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .dataio import MacroRecord, SmeRecord
from .errors import GapInYears, MissingBaseYear, MissingNominal, MissingYearData


@dataclass(frozen=True)
class DeflatedSeries:
    base_year: int
    total_inflation: Mapping[int, float]
    deflator: Mapping[int, float]
    real_value: Mapping[int, float | None]
    nominal_value: Mapping[int, float | None]
    inflation: Mapping[int, float]

    @property
    def years(self) -> list[int]:
        return sorted(self.total_inflation)

    def real_gdp(self) -> dict[int, float]:
        """Real values for the years that have them (the base year may not)."""
        return {y: v for y, v in sorted(self.real_value.items()) if v is not None}


def cumulative_inflation(series: Sequence[MacroRecord], base_year: int) -> dict[int, float]:
    by_year = {r.year: r for r in series}
    if base_year not in by_year:
        raise MissingBaseYear(f"base year {base_year} not in series")
    years = sorted(by_year)
    later = [y for y in years if y > base_year]
    if later:
        raise GapInYears(f"years after the base year {base_year} cannot be deflated: {later}")
    if years != list(range(years[0], base_year + 1)):
        missing = sorted(set(range(years[0], base_year + 1)) - set(years))
        raise GapInYears(f"non-consecutive years, missing {missing}")
    total = {base_year: 1.0}
    for y in range(base_year - 1, years[0] - 1, -1):
        total[y] = by_year[y].inflation * total[y + 1]
    return dict(sorted(total.items()))


def deflate_series(series: Sequence[MacroRecord], base_year: int) -> DeflatedSeries:
    """Deflate nominal GDP to prices of ``base_year``.

    Every year except the base year must carry a nominal value; a blank
    base-year value just leaves its real value undefined.
    """
    total = cumulative_inflation(series, base_year)
    deflator, real, nominal = {}, {}, {}
    for r in series:
        t = total[r.year]
        deflator[r.year] = 1.0 / t
        nominal[r.year] = r.nominal_gdp
        if r.nominal_gdp is None:
            if r.year != base_year:
                raise MissingNominal(f"no nominal value for {r.year}")
            real[r.year] = None
        else:
            real[r.year] = r.nominal_gdp * t
    return DeflatedSeries(base_year=base_year, total_inflation=total, deflator=deflator,
                          real_value=real, nominal_value=nominal,
                          inflation={r.year: r.inflation for r in series})


def deflate_values(values: Mapping[int, float], total_inflation: Mapping[int, float]) -> dict[int, float]:
    missing = sorted(set(values) - set(total_inflation))
    if missing:
        raise MissingYearData(f"no inflation data for years {missing}")
    return {y: v * total_inflation[y] for y, v in sorted(values.items())}


def deflate_sme_records(records: Sequence[SmeRecord],
                        total_inflation: Mapping[int, float]) -> list[SmeRecord]:
    """Put every turnover figure of ``records`` into base-year prices."""
    out = []
    for r in records:
        if r.year not in total_inflation:
            raise MissingYearData(f"no inflation data for SME year {r.year}")
        t = total_inflation[r.year]
        out.append(SmeRecord(r.year, dict(r.counts),
                             {k: v * t for k, v in r.turnover.items()},
                             r.total_turnover * t))
    return out
