"""The four local regressions and the average SME revenue.

* ``mid``   - real GDP as a straight line in time
* ``smegm`` - SME count as a parabola in time
* ``fmi``   - real GDP as a straight line in total enterprise turnover
* ``smefm`` - SME turnover as a fixed share ``d`` of total turnover

SME counts and turnover are taken over the *included* categories, by default
everything but medium-sized enterprises, so that ``n0`` and the average
revenue ``s1sse`` describe the same population as ``d``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Collection, Mapping, Sequence

from .dataio import SmeRecord
from .errors import InsufficientData, MissingYearData, NoYearOverlap, ZeroIncludedCount
from .potential import YearInputs
from .regress import PolyModel, ProportionalModel, fit_poly, fit_proportional

DEFAULT_EXCLUDE = frozenset({"medium"})


@dataclass(frozen=True)
class LocalModelSet:
    mid: PolyModel
    smegm: PolyModel
    fmi: PolyModel
    smefm: ProportionalModel
    aar_series: Mapping[int, float]
    years: tuple[int, ...]


def _fit(model: str, xs, ys, degree: int, t_origin, min_points: int) -> PolyModel:
    if len(xs) < min_points:
        raise InsufficientData(f"need at least {min_points} years, got {len(xs)}", model=model)
    try:
        return fit_poly(xs, ys, degree, t_origin=t_origin)
    except InsufficientData as exc:
        raise InsufficientData(str(exc), model=model) from None


def fit_mid(real_gdp: Mapping[int, float], t_origin: int | None = None) -> PolyModel:
    years = sorted(real_gdp)
    return _fit("MID", years, [real_gdp[y] for y in years], 1,
                years[0] if t_origin is None and years else t_origin, 3)


def fit_smegm(sme_counts: Mapping[int, float], t_origin: int | None = None) -> PolyModel:
    years = sorted(sme_counts)
    return _fit("SMEGM", years, [sme_counts[y] for y in years], 2,
                years[0] if t_origin is None and years else t_origin, 4)


def fit_fmi(turnover: Mapping[int, float], real_gdp: Mapping[int, float]) -> PolyModel:
    years = sorted(set(turnover) & set(real_gdp))
    if not years:
        raise NoYearOverlap("FMI: turnover and GDP series share no year")
    return _fit("FMI", [turnover[y] for y in years], [real_gdp[y] for y in years], 1, 0.0, 3)


def fit_smefm(turnover: Mapping[int, float], sme_turnover: Mapping[int, float]) -> ProportionalModel:
    years = sorted(set(turnover) & set(sme_turnover))
    if not years:
        raise NoYearOverlap("SMEFM: turnover series share no year")
    return fit_proportional([turnover[y] for y in years], [sme_turnover[y] for y in years])


def included_count(sme: SmeRecord, exclude: Collection[str] = DEFAULT_EXCLUDE) -> int:
    return sum(n for name, n in sme.counts.items() if name not in exclude)


def included_turnover(sme: SmeRecord, exclude: Collection[str] = DEFAULT_EXCLUDE) -> float:
    return sum(s for name, s in sme.turnover.items() if name not in exclude)


def compute_aar(sme: SmeRecord, exclude: Collection[str] = DEFAULT_EXCLUDE) -> float:
    """Average annual revenue of one enterprise over the included categories."""
    n = included_count(sme, exclude)
    if n <= 0:
        raise ZeroIncludedCount(f"{sme.year}: no enterprises in the included categories")
    return included_turnover(sme, exclude) / n


def aar_series(records: Sequence[SmeRecord], exclude: Collection[str] = DEFAULT_EXCLUDE,
               window: int = 1) -> dict[int, float]:
    """Per-year AAR; ``window > 1`` averages it over the trailing years."""
    if window < 1:
        raise ValueError("window must be >= 1")
    years = sorted(r.year for r in records)
    per_year = {r.year: compute_aar(r, exclude) for r in records}
    out = {}
    for i, y in enumerate(years):
        tail = years[max(0, i - window + 1): i + 1]
        out[y] = sum(per_year[t] for t in tail) / len(tail)
    return out


def fit_local_models(real_gdp: Mapping[int, float], sme: Sequence[SmeRecord],
                     exclude: Collection[str] = DEFAULT_EXCLUDE,
                     years: Collection[int] | None = None,
                     aar_window: int = 1) -> LocalModelSet:
    """Fit all four models on a common range of years.

    The default range is every year present in both ``real_gdp`` and ``sme``.
    """
    by_year = {r.year: r for r in sme}
    common = sorted(set(real_gdp) & set(by_year))
    if years is not None:
        common = sorted(set(common) & set(years))
    gdp = {y: real_gdp[y] for y in common}
    recs = [by_year[y] for y in common]
    counts = {r.year: included_count(r, exclude) for r in recs}
    turnover = {r.year: r.total_turnover for r in recs}
    sme_turnover = {r.year: included_turnover(r, exclude) for r in recs}

    mid = fit_mid(gdp)
    smegm = fit_smegm(counts)
    fmi = fit_fmi(turnover, gdp)
    smefm = fit_smefm(turnover, sme_turnover)
    return LocalModelSet(mid=mid, smegm=smegm, fmi=fmi, smefm=smefm,
                         aar_series=aar_series(recs, exclude, aar_window),
                         years=tuple(common))


def year_inputs(sme: Sequence[SmeRecord], years: Sequence[int] | None = None,
                exclude: Collection[str] = DEFAULT_EXCLUDE,
                turnover: Mapping[int, float] | None = None,
                aar_window: int = 1) -> list[YearInputs]:
    """Assemble per-year sweep inputs from SME statistics.

    Total turnover comes from the SME records unless ``turnover`` is given.
    A requested year without an SME record reuses the AAR and survivor count
    of the nearest earlier year and is marked ``carried``; it still needs a
    turnover value.
    """
    by_year = {r.year: r for r in sme}
    aar = aar_series(sme, exclude, aar_window)
    if years is None:
        years = sorted(by_year)
    S = {r.year: r.total_turnover for r in sme}
    if turnover is not None:
        S.update(turnover)
    out = []
    for y in sorted(years):
        if y not in S:
            raise MissingYearData(f"no total turnover for {y}")
        if y in by_year:
            out.append(YearInputs(y, S[y], aar[y], float(included_count(by_year[y], exclude))))
            continue
        prior = [p for p in by_year if p < y]
        if not prior:
            raise MissingYearData(f"no SME record at or before {y}")
        p = max(prior)
        out.append(YearInputs(y, S[y], aar[p], float(included_count(by_year[p], exclude)),
                              carried=True))
    return out
