"""Technology-park potential: what-if composition of the fitted local models.

With the GDP-on-turnover regression ``g = b0 + b1*S`` and the SME share ``d``,
the indicator at year ``t`` under a survival uplift ``beta`` is::

    g(beta, t) = b0 + b1 * ((1 - d) * S(t) + alpha * s1sse(t) * n0 * (k + beta) / k)

and the increment over the no-park baseline is linear in ``beta``::

    delta_g = g(beta, t) - g(0, t) = epsilon * beta,
    epsilon = b1 * alpha * s1sse(t) * n0 / k

``k`` is the share of start-ups surviving without parks, ``beta`` in
``[0, 1 - k]`` the extra share surviving thanks to them, and ``alpha`` (default
1) an optional multiplier on the average SME turnover.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable, Mapping, Sequence

from .errors import BetaOutOfRange, KOutOfRange, ScenarioError, ShareOutOfRange
from .regress import PolyModel


def _check_k_beta(k: float, beta: float) -> None:
    if not 0.0 < k <= 1.0:
        raise KOutOfRange(f"k must lie in (0, 1], got {k!r}")
    if not 0.0 <= beta <= 1.0 - k:
        raise BetaOutOfRange(f"beta must lie in [0, 1 - k] = [0, {1.0 - k!r}], got {beta!r}")


def _survival_ratio(k: float, beta: float) -> float:
    # At the limit beta = 1 - k every start-up survives; k + (1 - k) can miss
    # 1.0 by an ulp in floating point.
    if beta == 1.0 - k:
        return 1.0 / k
    return (k + beta) / k


@dataclass(frozen=True)
class ScenarioParams:
    k: float
    beta: float
    d: float
    n0: float
    s1sse: float
    alpha: float = 1.0

    def __post_init__(self):
        _check_k_beta(self.k, self.beta)
        if not 0.0 <= self.d <= 1.0:
            raise ShareOutOfRange(f"d must lie in [0, 1], got {self.d!r}")
        if not self.n0 > 0:
            raise ScenarioError(f"n0 must be positive, got {self.n0!r}")
        if not self.s1sse > 0:
            raise ScenarioError(f"s1sse must be positive, got {self.s1sse!r}")
        if not self.alpha >= 1.0:
            raise ScenarioError(f"alpha must be >= 1, got {self.alpha!r}")


def potential_count(n0: float, k: float, beta: float) -> float:
    """Number of surviving SMEs had all of them started inside parks."""
    _check_k_beta(k, beta)
    if beta == 0.0:
        return float(n0)
    if beta == 1.0 - k:
        return n0 / k
    return n0 * (k + beta) / k


def other_turnover(S: float, d: float) -> float:
    if not 0.0 <= d <= 1.0:
        raise ShareOutOfRange(f"d must lie in [0, 1], got {d!r}")
    return (1.0 - d) * S


def sme_turnover_param(s1sse: float, n0: float, k: float, beta: float,
                       alpha: float = 1.0) -> float:
    _check_k_beta(k, beta)
    return alpha * s1sse * n0 * _survival_ratio(k, beta)


def _slope(fmi: PolyModel) -> tuple[float, float]:
    if fmi.degree != 1:
        raise ValueError(f"the GDP-on-turnover model must be linear, got degree {fmi.degree}")
    b0, b1 = fmi.coefficients
    return b0, b1


def indicator(fmi: PolyModel, S_t: float, scenario: ScenarioParams) -> float:
    """GDP at turnover ``S_t`` under ``scenario``."""
    b0, b1 = _slope(fmi)
    s = scenario
    return b0 + b1 * (other_turnover(S_t, s.d)
                      + sme_turnover_param(s.s1sse, s.n0, s.k, s.beta, s.alpha))


def increment(fmi: PolyModel, scenario: ScenarioParams) -> tuple[float, float]:
    """Return ``(epsilon, delta_g)`` for ``scenario``."""
    _, b1 = _slope(fmi)
    s = scenario
    epsilon = b1 * s.alpha * s.s1sse * s.n0 / s.k
    return epsilon, epsilon * s.beta


@dataclass(frozen=True)
class YearInputs:
    """Per-year inputs of a sweep.

    ``carried`` marks a year whose ``s1sse`` and ``n0`` were copied from the
    nearest earlier year because it had no SME record of its own.
    """

    year: int
    S: float
    s1sse: float
    n0: float
    carried: bool = False


@dataclass(frozen=True)
class PotentialRow:
    beta: float
    year: int
    g: float
    delta_g: float
    epsilon: float


@dataclass(frozen=True)
class PotentialReport:
    base_year: int
    epsilon: float
    rows: tuple[PotentialRow, ...]
    scenario: Mapping[str, Any] = field(default_factory=dict)
    diagnostics: Mapping[str, Any] = field(default_factory=dict)


def beta_sweep(fmi: PolyModel, k: float, d: float, years: Sequence[YearInputs],
               betas: Iterable[float], alpha: float = 1.0, limit: bool = False,
               base_year: int | None = None) -> PotentialReport:
    """Evaluate the indicator and its increment over a grid of betas and years.

    Rows are ordered by ``(beta, year)``. ``limit=True`` adds ``beta = 1 - k``,
    the case where every start-up survives. The report's top-level epsilon is
    the one of ``base_year`` (default: the last year).
    """
    if not years:
        raise ValueError("a sweep needs at least one year")
    betas = sorted(set(float(b) for b in betas))
    if limit and (1.0 - k) not in betas:
        betas = sorted(betas + [1.0 - k])
    for b in betas:
        _check_k_beta(k, b)
    years = sorted(years, key=lambda y: y.year)
    if base_year is None:
        base_year = years[-1].year
    by_year = {y.year: y for y in years}
    if base_year not in by_year:
        raise ValueError(f"base year {base_year} is not among the sweep years")

    rows = []
    eps_by_year = {}
    for b in betas:
        for yi in years:
            sc = ScenarioParams(k=k, beta=b, d=d, n0=yi.n0, s1sse=yi.s1sse, alpha=alpha)
            eps, dg = increment(fmi, sc)
            eps_by_year[yi.year] = eps
            rows.append(PotentialRow(beta=b, year=yi.year, g=indicator(fmi, yi.S, sc),
                                     delta_g=dg, epsilon=eps))
    if not eps_by_year:
        for yi in years:
            sc = ScenarioParams(k=k, beta=0.0, d=d, n0=yi.n0, s1sse=yi.s1sse, alpha=alpha)
            eps_by_year[yi.year] = increment(fmi, sc)[0]

    diagnostics = {
        # zero when the observed SME turnover share and the AAR * n0 product agree
        "share_gap": {str(y.year): abs(d * y.S - y.s1sse * y.n0) for y in years},
        "carried_years": [y.year for y in years if y.carried],
    }
    scenario = {"k": k, "d": d, "alpha": alpha, "betas": betas,
                "b0": fmi.coefficients[0], "b1": fmi.coefficients[1]}
    return PotentialReport(base_year=base_year, epsilon=eps_by_year[base_year],
                           rows=tuple(rows), scenario=scenario, diagnostics=diagnostics)
