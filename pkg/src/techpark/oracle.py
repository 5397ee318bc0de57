"""Synthetic economies with known truth, and a literal re-derivation of the indicator.

Random numbers: uniforms come from numpy's ``PCG64`` bit generator seeded
with ``SyntheticSpec.seed`` (``Generator.random``, one draw per call, in the
order documented in ``generate``). Normal deviates use the basic Box-Muller
transform, ``sqrt(-2 ln(1 - u1)) * cos(2 pi u2)``, one pair of uniforms per
deviate, so any PCG64 implementation can rebuild the fixtures from the seed.

Construction for year ``y`` with ``t = y - first_year``::

    g(t)    = a0 + a1*t                       true real GDP trend
    S(t)    = (g(t) - b0) / b1                total turnover, exactly on the FMI line
    gdp     = b0 + b1*S(t) + N(0, sigma_g)    observed real GDP
    n(t)    = round(c0 + c1*t + c2*t^2 + N(0, sigma_n))   included SME count
    S_sse   = d*S(t) + N(0, sigma_sse)        included SME turnover
    nominal = gdp / T(y),   T built backward from ``inflation`` to the last year

Medium enterprises get ``medium_count_share * n`` firms and
``medium_turnover_share * S`` turnover; they sit outside ``d``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .dataio import MacroRecord, SmeRecord
from .potential import ScenarioParams


@dataclass(frozen=True)
class SyntheticSpec:
    a: tuple[float, float] = (60000.0, 1800.0)
    b: tuple[float, float] = (4000.0, 0.45)
    c: tuple[float, float, float] = (1_500_000.0, 40_000.0, -900.0)
    d: float = 0.2
    k: float = 0.4
    beta: float = 0.3
    alpha: float = 1.0
    sigma_g: float = 0.0
    sigma_n: float = 0.0
    sigma_sse: float = 0.0
    inflation: float = 1.06
    first_year: int = 2000
    last_year: int = 2019
    seed: int = 0
    # split of the included count and turnover across individual/micro/small
    count_shares: tuple[float, float, float] = (0.5, 0.35, 0.15)
    turnover_shares: tuple[float, float, float] = (0.2, 0.3, 0.5)
    medium_count_share: float = 0.01
    medium_turnover_share: float = 0.1

    def __post_init__(self):
        ScenarioParams(k=self.k, beta=self.beta, d=self.d, n0=1.0, s1sse=1.0, alpha=self.alpha)
        if min(self.sigma_g, self.sigma_n, self.sigma_sse) < 0:
            raise ValueError("noise standard deviations must be >= 0")
        if self.last_year - self.first_year < 3:
            raise ValueError("need at least four years")
        if self.b[1] == 0:
            raise ValueError("b1 must be nonzero")
        if self.d + self.medium_turnover_share > 1:
            raise ValueError("SME turnover shares exceed the total")

    @property
    def years(self) -> list[int]:
        return list(range(self.first_year, self.last_year + 1))

    def true_turnover(self, year: int) -> float:
        t = year - self.first_year
        a0, a1 = self.a
        b0, b1 = self.b
        return (a0 + a1 * t - b0) / b1

    def true_count(self, year: int) -> float:
        t = year - self.first_year
        c0, c1, c2 = self.c
        return c0 + c1 * t + c2 * t * t

    def true_epsilon(self, year: int) -> float:
        # s1sse * n0 equals the included SME turnover d * S on noiseless data
        return self.b[1] * self.alpha * self.d * self.true_turnover(year) / self.k

    def true_delta_g(self, year: int, beta: float | None = None) -> float:
        return self.true_epsilon(year) * (self.beta if beta is None else beta)


class _Normal:
    def __init__(self, seed: int):
        self._rng = np.random.Generator(np.random.PCG64(seed))

    def __call__(self, sigma: float) -> float:
        u1 = self._rng.random()
        u2 = self._rng.random()
        if sigma == 0.0:
            return 0.0
        return sigma * math.sqrt(-2.0 * math.log1p(-u1)) * math.cos(2.0 * math.pi * u2)


def generate(spec: SyntheticSpec) -> tuple[list[MacroRecord], list[SmeRecord]]:
    """Draw one synthetic economy.

    Per year the draws are taken in the order GDP, count, SME turnover, so
    the stream is the same whatever the sigmas are.
    """
    normal = _Normal(spec.seed)
    years = spec.years
    b0, b1 = spec.b
    gdp, sme = {}, []
    for y in years:
        S = spec.true_turnover(y)
        if not S > 0:
            raise ValueError(f"true turnover for {y} is not positive")
        gdp[y] = b0 + b1 * S + normal(spec.sigma_g)
        n = int(round(spec.true_count(y) + normal(spec.sigma_n)))
        s_sse = spec.d * S + normal(spec.sigma_sse)
        if n <= 0 or s_sse <= 0:
            raise ValueError(f"synthetic SME data for {y} is not positive")

        micro = int(round(spec.count_shares[1] * n))
        small = int(round(spec.count_shares[2] * n))
        counts = {"individual": n - micro - small, "micro": micro, "small": small,
                  "medium": int(round(spec.medium_count_share * n))}
        t_micro = spec.turnover_shares[1] * s_sse
        t_small = spec.turnover_shares[2] * s_sse
        turnover = {"individual": s_sse - t_micro - t_small, "micro": t_micro,
                    "small": t_small, "medium": spec.medium_turnover_share * S}
        sme.append(SmeRecord(y, counts, turnover, S))

    total = {years[-1]: 1.0}
    for y in reversed(years[:-1]):
        total[y] = spec.inflation * total[y + 1]
    macro = [MacroRecord(y, gdp[y] / total[y], spec.inflation) for y in years]
    return macro, sme


def brute_force_indicator(b0: float, b1: float, S: float, d: float, s1sse: float,
                          n0: float, k: float, beta: float, alpha: float = 1.0) -> float:
    """Indicator computed by direct substitution, independent of ``potential``."""
    s_prime = (1 - d) * S + alpha * s1sse * n0 * (k + beta) / k
    return b0 + b1 * s_prime

