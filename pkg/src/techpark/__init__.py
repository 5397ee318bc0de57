"""Estimate the GDP potential of technology parks through SME survival.

A chain of small regressions fitted to national statistics (real GDP trend,
SME count trend, GDP against enterprise turnover, SME share of turnover) is
composed into a what-if model of GDP under a higher share of surviving
start-ups.
"""

from .dataio import (
    DEFAULT_CATEGORIES,
    MacroRecord,
    SmeCategory,
    SmeRecord,
    emit_report,
    parse_macro_series,
    parse_report,
    parse_sme_series,
)
from .deflate import DeflatedSeries, cumulative_inflation, deflate_series
from .localmodels import (
    LocalModelSet,
    compute_aar,
    fit_fmi,
    fit_local_models,
    fit_mid,
    fit_smefm,
    fit_smegm,
    year_inputs,
)
from .potential import (
    PotentialReport,
    PotentialRow,
    ScenarioParams,
    YearInputs,
    beta_sweep,
    increment,
    indicator,
    other_turnover,
    potential_count,
    sme_turnover_param,
)
from .regress import PolyModel, ProportionalModel, fit_poly, fit_proportional, predict

__version__ = "0.1.0"
