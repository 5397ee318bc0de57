"""
What if every start-up survived?
================================

Starting from the fitted models, sweep the technology-park uplift ``beta``
from zero to its limit ``1 - k`` and look at the GDP increment. The increment
is linear in ``beta``, with slope ``epsilon`` that changes from year to year
because the average SME revenue and the number of SMEs do.
"""

import numpy as np

from techpark import beta_sweep, deflate_series, fit_local_models, year_inputs
from techpark.oracle import SyntheticSpec, generate

spec = SyntheticSpec()
macro, sme = generate(spec)
models = fit_local_models(deflate_series(macro, spec.last_year).real_gdp(), sme)

k = 0.4
betas = np.linspace(0.0, 0.5, 6)
years = year_inputs(sme, years=[2005, 2019])
report = beta_sweep(models.fmi, k=k, d=models.smefm.d, years=years, betas=betas, limit=True)

print(f"epsilon in {report.base_year}: {report.epsilon:,.1f} billions per unit of beta")
for row in report.rows:
    print(f"beta={row.beta:.2f} year={row.year} g={row.g:12,.1f} delta_g={row.delta_g:10,.1f}")

###############################################################################
# The last rows are the limit ``beta = 1 - k``: the maximum the parks could
# add under this model. ``share_gap`` checks that the observed SME share of
# turnover agrees with revenue-per-firm times firm count.

print(report.diagnostics["share_gap"])
