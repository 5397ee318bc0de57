"""
Fitting the four local models
=============================

A synthetic economy with known coefficients stands in for national
statistics. We fit

* real GDP against time (line),
* the number of SMEs against time (parabola),
* real GDP against total enterprise turnover (line),
* SME turnover as a share of total turnover (through the origin),

and compare with the truth.
"""

from techpark import deflate_series, fit_local_models
from techpark.oracle import SyntheticSpec, generate

spec = SyntheticSpec(sigma_g=300.0, sigma_n=2000.0, sigma_sse=150.0, seed=7)
macro, sme = generate(spec)
real_gdp = deflate_series(macro, base_year=spec.last_year).real_gdp()

models = fit_local_models(real_gdp, sme)

for name, model, truth in [("GDP trend", models.mid, spec.a),
                           ("SME count trend", models.smegm, spec.c),
                           ("GDP vs turnover", models.fmi, spec.b)]:
    print(f"{name:16s} fitted {[round(c, 3) for c in model.coefficients]}"
          f"  truth {list(truth)}  r2={model.r_squared:.4f}")
print(f"{'SME share':16s} fitted {models.smefm.d:.4f}  truth {spec.d}")

###############################################################################
# Average annual revenue of one SME, medium enterprises left out.

for year in (spec.first_year, spec.last_year):
    print(year, f"{models.aar_series[year] * 1e3:.2f} million per enterprise")
