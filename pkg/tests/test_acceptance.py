"""Exit criteria. Each test tags itself with the criterion it covers; the
terminal summary prints one PASS/FAIL line per criterion."""

import json
import time

import numpy as np
import pytest

from techpark.cli import main
from techpark.dataio import format_macro_csv, format_sme_csv, parse_macro_series, parse_sme_series
from techpark.deflate import deflate_series
from techpark.localmodels import fit_local_models
from techpark.oracle import SyntheticSpec, brute_force_indicator, generate
from techpark.potential import ScenarioParams, increment, indicator, potential_count
from techpark.regress import PolyModel, fit_poly, predict


@pytest.fixture
def criterion(record_property):
    return lambda name: record_property("criterion", name)


def random_scenario(rng, beta=None):
    """A valid scenario with realistic magnitudes: the SME turnover
    s1sse * n0 is within a factor two of d * S."""
    k = rng.uniform(0.01, 1.0)
    d = rng.uniform(0.05, 0.6)
    S = 10 ** rng.uniform(4, 6)
    n0 = 10 ** rng.uniform(3, 7)
    s1sse = d * S / n0 * rng.uniform(0.5, 2.0)
    if beta is None:
        beta = rng.uniform(0.0, 1.0) * (1.0 - k)
    sc = ScenarioParams(k=k, beta=beta, d=d, n0=n0, s1sse=s1sse, alpha=rng.uniform(1.0, 2.0))
    b0, b1 = rng.uniform(-1e4, 1e4), rng.uniform(0.05, 3.0)
    return sc, S, b0, b1


def line_model(b0, b1):
    return fit_poly([0.0, 1.0, 2.0], [b0, b0 + b1, b0 + 2 * b1], 1)


def exact_line(b0, b1):
    # no fitting round-off: both paths see the same b0, b1
    return PolyModel(degree=1, coefficients=(b0, b1), t_origin=0.0, r_squared=1.0,
                     residuals=(), n_points=0, stderr=(0.0, 0.0))


def test_1_russia_gdp_reproduction(criterion, russia_gdp_path, capsys):
    criterion("1 Russian 2010-2013 deflation reproduced")
    start = time.perf_counter()
    assert main(["deflate", "--macro", str(russia_gdp_path), "--format", "json"]) == 0
    elapsed = time.perf_counter() - start
    rows = {r["year"]: r for r in json.loads(capsys.readouterr().out)["rows"]}
    for year, total, defl, real in [(2010, 1.223, 0.817, 55278), (2011, 1.128, 0.887, 61564),
                                    (2012, 1.064, 0.940, 60403)]:
        assert abs(rows[year]["total_inflation"] - total) <= 0.002
        assert abs(rows[year]["deflator"] - defl) <= 0.001
        assert abs(rows[year]["real_gdp"] - real) <= 30
    assert elapsed < 1.0


def test_2_beta_zero_nullity(criterion):
    criterion("2 beta = 0 nullity")
    rng = np.random.default_rng(2)
    for _ in range(2000):
        sc, S, b0, b1 = random_scenario(rng, beta=0.0)
        assert increment(line_model(b0, b1), sc)[1] == 0.0
        assert potential_count(sc.n0, sc.k, 0.0) == sc.n0


def test_3_linearity(criterion):
    criterion("3 linearity of the increment in beta")
    rng = np.random.default_rng(3)
    for _ in range(2000):
        sc, S, b0, b1 = random_scenario(rng)
        if sc.beta == 0.0:
            continue
        c = rng.uniform(0.0, (1.0 - sc.k) / sc.beta)
        scaled = ScenarioParams(k=sc.k, beta=c * sc.beta, d=sc.d, n0=sc.n0, s1sse=sc.s1sse,
                                alpha=sc.alpha)
        fmi = line_model(b0, b1)
        lhs = increment(fmi, scaled)[1]
        rhs = c * increment(fmi, sc)[1]
        assert abs(lhs - rhs) <= 1e-12 * abs(rhs)


def test_4_indicator_increment_consistency(criterion):
    criterion("4 indicator difference equals increment")
    rng = np.random.default_rng(4)
    for _ in range(2000):
        sc, S, b0, b1 = random_scenario(rng)
        base = ScenarioParams(k=sc.k, beta=0.0, d=sc.d, n0=sc.n0, s1sse=sc.s1sse, alpha=sc.alpha)
        fmi = line_model(b0, b1)
        diff = indicator(fmi, S, sc) - indicator(fmi, S, base)
        dg = increment(fmi, sc)[1]
        assert abs(diff - dg) <= 1e-9 * abs(dg) or dg == diff == 0.0


def test_5_oracle_equivalence(criterion):
    criterion("5 indicator matches brute-force recomposition")
    rng = np.random.default_rng(5)
    for _ in range(10_000):
        sc, S, b0, b1 = random_scenario(rng)
        got = indicator(exact_line(b0, b1), S, sc)
        want = brute_force_indicator(b0, b1, S, sc.d, sc.s1sse, sc.n0, sc.k, sc.beta, sc.alpha)
        assert abs(got - want) <= 1e-12 * abs(want)


def test_6_ols_exactness(criterion):
    criterion("6 OLS exactness, orthogonality, shift invariance")
    rng = np.random.default_rng(6)
    for _ in range(500):
        degree = int(rng.integers(1, 3))
        n = int(rng.integers(degree + 2, 30))
        start = int(rng.integers(1950, 2050))
        years = np.arange(start, start + n, dtype=float)
        t = years - start
        true = rng.uniform(-1e3, 1e3, degree + 1)
        ys = sum(c * t**i for i, c in enumerate(true))
        m = fit_poly(years, ys, degree, t_origin=start)
        scale = max(abs(c) * n**i for i, c in enumerate(true))
        for i, (fit, want) in enumerate(zip(m.coefficients, true)):
            assert abs(fit - want) * n**i <= 1e-9 * scale

        noisy = ys + rng.normal(0, 10.0, n)
        m = fit_poly(years, noisy, degree, t_origin=start)
        X = np.vander(t, degree + 1, increasing=True)
        r = np.array(m.residuals)
        bound = 1e-8 * np.linalg.norm(X, axis=0) * np.linalg.norm(noisy)
        assert np.all(np.abs(X.T @ r) <= bound)

        other = fit_poly(years, noisy, degree, t_origin=start + int(rng.integers(-30, 30)))
        pa, pb = predict(m, years), predict(other, years)
        assert np.all(np.abs(pa - pb) <= 1e-9 * np.max(np.abs(noisy)))


def test_7a_end_to_end_noiseless(criterion, synthetic_files, capsys):
    criterion("7a end-to-end recovery, sigma = 0")
    spec, macro, sme = synthetic_files
    assert main(["potential", "--macro", str(macro), "--sme", str(sme), "--k", str(spec.k),
                 "--beta", str(spec.beta), "--limit"]) == 0
    rows = json.loads(capsys.readouterr().out)["rows"]
    assert len(rows) == 2 * len(spec.years)
    for row in rows:
        want = spec.true_delta_g(row["year"], row["beta"])
        assert abs(row["delta_g"] - want) <= 1e-6 * abs(want)


def _closed_form_se(spec: SyntheticSpec):
    S = np.array([spec.true_turnover(y) for y in spec.years])
    n = S.size
    sxx = ((S - S.mean()) ** 2).sum()
    se_b1 = spec.sigma_g / np.sqrt(sxx)
    se_b0 = spec.sigma_g * np.sqrt(1.0 / n + S.mean() ** 2 / sxx)
    se_d = spec.sigma_sse / np.sqrt((S**2).sum())
    return se_b0, se_b1, se_d


def test_7b_noisy_coverage(criterion):
    criterion("7b fitted (b0, b1, d) within 3 standard errors in >= 99% of 500 trials")
    trials = 500
    hits = np.zeros(3)
    joint = 0
    for seed in range(trials):
        spec = SyntheticSpec(sigma_g=300.0, sigma_n=1000.0, sigma_sse=200.0, seed=seed)
        macro, sme = generate(spec)
        macro = parse_macro_series(format_macro_csv(macro))
        sme = parse_sme_series(format_sme_csv(sme))
        models = fit_local_models(deflate_series(macro, spec.last_year).real_gdp(), sme)
        fitted = (*models.fmi.coefficients, models.smefm.d)
        truth = (*spec.b, spec.d)
        inside = [abs(f - t) <= 3 * se for f, t, se in zip(fitted, truth, _closed_form_se(spec))]
        hits += inside
        joint += all(inside)
    coverage = hits / trials
    print(f"coverage b0={coverage[0]:.3f} b1={coverage[1]:.3f} d={coverage[2]:.3f} "
          f"joint={joint / trials:.3f}")
    assert np.all(coverage >= 0.99)


def test_8_limit_boundary(criterion):
    criterion("8 potential count at beta = 1 - k is n0 / k")
    rng = np.random.default_rng(8)
    for _ in range(5000):
        k = rng.uniform(1e-3, 1.0)
        n0 = rng.uniform(1, 1e7)
        assert potential_count(n0, k, 1.0 - k) == n0 / k
    assert potential_count(800, 0.4, 0.6) == 2000
