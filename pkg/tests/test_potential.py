import pytest
from hypothesis import given, strategies as st

from techpark.errors import BetaOutOfRange, KOutOfRange, ShareOutOfRange
from techpark.oracle import brute_force_indicator
from techpark.potential import (
    ScenarioParams,
    YearInputs,
    beta_sweep,
    increment,
    indicator,
    other_turnover,
    potential_count,
    sme_turnover_param,
)
from techpark.regress import fit_poly


def linear(b0, b1):
    xs = [0.0, 1.0, 2.0, 3.0]
    return fit_poly(xs, [b0 + b1 * x for x in xs], 1)


FMI = linear(100.0, 0.5)
BASE = dict(k=0.5, d=0.3, n0=500, s1sse=2.0)


def test_potential_count_examples():
    assert potential_count(1000, 0.5, 0.0) == 1000
    assert potential_count(1000, 0.5, 0.25) == pytest.approx(1500)
    assert potential_count(800, 0.4, 0.6) == 800 / 0.4 == 2000


@pytest.mark.parametrize("k,beta,exc", [(0.0, 0.0, KOutOfRange), (1.2, 0.0, KOutOfRange),
                                        (0.5, 0.6, BetaOutOfRange), (0.5, -0.1, BetaOutOfRange)])
def test_potential_count_range(k, beta, exc):
    with pytest.raises(exc):
        potential_count(100, k, beta)


def test_other_turnover():
    assert other_turnover(10000, 0.3) == pytest.approx(7000)
    assert other_turnover(123.0, 0.0) == 123.0
    assert other_turnover(123.0, 1.0) == 0.0
    with pytest.raises(ShareOutOfRange):
        other_turnover(1.0, 1.1)


def test_sme_turnover_param():
    assert sme_turnover_param(2.0, 500, 0.5, 0.2) == pytest.approx(1400)
    assert sme_turnover_param(2.0, 500, 0.5, 0.0) == 1000
    assert sme_turnover_param(2.0, 500, 0.5, 0.0, alpha=2.0) == 2000


def test_indicator_examples():
    assert indicator(FMI, 10000, ScenarioParams(beta=0.2, **BASE)) == pytest.approx(4300)
    assert indicator(FMI, 10000, ScenarioParams(beta=0.0, **BASE)) == pytest.approx(4100)
    flat = linear(100.0, 0.0)
    assert indicator(flat, 10000, ScenarioParams(beta=0.2, **BASE)) == pytest.approx(100)


def test_increment_examples():
    fmi = linear(7.0, 0.9)
    eps, dg = increment(fmi, ScenarioParams(k=0.4, beta=0.1, d=0.2, n0=200, s1sse=3.0))
    assert eps == pytest.approx(1350)
    assert dg == pytest.approx(135)
    assert increment(fmi, ScenarioParams(k=0.4, beta=0.0, d=0.2, n0=200, s1sse=3.0))[1] == 0.0
    # 4300 - 4100 from the indicator examples
    eps, dg = increment(FMI, ScenarioParams(beta=0.2, **BASE))
    assert dg == pytest.approx(200)


def test_scenario_validation():
    with pytest.raises(ShareOutOfRange):
        ScenarioParams(k=0.5, beta=0.1, d=1.5, n0=1, s1sse=1)
    with pytest.raises(ValueError):
        ScenarioParams(k=0.5, beta=0.1, d=0.5, n0=1, s1sse=1, alpha=0.5)
    with pytest.raises(ValueError):
        ScenarioParams(k=0.5, beta=0.1, d=0.5, n0=0, s1sse=1)


YEARS = [YearInputs(2012, 9000.0, 2.0, 450.0), YearInputs(2013, 10000.0, 2.0, 500.0)]


def test_sweep_zero_beta():
    rep = beta_sweep(FMI, k=0.5, d=0.3, years=YEARS, betas=[0.0])
    assert [r.delta_g for r in rep.rows] == [0.0, 0.0]
    assert rep.base_year == 2013
    assert rep.epsilon == pytest.approx(0.5 * 2 * 500 / 0.5)


def test_sweep_linearity_and_order():
    rep = beta_sweep(FMI, k=0.5, d=0.3, years=YEARS, betas=[0.2, 0.1])
    assert [(r.beta, r.year) for r in rep.rows] == [(0.1, 2012), (0.1, 2013), (0.2, 2012),
                                                    (0.2, 2013)]
    assert rep.rows[2].delta_g == 2 * rep.rows[0].delta_g
    assert rep.rows[3].delta_g == 2 * rep.rows[1].delta_g


def test_sweep_limit_row():
    rep = beta_sweep(FMI, k=0.4, d=0.3, years=YEARS, betas=[0.1], limit=True)
    limit_rows = [r for r in rep.rows if r.beta == 0.6]
    assert len(limit_rows) == 2
    for r, y in zip(limit_rows, YEARS):
        assert potential_count(y.n0, 0.4, r.beta) == y.n0 / 0.4


def test_sweep_rejects_bad_beta():
    with pytest.raises(BetaOutOfRange):
        beta_sweep(FMI, k=0.5, d=0.3, years=YEARS, betas=[0.1, 0.7])


def test_sweep_diagnostics():
    rep = beta_sweep(FMI, k=0.5, d=0.1, years=YEARS, betas=[0.1])
    # d * S = 1000 against s1sse * n0 = 1000 in 2013
    assert rep.diagnostics["share_gap"]["2013"] == pytest.approx(0.0)
    assert rep.diagnostics["share_gap"]["2012"] == pytest.approx(0.0)


scenarios = st.builds(
    lambda k, frac, d, n0, s1sse, alpha: ScenarioParams(k=k, beta=frac * (1 - k), d=d, n0=n0,
                                                        s1sse=s1sse, alpha=alpha),
    st.floats(0.01, 1.0), st.floats(0.0, 1.0), st.floats(0.0, 1.0), st.floats(1, 1e7),
    st.floats(1e-4, 10.0), st.floats(1.0, 3.0))


@given(scenarios, st.floats(-1e4, 1e4), st.floats(0.01, 5), st.floats(1e3, 1e6))
def test_monotone_in_beta(sc, b0, b1, S):
    fmi = linear(b0, b1)
    lo = ScenarioParams(k=sc.k, beta=0.0, d=sc.d, n0=sc.n0, s1sse=sc.s1sse, alpha=sc.alpha)
    if sc.beta > 0:
        assert increment(fmi, sc)[1] > increment(fmi, lo)[1]


@given(scenarios, st.floats(0.01, 5), st.floats(1e3, 1e6), st.floats(0.1, 10))
def test_scale_covariance(sc, b1, S, c):
    # scaling every currency input by c scales g by c when b1 is unit-free
    b0 = 50.0
    base = brute_force_indicator(b0, b1, S, sc.d, sc.s1sse, sc.n0, sc.k, sc.beta, sc.alpha)
    scaled = indicator(linear(c * b0, b1), c * S,
                       ScenarioParams(k=sc.k, beta=sc.beta, d=sc.d, n0=sc.n0,
                                      s1sse=c * sc.s1sse, alpha=sc.alpha))
    assert scaled == pytest.approx(c * base, rel=1e-9)
