import json
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy import stats

from pwords import analysis
from pwords.analysis import (
    Histogram, compare, fit, lambda_edge_statistic, parity_imbalance,
    parts_histogram, report_json, zeros_histogram,
)
from pwords.errors import DegenerateSampleError
from pwords.graphs import bipartition, build
from pwords.oracle import naive_edges, naive_partitions
from pwords.words import enumerate_words


def test_ascending_partitions_match_oracle():
    for n in range(1, 16):
        got = sorted(tuple(sorted(a, reverse=True)) for a in analysis.ascending_partitions(n))
        assert got == sorted(naive_partitions(n))


def test_parts_histogram_examples():
    assert parts_histogram(4).bins == {1: 1, 2: 2, 3: 1, 4: 1}
    assert parts_histogram(1).bins == {1: 1}
    assert parts_histogram(37).total == 21637


def test_parts_histogram_against_enumeration():
    for n in range(1, 21):
        direct = Histogram.from_values(len(p) for p in naive_partitions(n))
        assert parts_histogram(n) == direct


def test_zeros_histogram_is_parts_shifted():
    for n in range(1, 26):
        ws = enumerate_words(1, n)
        assert zeros_histogram(ws) == parts_histogram(n).shifted(-1)
        assert zeros_histogram(ws.words) == zeros_histogram(ws)


def test_histogram_csv():
    h = Histogram.from_values([3, 1, 3, 2])
    assert h.to_csv() == "value,count\n1,1\n2,1\n3,2\n"
    assert list(h.samples()) == [1.0, 2.0, 3.0, 3.0]


def test_lambda_statistic_small_cases_by_brute_force():
    assert lambda_edge_statistic(4) == len(naive_edges(1, 4)) == 5
    assert lambda_edge_statistic(5) == len(naive_edges(1, 5)) == 8


def test_lambda_statistic_equals_edge_count():
    for n in range(2, 26):
        assert lambda_edge_statistic(n) == build(1, n).edge_count


def test_lambda_rejects_n1():
    with pytest.raises(ValueError):
        lambda_edge_statistic(1)


def test_parity_imbalance_values():
    assert parity_imbalance(1) == 1
    assert parity_imbalance(2) == 0
    assert [parity_imbalance(n) for n in range(1, 17)] == \
        [1, 0, 1, 1, 1, 1, 1, 2, 2, 2, 2, 3, 3, 3, 4, 5]
    assert all(parity_imbalance(n) > 1 for n in range(8, 17))


def test_parity_imbalance_is_bipartition_difference():
    # a flip changes the number of parts by one, so parts parity is a 2-coloring
    for n in range(2, 26):
        side = bipartition(build(1, n))
        assert side is not None
        assert abs(int(side.sum()) * 2 - len(side)) == parity_imbalance(n)


def test_fit_exact_example():
    f = fit([1, math.e, math.e ** 2])
    assert abs(f.mu - 1.0) <= 1e-12
    assert abs(f.sigma - math.sqrt(2 / 3)) <= 1e-12
    assert f.sample_size == 3


def test_fit_normal_matches_scipy():
    x = np.random.default_rng(1).normal(3.0, 2.0, 500)
    f = fit(x, "normal")
    mu, sigma = stats.norm.fit(x)
    assert f.mu == pytest.approx(mu, abs=1e-12)
    assert f.sigma == pytest.approx(sigma, abs=1e-12)
    assert f.log_likelihood == pytest.approx(stats.norm.logpdf(x, mu, sigma).sum(), rel=1e-12)


def test_fit_lognormal_log_likelihood():
    x = np.random.default_rng(2).lognormal(0.5, 0.3, 400)
    f = fit(x)
    ll = stats.lognorm.logpdf(x, f.sigma, scale=math.exp(f.mu)).sum()
    assert f.log_likelihood == pytest.approx(ll, rel=1e-12)


def test_ks_matches_scipy_for_continuous_samples():
    x = np.random.default_rng(3).lognormal(0.0, 1.0, 300)
    f = fit(x)
    ref = stats.kstest(x, "lognorm", args=(f.sigma, 0, math.exp(f.mu))).statistic
    assert f.ks == pytest.approx(ref, abs=1e-12)


@pytest.mark.parametrize("N", [100, 1000])
def test_ks_small_at_quantiles(N):
    # samples at the exact quantiles of a lognormal give KS about 1/N
    q = (np.arange(N) + 0.5) / N
    x = np.exp(0.7 + 0.4 * stats.norm.ppf(q))
    f = fit(x)
    assert f.ks < 2.0 / N


def test_fit_errors():
    with pytest.raises(DegenerateSampleError):
        fit([3.0])
    with pytest.raises(DegenerateSampleError):
        fit([2.0, 2.0, 2.0])
    with pytest.raises(ValueError):
        fit([0.0, 1.0, 2.0])
    with pytest.raises(ValueError):
        fit([1.0, 2.0], family="gamma")


def test_compare_ranks_and_skips_infeasible_lognormal():
    x = np.random.default_rng(4).lognormal(1.0, 0.8, 500)
    fits = compare(x)
    assert [f.family for f in fits] == ["lognormal", "normal"]
    assert fits[0].log_likelihood >= fits[1].log_likelihood
    fits = compare([0.0, 1.0, 2.0, 5.0])
    assert [f.family for f in fits] == ["normal"]
    with pytest.raises(DegenerateSampleError):
        compare([1.0, 1.0])


def test_report_json_key_order():
    text = report_json(compare([1.0, 2.0, 4.0, 8.0]))
    data = json.loads(text)
    assert list(data[0]) == ["family", "mu", "sigma", "log_likelihood", "ks", "sample_size"]
    assert text.endswith("\n")


def test_degree_samples_drop_zero_word():
    g = build(1, 8)
    full = analysis.degree_samples(g)
    part = analysis.degree_samples(g, include_zero_vertex=False)
    assert len(part) == len(full) - 1
    assert full.min() == 1 and part.min() == 2


@settings(max_examples=60, deadline=None)
@given(
    xs=st.lists(st.floats(0.01, 1e4, allow_nan=False), min_size=2, max_size=40)
    .filter(lambda v: max(v) > min(v) * (1 + 1e-9)),
    c=st.floats(0.001, 1000.0),
)
def test_lognormal_scale_equivariance(xs, c):
    a = fit(xs)
    b = fit([c * x for x in xs])
    assert b.mu == pytest.approx(a.mu + math.log(c), abs=1e-9)
    assert b.sigma == pytest.approx(a.sigma, rel=1e-9, abs=1e-12)
    assert b.ks == pytest.approx(a.ks, abs=1e-9)
