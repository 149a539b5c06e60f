import math

import pytest

import omegabound as ob


def big_omega(k):
    count, d = 0, 2
    while d * d <= k:
        while k % d == 0:
            k //= d
            count += 1
        d += 1
    return count + (1 if k > 1 else 0)


def test_omega_prefix_sum_matches_trial_division():
    expected = 0
    for n in range(1, 400):
        expected += big_omega(n)
        assert ob.omega_prefix_sum(n) == expected


def test_sieve_and_valuations():
    sieve = ob.build_spf(100)
    assert sieve.spf(91) == 7
    assert sieve.is_prime(97)
    assert ob.big_omega(96, sieve) == 6
    assert ob.legendre_valuation(100, 5) == 24
    assert ob.generalized_valuation(6, 10, sieve) == 4
    assert ob.upsilon(10, sieve) == ob.omega_prefix_sum(10)
    assert ob.f_ratio(4, sieve) == 1.25


def test_prime_sums():
    s = ob.prime_sums(10)
    assert s.pi == 4
    assert s.theta == pytest.approx(math.log(210), rel=1e-15)
    assert s.sum_inv_pm1 == pytest.approx(1 + 1 / 2 + 1 / 4 + 1 / 6, rel=1e-15)


def test_errors_map_to_python_exceptions():
    with pytest.raises(ValueError):
        ob.main_theorem_band(2)
    with pytest.raises(KeyError):
        ob.scan("no-such-bound", 3, 10)
    with pytest.raises(ValueError):
        ob.scan("main-theorem", 3, 10, primes_only=True)


def test_scan_report():
    report = ob.scan("main-theorem", 3, 10000)
    assert report["format"] == "omegabound-report"
    assert report["counts"] == {"pass": 9998, "marginal": 0, "fail": 0}
    assert report["extremal"]["class"] == "pass"
    assert set(ob.bound_ids()) >= {"main-theorem", "prop1-band-upper", "omega-gamma-band"}


def test_threshold_check_reports_point_below():
    report = ob.threshold_check("prop2-refined-upper", samples=3)
    assert report["counts"]["fail"] == 0
    assert report["counts"]["pass"] + report["counts"]["marginal"] == 4
    assert report["below_threshold"]["n"] == 568


def test_evaluate_series_and_inverse_gamma():
    rows = ob.evaluate_series("omega-prefix-sum", [10, 100])
    assert [r["value"] for r in rows] == [15.0, 239.0]
    x = ob.inverse_gamma(1e10)
    assert math.lgamma(x) == pytest.approx(math.log(1e10), rel=1e-12)
