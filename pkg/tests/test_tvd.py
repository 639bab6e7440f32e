"""Exact TVD, the argument pair (f, g), and the series approximations."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from covertvd.errors import DomainError
from covertvd.tvd import fg, log_tail_weight, tvd_complement, tvd_exact, tvd_series
from covertvd.types import (
    METHOD_EXACT,
    METHOD_SERIES_HIGH,
    METHOD_SERIES_LOW,
    ChannelPoint,
)


class TestFg:
    def test_zero_snr_limit(self):
        pair = fg(ChannelPoint(n=1000, theta=0.0))
        assert pair.f == pair.g == 500.0

    def test_unit_snr(self):
        pair = fg(ChannelPoint(n=1000, theta=1.0))
        assert pair.f == pytest.approx(693.1471805599452, rel=1e-14)
        assert pair.g == pytest.approx(346.5735902799726, rel=1e-14)

    @given(n=st.integers(2, 10**6), theta=st.floats(1e-6, 10.0))
    @settings(max_examples=200, deadline=None)
    def test_identities(self, n, theta):
        pair = fg(ChannelPoint(n=n, theta=theta))
        assert pair.g < 0.5 * n < pair.f
        assert pair.f / pair.g == pytest.approx(1.0 + theta, rel=1e-12)
        # the differences inherit the rounding of f and g themselves, so
        # the tolerance carries an absolute floor of a few ulps of f
        floor = 8.0 * math.ulp(pair.f)
        assert pair.f - pair.g == pytest.approx(theta * pair.g, rel=1e-12, abs=floor)
        assert pair.f - pair.g == pytest.approx(0.5 * n * math.log1p(theta), rel=1e-12, abs=floor)

    def test_negative_snr_rejected(self):
        with pytest.raises(DomainError):
            ChannelPoint(n=10, theta=-0.1)


class TestTvdExact:
    def test_zero_snr(self):
        assert tvd_exact(ChannelPoint(n=100, theta=0.0)).value == 0.0

    def test_two_sample_closed_form(self):
        # n=2: V = e^(-g) - e^(-f) = 1/2 - 1/4
        ev = tvd_exact(ChannelPoint(n=2, theta=1.0))
        assert abs(ev.value - 0.25) <= 1e-12
        assert ev.method == METHOD_EXACT

    def test_increasing_in_theta(self):
        for n in (10, 100, 1000, 10000):
            vals = [tvd_exact(ChannelPoint(n=n, theta=t)).value
                    for t in (1e-3, 1e-2, 1e-1, 1.0)]
            assert all(b > a for a, b in zip(vals, vals[1:]))

    def test_increasing_in_n(self):
        for theta in (1e-2, 1e-1, 1.0):
            vals = [tvd_exact(ChannelPoint(n=n, theta=theta)).value
                    for n in (10, 100, 1000, 10000)]
            assert all(b > a for a, b in zip(vals, vals[1:]))

    def test_complement_consistency(self):
        point = ChannelPoint(n=500, theta=0.1)
        assert tvd_complement(point) == pytest.approx(
            1.0 - tvd_exact(point).value, abs=1e-12
        )

    def test_complement_survives_saturation(self):
        # distance saturates at 1.0 in doubles; the complement stays resolvable
        point = ChannelPoint.from_tau(100000, 0.2)
        assert tvd_exact(point).value == 1.0
        assert 0.0 < tvd_complement(point) < 1e-20


class TestTvdSeries:
    def test_high_branch_accuracy(self):
        point = ChannelPoint.from_tau(1000, 0.6)
        ev = tvd_series(point, K=20)
        assert ev.method == METHOD_SERIES_HIGH
        assert ev.err_estimate / tvd_exact(point).value <= 1e-2
        assert ev.terms_used == 21

    def test_boundary_exponent_goes_high(self):
        point = ChannelPoint.from_tau(1000, 0.5)
        assert tvd_series(point).method == METHOD_SERIES_HIGH

    def test_low_branch_accuracy_at_large_n(self):
        point = ChannelPoint.from_tau(5000, 0.3)
        ev = tvd_series(point, K=20)
        assert ev.method == METHOD_SERIES_LOW
        assert ev.err_estimate <= 1e-2

    def test_err_estimate_is_deviation_from_exact(self):
        point = ChannelPoint.from_tau(2000, 0.7)
        ev = tvd_series(point)
        assert ev.err_estimate == pytest.approx(
            abs(ev.value - tvd_exact(point).value), abs=1e-15
        )

    def test_vanishes_with_snr(self):
        # tau_eff > 1/2 for tiny theta; both transition sums collapse
        assert tvd_series(ChannelPoint(n=1000, theta=1e-8)).value < 1e-6

    def test_value_in_unit_interval(self):
        for n, tau in ((100, 0.45), (500, 0.3), (1000, 0.49)):
            ev = tvd_series(ChannelPoint.from_tau(n, tau))
            assert 0.0 <= ev.value <= 1.0

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            tvd_series(ChannelPoint(n=50, theta=0.1))
        with pytest.raises(DomainError):
            tvd_series(ChannelPoint(n=1000, theta=0.0))


class TestLogTailWeight:
    @pytest.mark.parametrize("n", (1000, 10000))
    def test_equal_at_f_and_g(self, n):
        # e^(n/2 - z) (2z/n)^(n/2) takes the same value at z = f and z = g
        point = ChannelPoint.from_tau(n, 0.3)
        pair = fg(point)
        diff = log_tail_weight(n, pair.f) - log_tail_weight(n, pair.g)
        assert abs(diff) <= 1e-9

    def test_zero_at_midpoint(self):
        assert log_tail_weight(1000, 500.0) == 0.0
