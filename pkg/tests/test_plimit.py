import math
from fractions import Fraction

import numpy as np
import pytest

from rggstats import (
    InvalidPmf,
    coherent_limit_pmf,
    correlation_report,
    fock_pn_limit,
    fock_pn_limit_float64,
    fock_pn_limit_fractions,
    fock_pn_limit_pmf,
    fock_scatter_pmf,
    gn_limit,
    limit_factorial_moment,
    thermal_pmf,
    total_variation,
)


class TestCoherentLimit:
    def test_vacuum(self):
        assert coherent_limit_pmf(0.0, 5).probs == (1.0,)

    def test_equals_thermal_with_reduced_mean(self):
        assert coherent_limit_pmf(50.0, 5) == thermal_pmf(10.0)

    def test_mean_M_gives_unit_thermal(self):
        p = coherent_limit_pmf(8.0, 8)
        for n in range(10):
            assert p.probs[n] == 0.5 ** (n + 1)

    def test_g2_is_thermal(self):
        rep = correlation_report(coherent_limit_pmf(40.0, 10), 2)
        assert abs(rep.g2 - 2.0) < 2e-9


class TestMomentMaps:
    def test_first_order_single_cell_is_identity(self):
        assert limit_factorial_moment(3.7, 1, 1) == 3.7

    def test_second_order_value(self):
        assert limit_factorial_moment(30.0, 2, 10) == pytest.approx(0.6, abs=1e-15)

    def test_gn_limit_values(self):
        assert gn_limit(2.0, 2) == 4.0  # thermal in, one deep stage
        assert gn_limit(1.0, 3) == 6.0
        assert gn_limit(1.0, 2, 3) == 8.0  # three stages: 2^3

    def test_validation(self):
        with pytest.raises(ValueError):
            limit_factorial_moment(1.0, 0, 5)
        with pytest.raises(ValueError):
            gn_limit(1.0, 1)
        with pytest.raises(ValueError):
            gn_limit(1.0, 2, 0)


class TestFockLimitExact:
    @pytest.mark.parametrize("M", [1, 2, 3, 10, 1000])
    def test_single_photon_closed_form(self, M):
        assert fock_pn_limit_fractions(1, M) == (
            Fraction(M - 1, M),
            Fraction(1, M),
        )

    @pytest.mark.parametrize("M", [2, 3, 10, 97])
    def test_two_photon_closed_form(self, M):
        assert fock_pn_limit_fractions(2, M) == (
            1 - Fraction(2, M) + Fraction(2, M**2),
            Fraction(2, M) - Fraction(4, M**2),
            Fraction(2, M**2),
        )

    def test_example_value(self):
        assert fock_pn_limit(2, 10, 2) == 0.02

    def test_zero_beyond_input_photon_number(self):
        assert fock_pn_limit(3, 7, 4) == 0.0
        assert fock_pn_limit(3, 7, 100) == 0.0

    @pytest.mark.parametrize("N,M", [(5, 5), (17, 23), (60, 200), (120, 60)])
    def test_normalization_exact(self, N, M):
        assert sum(fock_pn_limit_fractions(N, M)) == 1

    @pytest.mark.parametrize("N,M", [(6, 3), (10, 7), (60, 60), (50, 13)])
    def test_factorial_moment_law_exact(self, N, M):
        row = fock_pn_limit_fractions(N, M)
        for k in range(1, min(N, 6) + 1):
            fm = sum(
                Fraction(math.factorial(n), math.factorial(n - k)) * p
                for n, p in enumerate(row)
                if n >= k
            )
            assert fm == Fraction(
                math.factorial(N), math.factorial(N - k)
            ) * Fraction(math.factorial(k), M**k)

    def test_negative_outside_validity_domain(self):
        assert fock_pn_limit(2, 1, 1) == -2.0  # reported, not clipped

    def test_pmf_flags_negative_entries(self):
        with pytest.raises(InvalidPmf, match="not a distribution"):
            fock_pn_limit_pmf(2, 1)

    def test_pmf_matches_fractions(self):
        p = fock_pn_limit_pmf(40, 80)
        exact = fock_pn_limit_fractions(40, 80)
        assert p.probs == tuple(float(f) for f in exact)

    def test_g2_of_limit_pmf(self):
        # deep-cascade Fock statistics carry g2 = 2 (1 - 1/N)
        rep = correlation_report(fock_pn_limit_pmf(60, 200), 2)
        assert abs(rep.g2 - 2.0 * (1.0 - 1.0 / 60)) < 1e-12


class TestLimitVsSingleStage:
    def test_tv_decreases_with_more_cells(self):
        tvs = [
            total_variation(fock_scatter_pmf(60, M), fock_pn_limit_pmf(60, M))
            for M in (60, 100, 200, 400)
        ]
        assert all(a > b for a, b in zip(tvs, tvs[1:]))
        assert tvs[0] < 0.01

    def test_single_photon_is_already_converged(self):
        assert total_variation(fock_scatter_pmf(1, 9), fock_pn_limit_pmf(1, 9)) == 0.0


class TestFloat64Transcription:
    def test_faithful_where_doubles_suffice(self):
        for N, M in [(8, 8), (30, 100)]:
            for n in range(N + 1):
                naive = fock_pn_limit_float64(N, M, n)
                exact = fock_pn_limit(N, M, n)
                assert abs(naive - exact) < 1e-12

    def test_breaks_down_at_large_N(self):
        # factorials overflow doubles at 171!; the exact path is unimpressed
        gaps = np.array(
            [
                abs(fock_pn_limit_float64(200, 1000, n) - fock_pn_limit(200, 1000, n))
                for n in range(0, 21)
            ]
        )
        assert not np.all(gaps <= 1e-6)  # nan or huge somewhere
