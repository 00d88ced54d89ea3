import itertools
import math
from fractions import Fraction

import numpy as np
import pytest

from rggstats import (
    OutOfRange,
    approx_scatter_pmf,
    config_count,
    fock_scatter_fractions,
    fock_scatter_pmf,
    pmf_mean,
    thermal_ratio,
)
from rggstats.combinatorics import EXACT_LIMIT, _fock_scatter_array


def enumerate_marginal(N, M):
    """Brute-force oracle: list every occupation pattern, tally cell 0."""
    counts = [0] * (N + 1)
    total = 0
    for bars in itertools.combinations(range(N + M - 1), M - 1):
        previous = -1
        first_gap = None
        for b in bars:
            if first_gap is None:
                first_gap = b - previous - 1
            previous = b
        if first_gap is None:  # M == 1: no bars, everything in cell 0
            first_gap = N
        counts[first_gap] += 1
        total += 1
    return [Fraction(c, total) for c in counts], total


class TestConfigCount:
    @pytest.mark.parametrize("N,M,expected", [(0, 5, 1), (5, 1, 1), (2, 3, 6), (8, 8, 6435)])
    def test_values(self, N, M, expected):
        assert config_count(N, M) == expected

    @pytest.mark.parametrize("N", range(0, 7))
    @pytest.mark.parametrize("M", range(1, 5))
    def test_against_enumeration(self, N, M):
        _, total = enumerate_marginal(N, M)
        assert config_count(N, M) == total

    def test_validation(self):
        with pytest.raises(ValueError):
            config_count(-1, 3)
        with pytest.raises(ValueError):
            config_count(3, 0)
        with pytest.raises(TypeError):
            config_count(3.0, 3)


class TestFockScatterExact:
    @pytest.mark.parametrize("N", range(0, 7))
    @pytest.mark.parametrize("M", range(1, 5))
    def test_against_enumeration(self, N, M):
        oracle, _ = enumerate_marginal(N, M)
        assert fock_scatter_fractions(N, M) == tuple(oracle)

    @pytest.mark.parametrize("N,M", [(1, 2), (3, 5), (8, 8), (20, 3), (60, 200)])
    def test_normalization_and_mean_exact(self, N, M):
        row = fock_scatter_fractions(N, M)
        assert sum(row) == 1
        assert sum(n * p for n, p in enumerate(row)) == Fraction(N, M)

    @pytest.mark.parametrize("M", [1, 2, 3, 8, 100, 4096])
    def test_single_photon(self, M):
        assert fock_scatter_fractions(1, M) == (
            Fraction(M - 1, M),
            Fraction(1, M),
        )

    def test_two_photons_two_cells_uniform(self):
        assert fock_scatter_fractions(2, 2) == (
            Fraction(1, 3),
            Fraction(1, 3),
            Fraction(1, 3),
        )

    def test_single_cell_keeps_everything(self):
        assert fock_scatter_fractions(4, 1) == (0, 0, 0, 0, 1)

    def test_headline_g2(self):
        row = fock_scatter_fractions(8, 8)
        mean = sum(n * p for n, p in enumerate(row))
        fm2 = sum(n * (n - 1) * p for n, p in enumerate(row))
        assert mean == 1
        assert fm2 / mean**2 == Fraction(14, 9)

    def test_float_row_matches_fractions(self):
        row = fock_scatter_pmf(17, 5)
        exact = fock_scatter_fractions(17, 5)
        assert row.probs == tuple(float(f) for f in exact)
        assert row.tail_mass == 0.0


class TestThermalRatio:
    def test_matches_exact_row_ratios(self):
        for N, M in [(5, 3), (12, 7), (60, 60)]:
            row = fock_scatter_fractions(N, M)
            for n in range(N):
                assert thermal_ratio(N, M, n) == float(row[n + 1] / row[n])

    def test_example_value(self):
        assert thermal_ratio(200, 200, 0) == 200 / 398

    def test_flat_for_two_cells(self):
        assert thermal_ratio(9, 2, 4) == 1.0

    def test_large_n_limit(self):
        N, M = 10**6, 200
        assert abs(thermal_ratio(N, M, 0) - (1.0 - (M - 2) / N)) < 1e-7

    def test_domain(self):
        with pytest.raises(OutOfRange):
            thermal_ratio(5, 3, 5)
        with pytest.raises(OutOfRange):
            thermal_ratio(5, 3, -1)
        with pytest.raises(ValueError):
            thermal_ratio(5, 1, 0)


class TestApproxScatter:
    def test_coefficients(self):
        # beta_0 = ln(1 + (M-2)/N), beta_c = (M-2) / (2 N (N+M-2))
        p = approx_scatter_pmf(200, 200, 2)
        beta0 = math.log1p(198 / 200)
        beta_c = 198 / (2 * 200 * 398)
        ratio_01 = p.probs[1] / p.probs[0]
        ratio_12 = p.probs[2] / p.probs[1]
        assert ratio_01 == pytest.approx(math.exp(-beta0), rel=1e-12)
        assert ratio_12 == pytest.approx(math.exp(-beta0 - 2 * beta_c), rel=1e-12)

    def test_close_to_exact_at_small_n(self):
        exact = fock_scatter_pmf(200, 200).as_array()
        approx = approx_scatter_pmf(200, 200, 200).as_array()
        rel = np.abs(approx[:21] / exact[:21] - 1.0)
        assert rel.max() < 0.05

    def test_normalized(self):
        p = approx_scatter_pmf(50, 10, 30)
        assert abs(sum(p.probs) - 1.0) < 1e-12
        assert len(p) == 31

    def test_domain(self):
        with pytest.raises(ValueError):
            approx_scatter_pmf(10, 2, 5)  # needs M >= 3
        with pytest.raises(ValueError):
            approx_scatter_pmf(10, 5, 11)  # n_max beyond N
        with pytest.raises(ValueError):
            approx_scatter_pmf(0, 5, 0)


class TestLogGammaFallback:
    def test_matches_exact_above_threshold(self):
        N, M = 30, EXACT_LIMIT - 10  # N + M just over the exact-path cutoff
        assert N + M > EXACT_LIMIT
        via_log = _fock_scatter_array(N, M)
        exact = np.array([float(f) for f in fock_scatter_fractions(N, M)])
        assert np.abs(via_log - exact).max() < 1e-13

    def test_big_support_normalizes(self):
        p = fock_scatter_pmf(25000, 4)
        assert abs(sum(p.probs) - 1.0) < 1e-9
        assert pmf_mean(p) == pytest.approx(25000 / 4, rel=1e-9)
