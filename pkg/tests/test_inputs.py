import math
from fractions import Fraction

import mpmath
import numpy as np
import pytest

from rggstats import (
    Coherent,
    Custom,
    DimTooSmall,
    Fock,
    Pmf,
    SqueezedCoherent,
    SqueezedParams,
    Thermal,
    correlation_report,
    fock_pmf,
    input_pmf,
    pmf_mean,
    poisson_pmf,
    recommended_oracle_dim,
    squeezed_coherent_pmf,
    squeezed_oracle_pmf,
    thermal_pmf,
)
from rggstats.inputs import N_CAP, TAIL_TARGET


class TestFock:
    def test_vacuum(self):
        assert fock_pmf(0).probs == (1.0,)

    def test_point_mass(self):
        p = fock_pmf(5)
        assert p.probs == (0.0,) * 5 + (1.0,)
        assert pmf_mean(p) == 5.0

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            fock_pmf(-1)


class TestPoisson:
    def test_zero_mean_is_vacuum(self):
        assert poisson_pmf(0.0).probs == (1.0,)

    def test_first_entry(self):
        assert poisson_pmf(1.0).probs[0] == pytest.approx(math.exp(-1.0), rel=1e-14)

    def test_entries_against_mpmath(self):
        p = poisson_pmf(8.0)
        with mpmath.workdps(50):
            for n in (0, 1, 8, 20, p.n_max):
                exact = mpmath.exp(-8) * mpmath.mpf(8) ** n / mpmath.factorial(n)
                assert abs(p.probs[n] - float(exact)) < 5e-14 * float(exact) + 1e-300

    def test_truncation_rule_is_minimal(self):
        # n_max is the smallest support end whose tail is below target
        p = poisson_pmf(8.0)
        with mpmath.workdps(60):
            tail = lambda n: float(mpmath.nsum(
                lambda k: mpmath.exp(-8) * mpmath.mpf(8) ** k / mpmath.factorial(k),
                [n + 1, mpmath.inf],
            ))
            assert tail(p.n_max) < TAIL_TARGET
            assert tail(p.n_max - 1) >= TAIL_TARGET
        assert p.tail_mass == pytest.approx(tail(p.n_max), rel=1e-6)

    def test_mean_close_after_truncation(self):
        # truncating at tail < 1e-12 biases the mean by ~ n_max * tail
        assert abs(pmf_mean(poisson_pmf(8.0)) - 8.0) < 1e-9

    @pytest.mark.parametrize("mean", [0.1, 1.0, 8.0, 100.0])
    def test_poissonian_g2_is_one(self, mean):
        # the truncated tail perturbs g2 by ~ tail * n_max^2 / fm2, which is
        # worst for small means where fm2 itself is tiny
        rep = correlation_report(poisson_pmf(mean), 2)
        assert abs(rep.g2 - 1.0) < 1e-8

    def test_support_cap(self):
        p = poisson_pmf(8000.0)
        assert len(p) == N_CAP + 1
        assert p.tail_mass > 0.1  # far too heavy for moments, but bookkept


class TestThermal:
    def test_zero_mean_is_vacuum(self):
        assert thermal_pmf(0.0).probs == (1.0,)

    def test_mean_one_exact_powers(self):
        p = thermal_pmf(1.0)
        for n in range(0, 20):
            assert p.probs[n] == 0.5 ** (n + 1)

    def test_truncation_rule_is_minimal(self):
        p = thermal_pmf(3.0)
        q = 3.0 / 4.0
        assert q ** (p.n_max + 1) < TAIL_TARGET <= q ** p.n_max
        assert p.tail_mass == q ** (p.n_max + 1)

    @pytest.mark.parametrize("mean", [0.5, 1.0, 8.0, 50.0, 100.0])
    def test_thermal_g2_is_two(self, mean):
        # tail < 1e-12 trimming leaves a ~1e-9 dent in the second moment
        rep = correlation_report(thermal_pmf(mean), 2)
        assert abs(rep.g2 - 2.0) < 2e-9

    @pytest.mark.parametrize("mean", [0.5, 1.0, 8.0])
    def test_thermal_g3_is_six(self, mean):
        rep = correlation_report(thermal_pmf(mean), 3)
        assert abs(rep.g3 - 6.0) < 1e-7


class TestSqueezedCoherent:
    def test_no_squeezing_reduces_to_poisson(self):
        state = SqueezedCoherent(2.0, 0.3, 0.0, 0.0)
        fast = squeezed_coherent_pmf(state)
        pois = poisson_pmf(4.0)
        width = min(len(fast), len(pois))
        gap = np.abs(fast.as_array()[:width] - pois.as_array()[:width]).max()
        assert gap < 1e-12

    def test_vacuum(self):
        assert squeezed_coherent_pmf(SqueezedCoherent(0.0, 0.0, 0.0, 0.0)).probs == (1.0,)

    def test_squeezed_vacuum_parity(self):
        p = squeezed_coherent_pmf(SqueezedCoherent(0.0, 0.0, 0.8, 1.1))
        assert all(p.probs[n] == 0.0 for n in range(1, len(p), 2))
        assert all(p.probs[n] > 0.0 for n in range(0, min(len(p), 30), 2))

    def test_squeezed_vacuum_closed_form(self):
        r = 0.8
        p = squeezed_coherent_pmf(SqueezedCoherent(0.0, 0.0, r, 0.4))
        for m in range(0, 8):
            exact = (
                math.comb(2 * m, m)
                * math.tanh(r) ** (2 * m)
                / (4**m * math.cosh(r))
            )
            assert p.probs[2 * m] == pytest.approx(exact, rel=1e-12)

    @pytest.mark.parametrize(
        "state",
        [
            SqueezedCoherent(1.0, 0.0, 0.5, 0.0),
            SqueezedCoherent(2.5, 1.2, 1.0, 2.0),
            SqueezedCoherent(0.5, 0.0, 1.5, 4.5),
            SqueezedCoherent(4.0, 2.0, 0.3, 1.0),
        ],
    )
    def test_mean_matches_parameters(self, state):
        assert abs(pmf_mean(squeezed_coherent_pmf(state)) - state.mean_photons) < 1e-6

    def test_huge_displacement_survives_in_log_space(self):
        # p_0 = exp(-900): far below double range, yet the recurrence
        # must pass through it and recover the bulk near n ~ 900
        state = SqueezedCoherent(30.0, 0.0, 0.0, 0.0)
        p = squeezed_coherent_pmf(state)
        assert p.probs[0] == 0.0  # underflows as a probability, harmlessly
        assert abs(pmf_mean(p) - 900.0) < 1e-6 * 900.0

    def test_squeezed_params_is_the_state_type(self):
        assert SqueezedParams is SqueezedCoherent


class TestSqueezedOracle:
    @pytest.mark.parametrize(
        "state",
        [
            SqueezedCoherent(0.0, 0.0, 0.0, 0.0),
            SqueezedCoherent(1.0, 0.0, 0.0, 0.0),
            SqueezedCoherent(2.0, 0.7, 0.5, 1.3),
            SqueezedCoherent(0.0, 0.0, 1.2, 2.6),
            SqueezedCoherent(3.0, 1.0, 1.0, 5.0),
        ],
    )
    def test_recurrence_matches_matrix_exponentials(self, state):
        fast = squeezed_coherent_pmf(state)
        dim = max(recommended_oracle_dim(state), len(fast) + 48)
        slow = squeezed_oracle_pmf(state, dim)
        width = min(len(fast), len(slow))
        gap = np.abs(fast.as_array()[:width] - slow.as_array()[:width]).max()
        assert gap < 1e-8

    def test_oracle_poisson_cross_check(self):
        slow = squeezed_oracle_pmf(SqueezedCoherent(1.0, 0.0, 0.0, 0.0), 64)
        pois = poisson_pmf(1.0)
        width = min(len(slow), len(pois))
        assert np.abs(slow.as_array()[:width] - pois.as_array()[:width]).max() < 1e-12

    def test_dim_too_small_is_detected(self):
        with pytest.raises(DimTooSmall):
            squeezed_oracle_pmf(SqueezedCoherent(5.0, 0.0, 0.0, 0.0), 12)

    def test_recommended_dim_holds_the_state(self):
        state = SqueezedCoherent(2.0, 0.0, 1.0, 0.7)
        squeezed_oracle_pmf(state, recommended_oracle_dim(state))  # must not raise


class TestInputDispatch:
    def test_fock(self):
        assert input_pmf(Fock(3)) == fock_pmf(3)

    def test_coherent(self):
        assert input_pmf(Coherent(2.5)) == poisson_pmf(2.5)

    def test_thermal(self):
        assert input_pmf(Thermal(1.5)) == thermal_pmf(1.5)

    def test_squeezed(self):
        state = SqueezedCoherent(1.0, 0.0, 0.5, 0.3)
        assert input_pmf(state) == squeezed_coherent_pmf(state)

    def test_custom_passthrough(self):
        p = Pmf((0.4, 0.6))
        assert input_pmf(Custom(p)) is p

    def test_unknown_type_rejected(self):
        with pytest.raises(TypeError):
            input_pmf("thermal")
