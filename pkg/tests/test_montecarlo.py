import math

import numpy as np
import pytest
from scipy import stats

from rggstats import (
    Coherent,
    Custom,
    Fock,
    MCConfig,
    Pmf,
    ZeroMean,
    config_count,
    correlation_report,
    empirical_report,
    fock_scatter_pmf,
    input_pmf,
    run_mc,
    sample_configuration,
    scatter_pmf,
)
from rggstats.montecarlo import _frame_rng


class TestSampleConfiguration:
    def test_conservation(self):
        rng = np.random.default_rng(3)
        for _ in range(200):
            N = int(rng.integers(0, 40))
            M = int(rng.integers(1, 12))
            occ = sample_configuration(N, M, rng)
            assert occ.sum() == N
            assert len(occ) == M
            assert (occ >= 0).all()

    def test_no_photons(self):
        rng = np.random.default_rng(0)
        assert sample_configuration(0, 5, rng).tolist() == [0, 0, 0, 0, 0]

    def test_single_cell(self):
        rng = np.random.default_rng(0)
        assert sample_configuration(7, 1, rng).tolist() == [7]

    def test_uniform_over_configurations(self):
        # N=2, M=2: three patterns, each 1/3
        rng = np.random.default_rng(12)
        draws = 60_000
        counts = {}
        for _ in range(draws):
            key = tuple(sample_configuration(2, 2, rng))
            counts[key] = counts.get(key, 0) + 1
        assert set(counts) == {(0, 2), (1, 1), (2, 0)}
        _, p = stats.chisquare(list(counts.values()))
        assert p > 1e-3

    def test_marginal_matches_exact_row(self):
        rng = np.random.default_rng(99)
        draws = 40_000
        N, M = 3, 3
        hist = np.zeros(N + 1)
        for _ in range(draws):
            hist[sample_configuration(N, M, rng)[0]] += 1
        expected = fock_scatter_pmf(N, M).as_array() * draws
        _, p = stats.chisquare(hist, expected)
        assert p > 1e-3


class TestRunMC:
    def test_deterministic_given_seed(self):
        cfg = MCConfig(Coherent(2.0), 4, 500, seed=123)
        assert run_mc(cfg) == run_mc(cfg)

    def test_different_seeds_differ(self):
        a = run_mc(MCConfig(Coherent(2.0), 4, 500, seed=1))
        b = run_mc(MCConfig(Coherent(2.0), 4, 500, seed=2))
        assert a.histogram != b.histogram

    def test_frames_are_independent_substreams(self):
        # with <= 100 frames each block is a single frame, so a longer run
        # must reproduce a shorter run's frames exactly
        short = run_mc(MCConfig(Coherent(2.0), 4, 20, seed=77))
        long = run_mc(MCConfig(Coherent(2.0), 4, 40, seed=77))
        assert short.block_histograms == long.block_histograms[:20]

    def test_recording_does_not_disturb_the_stream(self):
        plain = run_mc(MCConfig(Fock(3), 3, 300, seed=5))
        recorded = run_mc(MCConfig(Fock(3), 3, 300, seed=5, record_configurations=True))
        assert plain.histogram == recorded.histogram
        assert sum(c for _, c in recorded.configuration_counts) == 300

    def test_every_configuration_reachable(self):
        result = run_mc(MCConfig(Fock(2), 3, 4000, seed=9, record_configurations=True))
        assert len(result.configuration_counts) == config_count(2, 3)

    def test_vacuum_input(self):
        result = run_mc(MCConfig(Fock(0), 6, 50, seed=0))
        assert result.histogram == (50,)

    def test_single_photon_rate(self):
        frames = 40_000
        result = run_mc(MCConfig(Fock(1), 8, frames, seed=21))
        p_hat = result.histogram[1] / frames
        sigma = math.sqrt((1 / 8) * (7 / 8) / frames)
        assert abs(p_hat - 1 / 8) < 5 * sigma

    def test_replayable_frame_streams(self):
        # the result of frame f depends only on (seed, f)
        cfg = MCConfig(Fock(4), 2, 10, seed=31)
        result = run_mc(cfg)
        rng = _frame_rng(31, 3)
        rng.random()  # the frame's photon-number draw comes first
        occ = sample_configuration(4, 2, rng)
        frame3 = result.block_histograms[3]
        assert frame3[int(occ[0])] == 1


class TestEmpiricalReport:
    def test_degenerate_run_has_zero_error_bars(self):
        result = run_mc(MCConfig(Custom(Pmf((0.0, 1.0))), 1, 400, seed=4))
        rep = empirical_report(result, 2)
        assert rep.report.mean == 1.0
        assert rep.report.g2 == 0.0
        assert rep.mean_se == 0.0
        assert rep.g_se == (0.0,)
        assert rep.blocks == 100

    def test_zero_mean_raises(self):
        result = run_mc(MCConfig(Fock(0), 3, 200, seed=0))
        with pytest.raises(ZeroMean):
            empirical_report(result, 2)

    def test_matches_exact_within_errors(self):
        result = run_mc(MCConfig(Coherent(3.0), 4, 40_000, seed=8))
        rep = empirical_report(result, 3)
        exact = correlation_report(scatter_pmf(input_pmf(Coherent(3.0)), 4), 3)
        assert abs(rep.report.mean - exact.mean) < 4 * rep.mean_se
        assert abs(rep.report.g2 - exact.g2) < 4 * rep.g_se[0]
        assert abs(rep.report.g3 - exact.g3) < 4 * rep.g_se[1]
        # error bars should be small in absolute terms at this frame count
        assert rep.mean_se < 0.02
        assert rep.frames == 40_000


class TestMCConfigValidation:
    def test_bad_fields(self):
        with pytest.raises(ValueError):
            MCConfig(Fock(1), 0, 10, 0)
        with pytest.raises(ValueError):
            MCConfig(Fock(1), 2, 0, 0)
        with pytest.raises(ValueError):
            MCConfig(Fock(1), 2, 10, -1)
        with pytest.raises(ValueError):
            MCConfig(Fock(1), 2, 10, 2**64)
        with pytest.raises(TypeError):
            MCConfig(Fock(1), 2.0, 10, 0)
