"""Monte Carlo cross-check: sample scattering configurations frame by frame.

Every frame draws a photon number ``N`` from the input distribution and
then one of the ``binom(N + M - 1, M - 1)`` occupation patterns uniformly
at random, recording the count on pixel 0.  Uniform patterns are produced
by the stars-and-bars bijection: choose ``M - 1`` distinct "bar" positions
among ``N + M - 1`` slots and read off the gaps.

Randomness is counter-based: frame ``f`` uses a Philox stream keyed by
``(seed, f)``, so the result is bit-for-bit reproducible no matter how the
frames are partitioned across workers, and any frame can be replayed in
isolation.

Error bars come from a delete-one-block jackknife over 100 equal blocks of
frames: correlations are ratios of moments, so naive per-frame variance
propagation would be both messy and wrong.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from .core import CorrelationReport, InputStateSpec, MCRunResult, Pmf
from .inputs import input_pmf
from .transform import correlation_report

__all__ = [
    "JACKKNIFE_BLOCKS",
    "MCConfig",
    "EmpiricalReport",
    "sample_configuration",
    "run_mc",
    "empirical_report",
]

#: Number of equal frame blocks the jackknife deletes one at a time.
JACKKNIFE_BLOCKS = 100


@dataclass(frozen=True)
class MCConfig:
    """Parameters of one Monte Carlo run.

    ``record_configurations`` additionally tallies the complete occupation
    pattern of every frame; useful for uniformity tests, ruinous for memory
    at large ``(N, M)``, hence off by default.
    """

    input: InputStateSpec
    M: int
    frames: int
    seed: int
    record_configurations: bool = False

    def __post_init__(self) -> None:
        if not isinstance(self.M, (int, np.integer)) or isinstance(self.M, bool):
            raise TypeError(f"M must be an integer, got {self.M!r}")
        object.__setattr__(self, "M", int(self.M))
        if self.M < 1:
            raise ValueError(f"M must be >= 1, got {self.M}")
        if not isinstance(self.frames, (int, np.integer)) or isinstance(self.frames, bool):
            raise TypeError(f"frames must be an integer, got {self.frames!r}")
        object.__setattr__(self, "frames", int(self.frames))
        if self.frames < 1:
            raise ValueError(f"frames must be >= 1, got {self.frames}")
        if not isinstance(self.seed, (int, np.integer)) or isinstance(self.seed, bool):
            raise TypeError(f"seed must be an integer, got {self.seed!r}")
        object.__setattr__(self, "seed", int(self.seed))
        if not 0 <= self.seed < 2**64:
            raise ValueError(f"seed must fit in 64 bits, got {self.seed}")


def sample_configuration(N: int, M: int, rng: np.random.Generator) -> np.ndarray:
    """Draw one occupation pattern of N photons on M cells, uniformly.

    Places ``M - 1`` bars on ``N + M - 1`` slots (distinct positions chosen
    uniformly via a partial shuffle) and returns the gap sizes, which is a
    bijection onto occupation patterns, so uniformity is inherited rather
    than approximated.
    """
    if N < 0:
        raise ValueError(f"photon number must be >= 0, got {N}")
    if M < 1:
        raise ValueError(f"cell count must be >= 1, got {M}")
    if M == 1:
        return np.array([N], dtype=np.int64)
    bars = np.sort(rng.permutation(N + M - 1)[: M - 1])
    edges = np.empty(M + 1, dtype=np.int64)
    edges[0] = -1
    edges[1:M] = bars
    edges[M] = N + M - 1
    return np.diff(edges) - 1


def _frame_rng(seed: int, frame: int) -> np.random.Generator:
    # counter-keyed: independent of how many draws other frames consumed
    return np.random.Generator(np.random.Philox(key=seed, counter=frame << 64))


def run_mc(cfg: MCConfig) -> MCRunResult:
    """Run the sampler and histogram the photon count on pixel 0."""
    pmf = input_pmf(cfg.input)
    cdf = np.cumsum(pmf.as_array())
    top = len(cdf) - 1

    width = len(cdf)
    n_blocks = min(JACKKNIFE_BLOCKS, cfg.frames)
    hist = np.zeros(width, dtype=np.int64)
    blocks = np.zeros((n_blocks, width), dtype=np.int64)
    patterns: Counter | None = Counter() if cfg.record_configurations else None

    for frame in range(cfg.frames):
        rng = _frame_rng(cfg.seed, frame)
        # tail draws (probability <= recorded tail_mass) clamp to the last entry
        n_in = min(int(np.searchsorted(cdf, rng.random(), side="right")), top)
        occupation = sample_configuration(n_in, cfg.M, rng)
        n_pixel = int(occupation[0])
        hist[n_pixel] += 1
        blocks[frame * n_blocks // cfg.frames, n_pixel] += 1
        if patterns is not None:
            patterns[tuple(int(x) for x in occupation)] += 1

    return MCRunResult(
        histogram=tuple(int(c) for c in hist),
        frames=cfg.frames,
        seed=cfg.seed,
        M=cfg.M,
        block_histograms=tuple(tuple(int(c) for c in row) for row in blocks),
        configuration_counts=tuple(sorted(patterns.items())) if patterns is not None else None,
    )


@dataclass(frozen=True)
class EmpiricalReport:
    """Correlations estimated from a histogram, with jackknife error bars.

    ``g_se[i]`` is the standard error of ``report.g[i]``; ``mean_se`` the
    standard error of the mean.  Errors are delete-one-block jackknife
    estimates over ``blocks`` blocks.
    """

    report: CorrelationReport
    mean_se: float
    g_se: tuple[float, ...]
    frames: int
    blocks: int


def empirical_report(result: MCRunResult, order: int = 2) -> EmpiricalReport:
    """Estimate mean and g^(2)..g^(order) from a run, with jackknife errors."""
    total = np.asarray(result.histogram, dtype=float)
    full = correlation_report(Pmf(tuple(total / result.frames), 0.0), order)

    if result.block_histograms is None or len(result.block_histograms) < 2:
        nan = float("nan")
        n_blocks = 0 if result.block_histograms is None else len(result.block_histograms)
        return EmpiricalReport(full, nan, (nan,) * (order - 1), result.frames, n_blocks)

    block_rows = np.asarray(result.block_histograms, dtype=float)
    n_blocks = block_rows.shape[0]
    estimates = np.empty((n_blocks, order))  # column 0: mean, then g2, g3, ...
    for i in range(n_blocks):
        kept = total - block_rows[i]
        frames_kept = kept.sum()
        rep = correlation_report(Pmf(tuple(kept / frames_kept), 0.0), order)
        estimates[i, 0] = rep.mean
        estimates[i, 1:] = rep.g
    deviations = estimates - estimates.mean(axis=0)
    se = np.sqrt((n_blocks - 1) / n_blocks * (deviations**2).sum(axis=0))
    return EmpiricalReport(
        report=full,
        mean_se=float(se[0]),
        g_se=tuple(float(x) for x in se[1:]),
        frames=result.frames,
        blocks=n_blocks,
    )
