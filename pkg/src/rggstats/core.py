"""Value types shared across the package.

Everything here is an immutable value object: probability mass functions
over photon number, input-state descriptions, and small report containers.
Functions are pure, so all of it is safe to share between threads or
processes without locking.

Conventions
-----------
* A pmf is stored as a dense tuple ``probs`` indexed by photon number
  ``n = 0, 1, ..., n_max`` together with an explicit ``tail_mass`` holding
  whatever probability lies beyond ``n_max``.  Constructors validate and
  *never* silently renormalize; fixing up an unnormalized histogram is the
  caller's job (see :func:`pmf_normalize`).
* Probabilities are doubles.  Exact rational arithmetic lives in the
  modules that need it (``combinatorics``, ``plimit``); by the time numbers
  reach a :class:`Pmf` they are floats.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Union

import numpy as np

__all__ = [
    "PMF_SUM_TOL",
    "TAIL_CEILING",
    "Pmf",
    "Fock",
    "Coherent",
    "Thermal",
    "SqueezedCoherent",
    "Custom",
    "InputStateSpec",
    "ScatterParams",
    "CorrelationReport",
    "MCRunResult",
    "InvalidPmf",
    "TailTooHeavy",
    "ZeroMass",
    "ZeroMean",
    "OutOfRange",
    "DimTooSmall",
    "UnstableEvaluation",
    "NormalizationFailure",
    "pmf_mean",
    "pmf_normalize",
    "total_variation",
]

#: A pmf is accepted when sum(probs) + tail_mass lands inside 1 +/- this.
PMF_SUM_TOL = 1e-9

#: Moment evaluation refuses pmfs whose recorded tail mass is this large,
#: because the dropped tail would then pollute low-order moments.
TAIL_CEILING = 1e-6


class InvalidPmf(ValueError):
    """Raised when numbers claiming to be a pmf fail the invariants."""


class TailTooHeavy(ValueError):
    """Raised when a moment is requested of a pmf with too much unresolved tail."""


class ZeroMass(ValueError):
    """Raised when normalizing a vector with no probability mass at all."""


class ZeroMean(ValueError):
    """Raised when a normalized correlation needs a positive mean and there is none."""


class OutOfRange(ValueError):
    """Raised when an index lies outside the domain where a formula is defined."""


class DimTooSmall(ValueError):
    """Raised when a truncated-basis computation visibly hits its truncation."""


class UnstableEvaluation(ArithmeticError):
    """Raised when a recurrence produces values a physical state cannot have."""


class NormalizationFailure(ArithmeticError):
    """Raised when an exact rational pmf fails to sum to one (an internal bug)."""


@dataclass(frozen=True)
class Pmf:
    """Photon-number distribution on ``0..n_max`` plus recorded tail mass.

    Parameters
    ----------
    probs : sequence of float
        ``probs[n]`` is the probability of counting exactly ``n`` photons.
        Must be non-empty, finite and non-negative.
    tail_mass : float, optional
        Probability mass beyond the last stored entry (default 0).  Kept
        explicit so truncation of infinite-support states loses bookkeeping
        rather than probability.

    Raises
    ------
    InvalidPmf
        If any entry is negative or non-finite, or if
        ``sum(probs) + tail_mass`` is farther than ``PMF_SUM_TOL`` from 1.
    """

    probs: tuple[float, ...]
    tail_mass: float = 0.0

    def __post_init__(self) -> None:
        probs = tuple(float(p) for p in self.probs)
        object.__setattr__(self, "probs", probs)
        object.__setattr__(self, "tail_mass", float(self.tail_mass))
        if len(probs) == 0:
            raise InvalidPmf("pmf needs at least the n=0 entry")
        arr = np.asarray(probs)
        if not np.all(np.isfinite(arr)):
            raise InvalidPmf("pmf entries must be finite")
        if np.any(arr < 0.0):
            n = int(np.argmax(arr < 0.0))
            raise InvalidPmf(f"negative probability {probs[n]!r} at n={n}")
        if not math.isfinite(self.tail_mass) or self.tail_mass < 0.0:
            raise InvalidPmf(f"tail_mass must be finite and >= 0, got {self.tail_mass!r}")
        total = float(arr.sum()) + self.tail_mass
        if abs(total - 1.0) > PMF_SUM_TOL:
            raise InvalidPmf(
                f"probabilities sum to {total!r}, outside 1 +/- {PMF_SUM_TOL:g}; "
                "normalize explicitly if this is a histogram"
            )

    @property
    def n_max(self) -> int:
        """Largest photon number with a stored entry."""
        return len(self.probs) - 1

    def as_array(self) -> np.ndarray:
        """Return the stored entries as a fresh float array."""
        return np.asarray(self.probs, dtype=float)

    def __len__(self) -> int:
        return len(self.probs)


# --- input state descriptions -------------------------------------------------

@dataclass(frozen=True)
class Fock:
    """Photon-number eigenstate with exactly ``n`` photons."""

    n: int

    def __post_init__(self) -> None:
        if not isinstance(self.n, (int, np.integer)) or isinstance(self.n, bool):
            raise TypeError(f"photon number must be an integer, got {self.n!r}")
        object.__setattr__(self, "n", int(self.n))
        if self.n < 0:
            raise ValueError(f"photon number must be >= 0, got {self.n}")


@dataclass(frozen=True)
class Coherent:
    """Coherent state, parametrized by its mean photon number |alpha|^2."""

    mean: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "mean", float(self.mean))
        if not math.isfinite(self.mean) or self.mean < 0.0:
            raise ValueError(f"mean photon number must be finite and >= 0, got {self.mean!r}")


@dataclass(frozen=True)
class Thermal:
    """Single-mode thermal (geometric) state with the given mean photon number."""

    mean: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "mean", float(self.mean))
        if not math.isfinite(self.mean) or self.mean < 0.0:
            raise ValueError(f"mean photon number must be finite and >= 0, got {self.mean!r}")


@dataclass(frozen=True)
class SqueezedCoherent:
    """Displaced squeezed vacuum D(alpha) S(xi) |0>.

    ``alpha = alpha_mag * exp(i * alpha_phase)`` is the displacement and
    ``xi = r * exp(i * theta)`` the squeezing parameter, with the squeeze
    operator ``S(xi) = exp((conj(xi) a^2 - xi a^dag^2) / 2)``.

    The mean photon number is ``alpha_mag**2 + sinh(r)**2``, exposed as
    :attr:`mean_photons`.
    """

    alpha_mag: float
    alpha_phase: float
    r: float
    theta: float

    def __post_init__(self) -> None:
        for name in ("alpha_mag", "alpha_phase", "r", "theta"):
            value = float(getattr(self, name))
            object.__setattr__(self, name, value)
            if not math.isfinite(value):
                raise ValueError(f"{name} must be finite, got {value!r}")
        if self.alpha_mag < 0.0:
            raise ValueError(f"alpha_mag must be >= 0, got {self.alpha_mag}")
        if self.r < 0.0:
            raise ValueError(f"squeezing magnitude r must be >= 0, got {self.r}")

    @property
    def mean_photons(self) -> float:
        return self.alpha_mag**2 + math.sinh(self.r) ** 2


@dataclass(frozen=True)
class Custom:
    """Arbitrary photon-number distribution supplied by the caller."""

    pmf: Pmf

    def __post_init__(self) -> None:
        if not isinstance(self.pmf, Pmf):
            raise TypeError(f"Custom expects a Pmf, got {type(self.pmf).__name__}")


InputStateSpec = Union[Fock, Coherent, Thermal, SqueezedCoherent, Custom]


@dataclass(frozen=True)
class ScatterParams:
    """How to scatter: over how many speckle cells, and how many times in series.

    ``M`` is the number of statistically independent cells the detection
    plane is divided into (one detector pixel collects one cell).  ``stages``
    chains that many diffusers back to back, feeding each stage's per-pixel
    output into the next.
    """

    M: int
    stages: int = 1

    def __post_init__(self) -> None:
        if not isinstance(self.M, (int, np.integer)) or isinstance(self.M, bool):
            raise TypeError(f"M must be an integer, got {self.M!r}")
        object.__setattr__(self, "M", int(self.M))
        if self.M < 1:
            raise ValueError(f"M must be >= 1, got {self.M}")
        if not isinstance(self.stages, (int, np.integer)) or isinstance(self.stages, bool):
            raise TypeError(f"stages must be an integer, got {self.stages!r}")
        object.__setattr__(self, "stages", int(self.stages))
        if self.stages < 1:
            raise ValueError(f"stages must be >= 1, got {self.stages}")


@dataclass(frozen=True)
class CorrelationReport:
    """Mean, factorial moments and normalized correlations of one pmf.

    ``factorial_moments[i]`` holds ``<n(n-1)...(n-i)>`` (order ``i + 1``),
    so ``factorial_moments[0]`` is the mean again.  ``g[i]`` holds the
    zero-delay correlation of order ``i + 2``:
    ``g^(k) = <n(n-1)...(n-k+1)> / <n>^k``.
    """

    mean: float
    factorial_moments: tuple[float, ...]
    g: tuple[float, ...]
    order: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "factorial_moments", tuple(float(x) for x in self.factorial_moments))
        object.__setattr__(self, "g", tuple(float(x) for x in self.g))
        if self.order < 2:
            raise ValueError(f"order must be >= 2, got {self.order}")
        if len(self.factorial_moments) != self.order:
            raise ValueError("need one factorial moment per order 1..order")
        if len(self.g) != self.order - 1:
            raise ValueError("need one correlation per order 2..order")
        if self.factorial_moments[0] != self.mean:
            raise ValueError("first factorial moment must equal the mean")
        if any(x < 0.0 for x in self.factorial_moments) or any(x < 0.0 for x in self.g):
            raise ValueError("moments of a pmf cannot be negative")

    def factorial_moment(self, order: int) -> float:
        """``<n!/(n-order)!>`` for ``1 <= order <= self.order``."""
        if not 1 <= order <= self.order:
            raise OutOfRange(f"order {order} not in 1..{self.order}")
        return self.factorial_moments[order - 1]

    def g_at(self, order: int) -> float:
        """``g^(order)`` for ``2 <= order <= self.order``."""
        if not 2 <= order <= self.order:
            raise OutOfRange(f"order {order} not in 2..{self.order}")
        return self.g[order - 2]

    @property
    def g2(self) -> float:
        return self.g[0]

    @property
    def g3(self) -> float:
        if self.order < 3:
            raise OutOfRange("report was built with order < 3")
        return self.g[1]


@dataclass(frozen=True)
class MCRunResult:
    """Outcome of a Monte Carlo run: single-pixel photon-count histogram.

    ``histogram[n]`` counts frames in which the watched pixel saw exactly
    ``n`` photons; the counts sum to ``frames``.  ``block_histograms``
    partitions the same counts into contiguous blocks of frames for
    jackknife error bars.  ``configuration_counts`` (optional, small runs
    only) tallies complete pixel-occupation patterns for uniformity tests.
    """

    histogram: tuple[int, ...]
    frames: int
    seed: int
    M: int
    block_histograms: tuple[tuple[int, ...], ...] | None = None
    configuration_counts: tuple[tuple[tuple[int, ...], int], ...] | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "histogram", tuple(int(c) for c in self.histogram))
        if any(c < 0 for c in self.histogram):
            raise ValueError("histogram counts must be >= 0")
        if sum(self.histogram) != self.frames:
            raise ValueError(
                f"histogram sums to {sum(self.histogram)}, expected frames={self.frames}"
            )
        if self.frames < 1:
            raise ValueError(f"frames must be >= 1, got {self.frames}")
        if self.M < 1:
            raise ValueError(f"M must be >= 1, got {self.M}")
        if self.block_histograms is not None:
            blocks = tuple(tuple(int(c) for c in b) for b in self.block_histograms)
            object.__setattr__(self, "block_histograms", blocks)
            width = len(self.histogram)
            if any(len(b) != width for b in blocks):
                raise ValueError("every block histogram must have the same width as the total")
            summed = [sum(col) for col in zip(*blocks)] if blocks else []
            if tuple(summed) != self.histogram:
                raise ValueError("block histograms must sum to the total histogram")


# --- pmf operations -----------------------------------------------------------

def pmf_mean(p: Pmf) -> float:
    """Mean photon number ``sum_n n * p[n]`` of the stored entries.

    The recorded tail is excluded from the sum, so it must be negligible:
    a tail at or above ``TAIL_CEILING`` raises :class:`TailTooHeavy` rather
    than returning a silently biased number.
    """
    if p.tail_mass >= TAIL_CEILING:
        raise TailTooHeavy(
            f"tail_mass={p.tail_mass!r} >= {TAIL_CEILING:g}; "
            "extend the support before taking moments"
        )
    arr = p.as_array()
    return float(np.arange(len(arr)) @ arr)


def pmf_normalize(p: "Pmf | Sequence[float] | np.ndarray") -> Pmf:
    """Rescale entries to sum to one; accepts a Pmf or a raw weight vector.

    This is the sanctioned way to turn a histogram or an unnormalized
    weight vector into a :class:`Pmf` (whose constructor deliberately
    rejects such input).  Any recorded tail is dropped.  Raises
    :class:`ZeroMass` when there is nothing to rescale; weights must be
    finite and non-negative.  Idempotent: normalizing an already
    normalized pmf returns it unchanged.
    """
    if isinstance(p, Pmf):
        arr = p.as_array()
        # already normalized to within accumulated roundoff: nothing to do
        if p.tail_mass == 0.0 and abs(float(arr.sum()) - 1.0) <= 1e-12:
            return p
    else:
        arr = np.asarray(p, dtype=float)
        if arr.ndim != 1 or arr.size == 0:
            raise InvalidPmf("expected a non-empty 1-d weight vector")
        if not np.all(np.isfinite(arr)):
            raise InvalidPmf("weights must be finite")
        if np.any(arr < 0.0):
            raise InvalidPmf("weights must be >= 0")
    s = float(arr.sum())
    if s <= 0.0:
        raise ZeroMass("cannot normalize a pmf with zero total mass")
    return Pmf(tuple(arr / s), 0.0)


def total_variation(p: Pmf, q: Pmf) -> float:
    """Total-variation distance: half the L1 distance between two pmfs.

    Supports of different lengths are compared with the shorter one padded
    by zeros; recorded tails contribute like an extra (aggregated) outcome.
    """
    width = max(len(p), len(q))
    a = np.zeros(width)
    b = np.zeros(width)
    a[: len(p)] = p.as_array()
    b[: len(q)] = q.as_array()
    return 0.5 * (float(np.abs(a - b).sum()) + abs(p.tail_mass - q.tail_mass))
