"""Exact occupation statistics of photons scattered over speckle cells.

A deep multiply-scattering diffuser erases all which-path information, so
each of the ``binom(N + M - 1, M - 1)`` ways of distributing ``N``
indistinguishable photons over ``M`` cells is equally likely (bosonic
"stars and bars").  The photon count on one cell then follows

    p_n = binom(N - n + M - 2, M - 2) / binom(N + M - 1, M - 1),

which this module evaluates exactly in big-integer rationals.  Doubles only
appear at the very edge, when a result is packed into a :class:`Pmf`; for
supports too large for exact binomials the evaluation switches to
log-gamma with a final renormalization.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

import numpy as np
from scipy.special import gammaln, logsumexp

from .core import OutOfRange, Pmf

__all__ = [
    "EXACT_LIMIT",
    "config_count",
    "fock_scatter_fractions",
    "fock_scatter_pmf",
    "thermal_ratio",
    "approx_scatter_pmf",
]

#: Exact big-integer binomials are used while N + M stays at or below this;
#: above it the pmf is evaluated in log space instead.
EXACT_LIMIT = 20000


def _check_counts(N: int, M: int) -> tuple[int, int]:
    if not isinstance(N, (int, np.integer)) or isinstance(N, bool):
        raise TypeError(f"photon number N must be an integer, got {N!r}")
    if not isinstance(M, (int, np.integer)) or isinstance(M, bool):
        raise TypeError(f"cell count M must be an integer, got {M!r}")
    N, M = int(N), int(M)
    if N < 0:
        raise ValueError(f"photon number N must be >= 0, got {N}")
    if M < 1:
        raise ValueError(f"cell count M must be >= 1, got {M}")
    return N, M


def config_count(N: int, M: int) -> int:
    """Number of ways to place N indistinguishable photons on M cells."""
    N, M = _check_counts(N, M)
    return math.comb(N + M - 1, M - 1)


@lru_cache(maxsize=2048)
def fock_scatter_fractions(N: int, M: int) -> tuple[Fraction, ...]:
    """Single-cell count distribution for an N-photon input, as exact rationals.

    Entry ``n`` is the probability that one chosen cell holds exactly ``n``
    of the ``N`` photons.  With ``M = 1`` the only configuration puts all
    photons on the one cell, so the distribution degenerates to a point
    mass; for ``M >= 2`` the general counting formula applies (at ``M = 2``
    it reduces to the uniform distribution on ``0..N``).
    """
    N, M = _check_counts(N, M)
    if M == 1:
        return (Fraction(0),) * N + (Fraction(1),)
    z = math.comb(N + M - 1, M - 1)
    numerators = [math.comb(N - n + M - 2, M - 2) for n in range(N + 1)]
    if sum(numerators) != z:
        raise AssertionError(f"configuration count mismatch for N={N}, M={M}")
    return tuple(Fraction(c, z) for c in numerators)


@lru_cache(maxsize=4096)
def _fock_scatter_array(N: int, M: int) -> np.ndarray:
    """Cached read-only float row of :func:`fock_scatter_pmf`."""
    if N + M <= EXACT_LIMIT:
        arr = np.array([float(f) for f in fock_scatter_fractions(N, M)])
    elif M == 1:
        arr = np.zeros(N + 1)
        arr[N] = 1.0
    else:
        # log p_n ~ lgamma(N-n+M-1) - lgamma(N-n+1) - lgamma(M-1), normalized
        n = np.arange(N + 1)
        log_num = gammaln(N - n + M - 1) - gammaln(N - n + 1) - gammaln(M - 1)
        arr = np.exp(log_num - logsumexp(log_num))
    arr.setflags(write=False)
    return arr


def fock_scatter_pmf(N: int, M: int) -> Pmf:
    """Single-cell count distribution for an N-photon input, in doubles."""
    N, M = _check_counts(N, M)
    return Pmf(tuple(_fock_scatter_array(N, M)), 0.0)


def thermal_ratio(N: int, M: int, n: int) -> float:
    """Successive-probability ratio p_{n+1} / p_n of the scattered N-photon pmf.

    Equal to ``1 / (1 + (M - 2) / (N - n))``: the scattered distribution is
    geometric-like with an occupation-dependent temperature.  Only defined
    while both entries are nonzero, i.e. for ``0 <= n < N``, and for
    ``M >= 2`` (the single-cell pmf is a point mass with no ratio to take).
    """
    N, M = _check_counts(N, M)
    if M < 2:
        raise ValueError(f"successive ratio needs M >= 2, got M={M}")
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool):
        raise TypeError(f"n must be an integer, got {n!r}")
    n = int(n)
    if not 0 <= n < N:
        raise OutOfRange(f"ratio defined for 0 <= n < N={N}, got n={n}")
    return (N - n) / (N - n + M - 2)


def approx_scatter_pmf(N: int, M: int, n_max: int) -> Pmf:
    """Small-n Gaussian-exponent approximation of the scattered pmf.

    Expands ``log p_n`` of the exact distribution to second order in ``n``:

        p_n ~ exp(-beta0 * n - beta_c * (n^2 - n)),
        beta0   = ln(1 + (M - 2) / N),
        beta_c  = (M - 2) / (2 N (N + M - 2)),

    normalized over ``0..n_max``.  Valid where the occupation stays small
    against N; requires ``M >= 3`` (for ``M = 2`` the exact pmf is flat and
    the expansion is pointless) and ``n_max <= N``.
    """
    N, M = _check_counts(N, M)
    if N < 1:
        raise ValueError(f"approximation needs N >= 1, got N={N}")
    if M < 3:
        raise ValueError(f"approximation needs M >= 3, got M={M}")
    if not isinstance(n_max, (int, np.integer)) or isinstance(n_max, bool):
        raise TypeError(f"n_max must be an integer, got {n_max!r}")
    n_max = int(n_max)
    if not 0 <= n_max <= N:
        raise ValueError(f"n_max must lie in 0..N={N}, got {n_max}")
    beta0 = math.log1p((M - 2) / N)
    beta_c = (M - 2) / (2.0 * N * (N + M - 2))
    n = np.arange(n_max + 1)
    log_w = -beta0 * n - beta_c * (n * (n - 1.0))
    probs = np.exp(log_w - logsumexp(log_w))
    return Pmf(tuple(probs), 0.0)
