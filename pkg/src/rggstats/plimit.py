"""Deep-cascade limit: photon statistics after many diffusers in series.

Once enough independent diffusers act in series, the field on one speckle
cell carries a completely randomized phase, and what survives of the input
is summarized by simple closed forms:

* a coherent input of mean ``m`` turns exactly thermal with mean ``m / M``
  per stage (:func:`coherent_limit_pmf`);
* factorial moments map as ``<n^(k)> = <N^(k)> * k! / M^k``
  (:func:`limit_factorial_moment`), so every normalized correlation picks
  up ``k!`` per stage (:func:`gn_limit`);
* an N-photon input lands on the distribution given by an alternating
  finite sum (:func:`fock_pn_limit`), which is *violently* cancellative:
  the terms grow like ``N!`` while the result stays of order one.  All
  evaluation here is exact big-integer / rational arithmetic, converted
  to double only at the end.  :func:`fock_pn_limit_float64` keeps a
  deliberately naive double-precision transcription around to demonstrate
  why that matters.

Outside its validity domain (cells comparable to or fewer than photons)
the limit formula can return negative "probabilities".  Those are reported
as-is by the scalar evaluator and flagged - never clipped - when a full
pmf is requested.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

import numpy as np
from scipy.special import factorial as _float_factorial

from .core import InvalidPmf, NormalizationFailure, Pmf
from .inputs import thermal_pmf

__all__ = [
    "coherent_limit_pmf",
    "limit_factorial_moment",
    "gn_limit",
    "fock_pn_limit",
    "fock_pn_limit_fractions",
    "fock_pn_limit_pmf",
    "fock_pn_limit_float64",
]


def _check_NM(N: int, M: int) -> tuple[int, int]:
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


def coherent_limit_pmf(mean: float, M: int) -> Pmf:
    """Deep-cascade output for a coherent input: thermal with mean ``mean / M``."""
    mean = float(mean)
    if not math.isfinite(mean) or mean < 0.0:
        raise ValueError(f"mean must be finite and >= 0, got {mean!r}")
    _, M = _check_NM(0, M)
    return thermal_pmf(mean / M)


def limit_factorial_moment(input_moment: float, order: int, M: int) -> float:
    """Deep-cascade factorial moment: ``input_moment * order! / M**order``."""
    if not isinstance(order, (int, np.integer)) or isinstance(order, bool):
        raise TypeError(f"order must be an integer, got {order!r}")
    order = int(order)
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    _, M = _check_NM(0, M)
    return input_moment * (math.factorial(order) / M**order)


def gn_limit(g_in: float, order: int, stages: int = 1) -> float:
    """Normalized correlation after ``stages`` deep cascades: ``(order!)**stages * g_in``.

    The ``M`` dependence cancels between numerator and mean, so each stage
    contributes a clean factor ``order!`` - thermal light (g2 = 2) turns
    into 2**stages super-bunched light, independent of intensity.
    """
    if not isinstance(order, (int, np.integer)) or isinstance(order, bool):
        raise TypeError(f"order must be an integer, got {order!r}")
    order = int(order)
    if order < 2:
        raise ValueError(f"order must be >= 2, got {order}")
    if not isinstance(stages, (int, np.integer)) or isinstance(stages, bool):
        raise TypeError(f"stages must be an integer, got {stages!r}")
    stages = int(stages)
    if stages < 1:
        raise ValueError(f"stages must be >= 1, got {stages}")
    return float(math.factorial(order) ** stages) * g_in


@lru_cache(maxsize=1024)
def _limit_numerators(N: int, M: int) -> tuple[tuple[int, ...], int]:
    """Exact integer numerators s_n with p_n = s_n / M**N.

    The alternating sum

        p_n = (N!/n!) * sum_{k=n..N} (-1)^(k-n) k! / ((N-k)! (k-n)! M^k)

    is regrouped over j = k - n into integer coefficients
    ``c_j = (N!/(N-n-j)!) * binom(n+j, j)`` so every intermediate stays an
    exact integer; one rational division per entry happens at the end.
    """
    pow_m = [1] * (N + 1)
    for i in range(1, N + 1):
        pow_m[i] = pow_m[i - 1] * M
    numerators = []
    falling = 1  # N! / (N - n)!
    for n in range(N + 1):
        if n > 0:
            falling *= N - n + 1
        c = falling
        s = c * pow_m[N - n]
        sign = 1
        for j in range(1, N - n + 1):
            c = c * (N - n - j + 1) * (n + j) // j
            sign = -sign
            s += sign * c * pow_m[N - n - j]
        numerators.append(s)
    return tuple(numerators), pow_m[N]


def fock_pn_limit(N: int, M: int, n: int) -> float:
    """Deep-cascade single-cell probability of n photons from an N-photon input.

    Exact rational evaluation, rounded once to double.  Returns 0 for
    ``n > N`` (a passive medium creates no photons).  The value may be
    negative when ``M`` is too small for the limit form to be a valid
    distribution; it is returned unmodified so callers can see the
    breakdown.
    """
    N, M = _check_NM(N, M)
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool):
        raise TypeError(f"n must be an integer, got {n!r}")
    n = int(n)
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n > N:
        return 0.0
    numerators, denominator = _limit_numerators(N, M)
    return float(Fraction(numerators[n], denominator))


def fock_pn_limit_fractions(N: int, M: int) -> tuple[Fraction, ...]:
    """Exact rational deep-cascade pmf entries for an N-photon input."""
    N, M = _check_NM(N, M)
    numerators, denominator = _limit_numerators(N, M)
    return tuple(Fraction(s, denominator) for s in numerators)


def fock_pn_limit_pmf(N: int, M: int) -> Pmf:
    """Deep-cascade pmf for an N-photon input, validated and in doubles.

    Raises
    ------
    NormalizationFailure
        If the exact rational entries do not sum to exactly 1 (would be an
        arithmetic bug, not roundoff - there is no roundoff here).
    InvalidPmf
        If any exact entry is negative, i.e. (N, M) lies outside the
        domain where the limit form is a distribution.  Use
        :func:`fock_pn_limit` to inspect the raw values.
    """
    N, M = _check_NM(N, M)
    numerators, denominator = _limit_numerators(N, M)
    if sum(numerators) != denominator:
        raise NormalizationFailure(
            f"exact deep-cascade pmf for N={N}, M={M} sums to "
            f"{sum(numerators)}/{denominator} != 1"
        )
    worst = min(range(N + 1), key=lambda i: numerators[i])
    if numerators[worst] < 0:
        raise InvalidPmf(
            f"deep-cascade form is not a distribution at N={N}, M={M}: "
            f"p_{worst} = {float(Fraction(numerators[worst], denominator))!r} < 0; "
            "raw values available via fock_pn_limit"
        )
    return Pmf(tuple(float(Fraction(s, denominator)) for s in numerators), 0.0)


def fock_pn_limit_float64(N: int, M: int, n: int) -> float:
    """Naive double-precision transcription of the deep-cascade alternating sum.

    Kept as a measuring stick: factorials overflow the double range at
    171!, the alternating terms cancel catastrophically, and the result
    is garbage (inf/nan or wildly wrong) long before N = 200 at large M.
    Use :func:`fock_pn_limit` for answers.
    """
    N, M = _check_NM(N, M)
    if n > N:
        return 0.0
    k = np.arange(n, N + 1, dtype=float)
    signs = np.where((k - n) % 2 == 0, 1.0, -1.0)
    with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
        terms = signs * _float_factorial(k) / (
            _float_factorial(N - k) * _float_factorial(k - n) * float(M) ** k
        )
        prefactor = _float_factorial(N) / _float_factorial(n)
        return float(prefactor * terms.sum())
