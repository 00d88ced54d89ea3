"""Photon-number distributions of the standard single-mode input states.

Infinite-support states (coherent, thermal, squeezed coherent) are truncated
at the smallest ``n_max`` whose remaining tail is below ``TAIL_TARGET``,
capped at ``N_CAP`` entries; the cut mass is recorded in ``Pmf.tail_mass``
instead of being renormalized away.

The squeezed-coherent distribution is evaluated two independent ways:

* :func:`squeezed_coherent_pmf` - a three-term recurrence on the Fock
  amplitudes, carried as (log magnitude, unit phase) pairs so that huge
  displacements neither overflow nor underflow mid-recursion.  This is the
  production path.
* :func:`squeezed_oracle_pmf` - brute force: build truncated matrix
  representations of the squeeze and displacement generators, exponentiate
  them (scaling-and-squaring Pade), and read amplitudes off the state
  vector.  Slow and memory-hungry, but it contains no recurrence to get
  wrong, which makes it the cross-check of record for the fast path.
"""

from __future__ import annotations

import cmath
import math

import numpy as np
from scipy import stats
from scipy.linalg import expm

from .core import (
    Coherent,
    Custom,
    DimTooSmall,
    Fock,
    InputStateSpec,
    Pmf,
    SqueezedCoherent,
    Thermal,
    UnstableEvaluation,
)

__all__ = [
    "TAIL_TARGET",
    "N_CAP",
    "SqueezedParams",
    "fock_pmf",
    "poisson_pmf",
    "thermal_pmf",
    "squeezed_coherent_pmf",
    "squeezed_oracle_pmf",
    "recommended_oracle_dim",
    "input_pmf",
]

#: Truncation target: keep entries until the remaining tail drops below this.
TAIL_TARGET = 1e-12

#: Hard cap on stored support, whatever the tail target says.
N_CAP = 4096

#: Parameter bundle for squeezed coherent states; same value object the
#: dispatch layer uses.
SqueezedParams = SqueezedCoherent

_NEG_INF = float("-inf")


def fock_pmf(n: int) -> Pmf:
    """Point mass at photon number ``n``."""
    if n < 0:
        raise ValueError(f"photon number must be >= 0, got {n}")
    return Pmf((0.0,) * int(n) + (1.0,))


def poisson_pmf(mean: float) -> Pmf:
    """Poissonian photon statistics of a coherent state with the given mean."""
    mean = float(mean)
    if not math.isfinite(mean) or mean < 0.0:
        raise ValueError(f"mean must be finite and >= 0, got {mean!r}")
    if mean == 0.0:
        return Pmf((1.0,))
    dist = stats.poisson(mean)
    # Locate the smallest n with P(N > n) < TAIL_TARGET; isf gets us close
    # and the two loops pin down the exact boundary.
    n_max = int(dist.isf(TAIL_TARGET))
    while dist.sf(n_max) >= TAIL_TARGET:
        n_max += 1
    while n_max > 0 and dist.sf(n_max - 1) < TAIL_TARGET:
        n_max -= 1
    n_max = min(n_max, N_CAP)
    probs = np.exp(dist.logpmf(np.arange(n_max + 1)))
    return Pmf(tuple(probs), max(0.0, float(dist.sf(n_max))))


def thermal_pmf(mean: float) -> Pmf:
    """Geometric photon statistics p_n = mean^n / (1 + mean)^(n+1).

    The tail beyond ``n`` is exactly ``q**(n+1)`` with
    ``q = mean / (1 + mean)``, which fixes the truncation point in closed
    form.
    """
    mean = float(mean)
    if not math.isfinite(mean) or mean < 0.0:
        raise ValueError(f"mean must be finite and >= 0, got {mean!r}")
    if mean == 0.0:
        return Pmf((1.0,))
    q = mean / (1.0 + mean)
    # tail(n) = q^(n+1) < TAIL_TARGET  <=>  n + 1 > log(TAIL_TARGET)/log(q)
    n_max = max(0, math.ceil(math.log(TAIL_TARGET) / math.log(q)) - 1)
    while q ** (n_max + 1) >= TAIL_TARGET:
        n_max += 1
    while n_max > 0 and q**n_max < TAIL_TARGET:
        n_max -= 1
    n_max = min(n_max, N_CAP)
    probs = (1.0 / (1.0 + mean)) * q ** np.arange(n_max + 1)
    return Pmf(tuple(probs), q ** (n_max + 1))


def squeezed_coherent_pmf(params: SqueezedCoherent) -> Pmf:
    """Photon statistics of D(alpha) S(xi) |0> via a stable recurrence.

    The state is annihilated by ``mu*a + nu*a^dag - gamma`` with
    ``mu = cosh(r)``, ``nu = exp(i*theta)*sinh(r)`` and
    ``gamma = mu*alpha + nu*conj(alpha)``.  Projecting that identity on
    ``<n|`` gives the three-term recurrence

        c_{n+1} = (gamma*c_n - nu*sqrt(n)*c_{n-1}) / (mu*sqrt(n+1)),

    seeded by ``c_0 = mu**-0.5 * exp(-|alpha|^2/2 - nu*conj(alpha)^2/(2*mu))``.
    Amplitudes are carried as (log magnitude, unit phase) pairs: factorials
    and Hermite-polynomial growth never appear explicitly, and amplitudes
    far below double-precision range (e.g. p_0 for |alpha|^2 ~ 10^3) pass
    through the recursion without flushing to zero.

    Raises
    ------
    UnstableEvaluation
        If an amplitude exceeds unit magnitude or the running probability
        total exceeds 1 beyond roundoff; a physical state admits neither.
    """
    if not isinstance(params, SqueezedCoherent):
        raise TypeError(f"expected SqueezedCoherent parameters, got {type(params).__name__}")
    mu = math.cosh(params.r)
    nu = cmath.exp(1j * params.theta) * math.sinh(params.r)
    alpha = params.alpha_mag * cmath.exp(1j * params.alpha_phase)
    gamma = mu * alpha + nu * alpha.conjugate()

    w = -0.5 * abs(alpha) ** 2 - nu * alpha.conjugate() ** 2 / (2.0 * mu)
    log_mag = w.real - 0.5 * math.log(mu)  # log|c_0|
    phase = cmath.exp(1j * w.imag)
    log_mag_prev, phase_prev = _NEG_INF, 0j

    log_abs_gamma = math.log(abs(gamma)) if gamma != 0 else _NEG_INF
    log_abs_nu = math.log(abs(nu)) if nu != 0 else _NEG_INF

    probs = [math.exp(2.0 * log_mag)]
    cum = probs[0]
    n = 0
    while 1.0 - cum >= TAIL_TARGET and n < N_CAP:
        la = log_mag + log_abs_gamma if log_mag != _NEG_INF else _NEG_INF
        lb = (
            log_mag_prev + log_abs_nu + 0.5 * math.log(n)
            if n > 0 and log_mag_prev != _NEG_INF
            else _NEG_INF
        )
        lmax = max(la, lb)
        if lmax == _NEG_INF:
            log_mag_next, phase_next = _NEG_INF, 0j
        else:
            # Both contributions are scaled by exp(. - lmax) <= 1 before the
            # complex add, so the combination can neither overflow nor lose
            # the smaller term to underflow unless it is truly negligible.
            v = 0j
            if la != _NEG_INF:
                v += gamma * phase * math.exp(log_mag - lmax)
            if lb != _NEG_INF:
                v -= nu * math.sqrt(n) * phase_prev * math.exp(log_mag_prev - lmax)
            m = abs(v)
            if m == 0.0:
                log_mag_next, phase_next = _NEG_INF, 0j
            else:
                log_mag_next = lmax + math.log(m) - math.log(mu * math.sqrt(n + 1))
                phase_next = v / m
        n += 1
        if 2.0 * log_mag_next > math.log1p(1e-6):
            raise UnstableEvaluation(
                f"|c_{n}|^2 exceeds 1 (log magnitude {log_mag_next!r}); "
                "recurrence lost validity"
            )
        p = math.exp(2.0 * log_mag_next) if log_mag_next != _NEG_INF else 0.0
        probs.append(p)
        cum += p
        if cum > 1.0 + 1e-9:
            raise UnstableEvaluation(
                f"cumulative probability {cum!r} exceeds 1 at n={n}"
            )
        log_mag_prev, phase_prev = log_mag, phase
        log_mag, phase = log_mag_next, phase_next

    return Pmf(tuple(probs), max(0.0, 1.0 - cum))


def squeezed_oracle_pmf(params: SqueezedCoherent, dim: int) -> Pmf:
    """Brute-force squeezed-coherent statistics on a ``dim``-level basis.

    Builds ``S = expm((conj(xi) a^2 - xi a^dag^2)/2)`` and
    ``D = expm(alpha a^dag - conj(alpha) a)`` as dense matrix exponentials
    of the truncated generators and applies them to the vacuum.  Both
    generators are anti-Hermitian, so the truncated evolution stays unitary
    and truncation error shows up in the amplitudes near the top of the
    basis rather than as lost norm - hence the guard below.

    Raises
    ------
    DimTooSmall
        If the top basis state carries squared amplitude above 1e-12 at
        either stage, meaning the basis visibly clipped the state.
    """
    if not isinstance(params, SqueezedCoherent):
        raise TypeError(f"expected SqueezedCoherent parameters, got {type(params).__name__}")
    dim = int(dim)
    if dim < 1:
        raise ValueError(f"dim must be >= 1, got {dim}")
    xi = params.r * cmath.exp(1j * params.theta)
    alpha = params.alpha_mag * cmath.exp(1j * params.alpha_phase)

    lower = np.diag(np.sqrt(np.arange(1, dim)), 1).astype(complex)
    raise_ = lower.conj().T

    vac = np.zeros(dim, dtype=complex)
    vac[0] = 1.0
    squeezed = expm(0.5 * (np.conj(xi) * (lower @ lower) - xi * (raise_ @ raise_))) @ vac
    psi = expm(alpha * raise_ - np.conj(alpha) * lower) @ squeezed

    top = max(abs(squeezed[-1]) ** 2, abs(psi[-1]) ** 2) if dim > 1 else abs(psi[-1]) ** 2
    if dim > 1 and top > 1e-12:
        raise DimTooSmall(
            f"top basis state holds squared amplitude {top:.3e} > 1e-12; "
            f"increase dim (got {dim})"
        )
    probs = np.abs(psi) ** 2
    return Pmf(tuple(probs), max(0.0, 1.0 - float(probs.sum())))


def recommended_oracle_dim(params: SqueezedCoherent) -> int:
    """Basis size that comfortably holds the state for moderate squeezing.

    ``mean + 10*sqrt(mean) + 20`` covers displacement-dominated states; the
    extra term grows the basis for squeezing-dominated states, whose
    number tail decays only like ``tanh(r)**(2n)``.
    """
    mean = params.mean_photons
    dim = mean + 10.0 * math.sqrt(mean) + 20.0
    if params.r > 0:
        # squared amplitudes decay like tanh(r)^2 per two quanta, so covering
        # a 1e-12 tail takes ~ 27.7 / |ln tanh r| extra levels
        dim = max(dim, mean + 27.7 / -math.log(math.tanh(params.r)) + 20.0)
    return min(N_CAP, math.ceil(dim))


def input_pmf(spec: InputStateSpec) -> Pmf:
    """Photon-number distribution of any supported input state."""
    match spec:
        case Fock(n=n):
            return fock_pmf(n)
        case Coherent(mean=mean):
            return poisson_pmf(mean)
        case Thermal(mean=mean):
            return thermal_pmf(mean)
        case SqueezedCoherent():
            return squeezed_coherent_pmf(spec)
        case Custom(pmf=pmf):
            return pmf
    raise TypeError(f"unsupported input state {spec!r}")
