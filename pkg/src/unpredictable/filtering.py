"""Exponential filtering of piecewise-constant signals.

A symbol window drives a step signal pi(t) that holds the symbol value at
index k on the interval [origin + k*mu, origin + (k+1)*mu).  Convolving it
with a decaying exponential kernel gives

    chi(t) = integral from -infinity to t of exp(-lambda*(t - s)) * pi(s) ds,

which is also the solution of x' = -lambda*x + pi(t) once transients die out.
Because pi is constant on each piece, chi obeys an exact recurrence: from a
known value at time a, for t in the same piece with symbol value v,

    chi(t) = chi(a) * exp(-lambda*(t - a)) + (v/lambda) * (1 - exp(-lambda*(t - a))).

The integrators below walk the pieces with this recurrence and never
discretize, so the only error is floating-point rounding, roughly one unit
in the last place per piece crossed.  Two trajectories of the same signal
started from different values therefore contract toward each other exactly
like exp(-lambda*t), and the output is trapped in the band
[min(pi)/lambda, max(pi)/lambda] once started inside it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import CoverageError, DomainError
from .symbolspace import SequenceWindow

#: Relative slack used when classifying times against piece breakpoints.
_EDGE_TOL = 1e-9

#: Allowed relative jitter in trajectory sample spacing.
_UNIFORM_TOL = 1e-12


@dataclass(frozen=True)
class StepSignal:
    """Piecewise-constant signal generated by a symbol window.

    The symbol at sequence index k is held on
    [origin + k*step, origin + (k+1)*step).
    """

    sequence: SequenceWindow
    step: float
    origin: float = 0.0

    def __post_init__(self) -> None:
        if not (math.isfinite(self.step) and self.step > 0):
            raise DomainError("step must be a positive real")
        if not math.isfinite(self.origin):
            raise DomainError("origin must be finite")

    @property
    def t_min(self) -> float:
        return self.origin + self.sequence.first_index * self.step

    @property
    def t_max(self) -> float:
        return self.origin + (self.sequence.last_index + 1) * self.step

    @property
    def sup_abs(self) -> float:
        """Largest |pi(t)| attained on the covered range."""
        return float(np.max(np.abs(self.sequence.symbols)))

    def piece_value(self, k: int) -> float:
        return self.sequence.value_at(k)

    def value_at(self, t: float) -> float:
        """pi(t) for a time inside the covered range."""
        k = _piece_index(self.origin, self.step, t)
        return self.piece_value(k)


@dataclass(frozen=True)
class FilterConfig:
    """Kernel and sampling parameters for the filter.

    Attributes:
        decay: kernel rate lambda, per unit time.
        step: piece length mu of the driving signal.
        sample_dt: spacing of trajectory samples, at most ``step``.
        tolerance: numeric slack callers use when cross-checking results.
    """

    decay: float = 1.0
    step: float = 0.1
    sample_dt: float = 0.01
    tolerance: float = 1e-10

    def __post_init__(self) -> None:
        for name in ("decay", "step", "sample_dt", "tolerance"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v > 0):
                raise DomainError(f"{name} must be a positive real")
        if self.sample_dt > self.step:
            raise DomainError("sample_dt must not exceed step")


@dataclass(frozen=True, eq=False)
class Trajectory:
    """Uniformly sampled scalar function of time."""

    times: np.ndarray
    values: np.ndarray

    def __post_init__(self) -> None:
        t = np.asarray(self.times, dtype=np.float64)
        v = np.asarray(self.values, dtype=np.float64)
        if t.ndim != 1 or t.size < 1 or t.shape != v.shape:
            raise DomainError("times and values must be 1-d arrays "
                              "of equal, nonzero length")
        if t.size > 1:
            gaps = np.diff(t)
            if np.any(gaps <= 0):
                raise DomainError("times must be strictly increasing")
            scale = max(1.0, float(np.max(np.abs(t))))
            if float(np.max(gaps) - np.min(gaps)) > _UNIFORM_TOL * scale:
                raise DomainError("sample spacing must be uniform")
        for arr, name in ((t, "times"), (v, "values")):
            arr = arr.copy()
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)

    def __len__(self) -> int:
        return int(self.times.size)

    @property
    def t_start(self) -> float:
        return float(self.times[0])

    @property
    def t_end(self) -> float:
        return float(self.times[-1])

    @property
    def sample_dt(self) -> float:
        if len(self) < 2:
            raise DomainError("spacing is undefined for a single sample")
        return float(self.times[1] - self.times[0])

    def at(self, t) -> np.ndarray:
        """Values at the requested times, linearly interpolated.

        Raises:
            CoverageError: a requested time lies outside the sampled span.
        """
        q = np.asarray(t, dtype=np.float64)
        slack = _EDGE_TOL * (self.sample_dt if len(self) > 1 else 1.0)
        if np.any(q < self.t_start - slack) or np.any(q > self.t_end + slack):
            raise CoverageError("requested time outside the sampled span")
        return np.interp(np.clip(q, self.t_start, self.t_end),
                         self.times, self.values)


class QuadratureResult(NamedTuple):
    value: float
    truncation_bound: float


class SeparationConstants(NamedTuple):
    kappa_i: float
    kappa_ii: float
    lower_bound: float


def _piece_index(origin: float, mu: float, t: float) -> int:
    """Index k with breakpoint(k) <= t < breakpoint(k+1), using the same
    breakpoint arithmetic everywhere so classification is reproducible."""
    k = int(math.floor((t - origin) / mu))
    while origin + (k + 1) * mu <= t:
        k += 1
    while origin + k * mu > t:
        k -= 1
    return k


def _check_pair(signal: StepSignal, config: FilterConfig) -> None:
    if config.step != signal.step:
        raise DomainError("config.step must equal the signal step")


def chi_exact(signal: StepSignal, config: FilterConfig, t_start: float,
              t_end: float, chi_start: float) -> Trajectory:
    """Integrate the filter over [t_start, t_end] from a known start value.

    Samples are taken every ``config.sample_dt`` starting at ``t_start``; the
    last sample is the largest grid point not beyond ``t_end``.  The value at
    each sample comes from the per-piece recurrence, so no discretization
    error is introduced at any spacing.

    Raises:
        DomainError: t_end <= t_start, or config and signal disagree on step.
        CoverageError: some sampled time needs a piece outside the window.
    """
    _check_pair(signal, config)
    if not (math.isfinite(t_start) and math.isfinite(t_end)):
        raise DomainError("time bounds must be finite")
    if t_end <= t_start:
        raise DomainError("t_end must exceed t_start")
    lam = config.decay
    mu = signal.step
    dt = config.sample_dt
    n = int(math.floor((t_end - t_start) / dt + _EDGE_TOL))
    times = t_start + dt * np.arange(n + 1)
    values = np.empty(n + 1)
    tol = _EDGE_TOL * mu
    first_p = signal.sequence.first_index
    last_p = signal.sequence.last_index

    k = _piece_index(signal.origin, mu, t_start)
    t_ref = t_start
    chi = float(chi_start)
    i = 0
    total = n + 1
    while i < total:
        if not first_p <= k <= last_p:
            # a sample exactly at the reference time needs no piece value
            if np.any(times[i:] > t_ref + tol):
                raise CoverageError(
                    f"signal does not cover piece {k} needed near t={t_ref!r}")
            values[i:] = chi
            break
        v = signal.piece_value(k)
        b_next = signal.origin + (k + 1) * mu
        j = int(np.searchsorted(times, b_next, side="left"))
        if j > i:
            decay = np.exp(-lam * (times[i:j] - t_ref))
            values[i:j] = chi * decay + (v / lam) * (1.0 - decay)
            i = j
        if i < total:
            e = math.exp(-lam * (b_next - t_ref))
            chi = chi * e + (v / lam) * (1.0 - e)
            t_ref = b_next
            k += 1
    return Trajectory(times, values)


def solve_ode(signal: StepSignal, config: FilterConfig, phi0: float,
              t_end: float) -> Trajectory:
    """Solve x' = -lambda*x + pi(t) on [0, t_end] with x(0) = phi0.

    This is the same integral as :func:`chi_exact` anchored at time zero,
    and it uses the same exact recurrence.
    """
    return chi_exact(signal, config, 0.0, t_end, phi0)


def chi_quadrature(signal: StepSignal, config: FilterConfig, t: float,
                   tail_T: float) -> QuadratureResult:
    """Evaluate chi(t) by integrating over the finite tail [t - tail_T, t].

    Each piece contributes its closed-form integral, accumulated
    independently of the recurrence so the two paths cross-check each other.
    The discarded history before t - tail_T is bounded by
    sup|pi| * exp(-lambda*tail_T) / lambda, reported alongside the value.

    Raises:
        DomainError: tail_T <= 0 or config and signal disagree on step.
        CoverageError: [t - tail_T, t] is not covered by the signal.
    """
    _check_pair(signal, config)
    if not (math.isfinite(tail_T) and tail_T > 0):
        raise DomainError("tail_T must be a positive real")
    if not math.isfinite(t):
        raise DomainError("t must be finite")
    lam = config.decay
    mu = signal.step
    lo = t - tail_T
    tol = _EDGE_TOL * mu
    first_p = signal.sequence.first_index
    last_p = signal.sequence.last_index

    k_lo = _piece_index(signal.origin, mu, lo)
    k_hi = _piece_index(signal.origin, mu, t)
    # zero-length end pieces caused by breakpoint rounding are dropped
    if k_lo == first_p - 1 and lo >= signal.origin + first_p * mu - tol:
        k_lo = first_p
    if k_hi == last_p + 1 and t <= signal.origin + (last_p + 1) * mu + tol:
        k_hi = last_p
    if k_lo < first_p or k_hi > last_p:
        raise CoverageError(
            f"signal covers pieces [{first_p}, {last_p}], "
            f"quadrature needs [{k_lo}, {k_hi}]")

    ks = np.arange(k_lo, k_hi + 1, dtype=np.int64)
    lows = np.maximum(signal.origin + ks * mu, lo)
    highs = np.minimum(signal.origin + (ks + 1) * mu, t)
    highs = np.maximum(highs, lows)
    v = signal.sequence.segment(k_lo, k_hi)
    value = float(np.sum(
        v * (np.exp(-lam * (t - highs)) - np.exp(-lam * (t - lows)))) / lam)
    bound = signal.sup_abs * math.exp(-lam * tail_T) / lam
    return QuadratureResult(value, bound)


def separation_constants(epsilon0: float) -> SeparationConstants:
    """Constants controlling how symbol separation survives the filter.

    For a driving signal whose symbols differ by at least ``epsilon0`` at
    some index, the filtered outputs stay at least ``epsilon0 / 24`` apart
    somewhere on an interval of half-width ``kappa_ii / 2`` around a point
    of that piece, where

        kappa_i  = ln(3/2) / 2          (decay floor: exp(-2*kappa_i) = 2/3)
        kappa_ii = -ln(1 - epsilon0/12) / 2
                                        (growth cap: 1 - exp(-2*kappa_ii)
                                         = epsilon0 / 12)

    and the interval half-width that matters is min(kappa_i, kappa_ii).
    Requires 0 < epsilon0 <= 12 * (1 - exp(-2)) so the logarithm is defined
    and the cap stays below the decay floor's scale.
    """
    e0 = float(epsilon0)
    limit = 12.0 * (1.0 - math.exp(-2.0))
    if not (math.isfinite(e0) and 0.0 < e0 <= limit):
        raise DomainError(f"epsilon0 must lie in (0, {limit}]")
    kappa_i = math.log(1.5) / 2.0
    kappa_ii = -math.log1p(-e0 / 12.0) / 2.0
    return SeparationConstants(kappa_i, kappa_ii, e0 / 24.0)
