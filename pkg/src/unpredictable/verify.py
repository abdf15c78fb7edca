"""Empirical witnesses for shift recurrence with persistent separation.

A sequence is considered here through two lenses at once.  It should return
near itself under some shifts: windows [-L, L] and [-L + z, L + z] agree
within a tolerance.  And each such returning shift z should still be told
apart from the identity somewhere: an index e with |v(e + z) - v(e)| at
least epsilon0.  A (z, e) pair is a witness.  Growing lists of witnesses
with strictly increasing z and e are the finite-data shadow of the defining
limit properties, so the verdicts speak only about the supplied data:

    consistent    the requested number of witnesses was found
    inconsistent  the data itself rules the property out (an exactly
                  periodic sequence, or a function whose returning shifts
                  never separate anywhere on the sampled range)
    inconclusive  the data ran out before either of the above

The function-level search plays the same game with a sampled function of
time: shifts must reproduce the function on a compact interval within a
tolerance, and separation must persist on a whole subinterval of half-width
sigma rather than at a single point.  Every reported witness carries the
numbers needed to re-check it from the raw data.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import CoverageError, DomainError, ResolutionError
from .filtering import Trajectory, _EDGE_TOL
from .symbolspace import SequenceWindow

_VERDICTS = ("consistent", "inconsistent", "inconclusive")


@dataclass(frozen=True)
class SequenceWitness:
    """One returning shift together with its separating index."""

    zeta: int
    eta: int
    window: tuple[int, int]
    max_window_error: float
    separation: float


@dataclass(frozen=True)
class SequenceVerdict:
    witnesses: tuple[SequenceWitness, ...]
    epsilon0_achieved: float
    verdict: str

    def __post_init__(self) -> None:
        if self.verdict not in _VERDICTS:
            raise DomainError(f"verdict must be one of {_VERDICTS}")


@dataclass(frozen=True)
class FunctionWitness:
    """One returning time shift with its separating interval."""

    t_shift: float
    u_center: float
    sigma: float
    max_compact_error: float
    min_separation_on_interval: float


@dataclass(frozen=True)
class FunctionVerdict:
    witnesses: tuple[FunctionWitness, ...]
    separation_achieved: float
    verdict: str

    def __post_init__(self) -> None:
        if self.verdict not in _VERDICTS:
            raise DomainError(f"verdict must be one of {_VERDICTS}")


def _base_checks(seq: SequenceWindow, half_width: int) -> int:
    L = int(half_width)
    if L < 1:
        raise DomainError("half_width must be a positive integer")
    if not seq.covers(-L, L) or seq.last_index < L + 1:
        raise CoverageError(
            "window must cover [-L, L] plus at least one shifted copy")
    return L


def qualifying_shifts(seq: SequenceWindow, half_width: int,
                      tolerance: float) -> np.ndarray:
    """All shifts z >= 1 whose window [-L + z, L + z] matches [-L, L]
    within ``tolerance``, in increasing order.

    Raises:
        CoverageError: the window cannot hold [-L, L] and one shifted copy.
    """
    L = _base_checks(seq, half_width)
    if tolerance < 0:
        raise DomainError("tolerance must be nonnegative")
    v = seq.symbols
    base = seq.segment(-L, L)
    width = 2 * L + 1
    # window for shift z starts at array offset z - L - first_index >= 1
    off0 = 1 - L - seq.first_index
    windows = np.lib.stride_tricks.sliding_window_view(v, width)[off0:]
    hits: list[np.ndarray] = []
    chunk = 1 << 16
    for lo in range(0, windows.shape[0], chunk):
        block = windows[lo:lo + chunk]
        err = np.max(np.abs(block - base), axis=1)
        hits.append(np.flatnonzero(err <= tolerance) + lo)
    pos = np.concatenate(hits) if hits else np.empty(0, dtype=np.int64)
    return pos + 1


def find_sequence_witnesses(seq: SequenceWindow, window_half_width: int,
                            tolerance: float, epsilon0: float,
                            count: int) -> SequenceVerdict:
    """Search for ``count`` witnesses with strictly increasing z and e.

    Shifts are scanned in increasing order; for each qualifying shift the
    smallest separating index larger than the previous witness's index is
    taken.  If a qualifying shift admits no separating index anywhere in the
    data and the sequence is exactly z-periodic over the covered range, the
    verdict is ``inconsistent``.  ``epsilon0_achieved`` is the smallest
    separation the reported witnesses sustain, or 0 when there are none.

    Raises:
        DomainError: a parameter is out of range.
        CoverageError: the window cannot hold [-L, L] and one shifted copy.
    """
    L = _base_checks(seq, window_half_width)
    if not epsilon0 > 0:
        raise DomainError("epsilon0 must be positive")
    if int(count) < 1:
        raise DomainError("count must be a positive integer")

    v = seq.symbols
    first = seq.first_index
    last = seq.last_index
    base = seq.segment(-L, L)
    witnesses: list[SequenceWitness] = []
    last_eta = 0
    verdict = "inconclusive"

    for zeta in qualifying_shifts(seq, L, tolerance).tolist():
        eta_lo = max(1, first)
        eta_hi = last - zeta
        if eta_lo > eta_hi:
            continue
        gaps = np.abs(v[eta_lo + zeta - first:eta_hi + zeta - first + 1]
                      - v[eta_lo - first:eta_hi - first + 1])
        cand = np.flatnonzero(gaps >= epsilon0)
        if cand.size == 0:
            if np.array_equal(v[zeta:], v[:len(v) - zeta]):
                verdict = "inconsistent"
                break
            continue
        etas = cand + eta_lo
        pos = int(np.searchsorted(etas, last_eta + 1))
        if pos == len(etas):
            continue
        eta = int(etas[pos])
        err = float(np.max(np.abs(seq.segment(-L + zeta, L + zeta) - base)))
        witnesses.append(SequenceWitness(
            zeta=int(zeta), eta=eta, window=(-L, L),
            max_window_error=err, separation=float(gaps[cand[pos]])))
        last_eta = eta
        if len(witnesses) == count:
            verdict = "consistent"
            break

    achieved = min((w.separation for w in witnesses), default=0.0)
    return SequenceVerdict(tuple(witnesses), achieved, verdict)


def orbit_return_distances(seq: SequenceWindow, half_width: int,
                           max_shift: int) -> list[tuple[int, float]]:
    """Truncated distance between the sequence and each of its shifts.

    For every shift s in 1..max_shift, sums |v(k + s) - v(k)| / 2**|k| over
    |k| <= half_width.  Useful as a recurrence diagnostic: dips mark shifts
    under which the window nearly returns to itself.

    Raises:
        CoverageError: indices [-K - max_shift, K + max_shift] are missing.
    """
    K = int(half_width)
    S = int(max_shift)
    if K < 1 or S < 1:
        raise DomainError("half_width and max_shift must be positive")
    if not seq.covers(-K, K + S):
        raise CoverageError(
            f"window must cover [{-K}, {K + S}] for this diagnostic")
    weights = 0.5 ** np.abs(np.arange(-K, K + 1))
    base = seq.segment(-K, K)
    out = []
    for s in range(1, S + 1):
        shifted = seq.segment(-K + s, K + s)
        out.append((s, float(np.sum(np.abs(shifted - base) * weights))))
    return out


def _as_evaluator(h, domain):
    if isinstance(h, Trajectory):
        return h.at, (h.t_start, h.t_end)
    if domain is None:
        raise DomainError("a callable needs an explicit domain=(lo, hi)")
    lo, hi = float(domain[0]), float(domain[1])
    if not lo < hi:
        raise DomainError("domain bounds out of order")
    return h, (lo, hi)


def find_function_witnesses(h: Trajectory | Callable,
                            t_shift_candidates: Sequence[float],
                            compact: tuple[float, float],
                            sigma: float,
                            tolerance: float,
                            epsilon0: float,
                            sample_dt: float | None = None,
                            domain: tuple[float, float] | None = None,
                            ) -> FunctionVerdict:
    """Search sampled function data for returning shifts that separate.

    A candidate shift T qualifies when sup over the compact [a, b] of
    |h(t + T) - h(t)| is at most ``tolerance``, estimated on a grid of
    spacing ``sample_dt``.  For each qualifying shift the search looks for a
    center u with min over [u - sigma, u + sigma] of |h(t + T) - h(t)| at
    least ``epsilon0``, taking the best center later than the previous
    witness's.  ``h`` may be a :class:`Trajectory` or a vectorized callable
    with an explicit ``domain``.

    ``separation_achieved`` is the best interval separation seen across
    qualifying shifts even when it falls short of ``epsilon0``.

    Raises:
        ResolutionError: sample_dt exceeds sigma / 8.
        CoverageError: the domain cannot hold [a, b + max shift].
        DomainError: a parameter is out of range.
    """
    func, (d_lo, d_hi) = _as_evaluator(h, domain)
    alpha, beta = float(compact[0]), float(compact[1])
    if not alpha < beta:
        raise DomainError("compact interval bounds out of order")
    if not sigma > 0:
        raise DomainError("sigma must be positive")
    if tolerance < 0:
        raise DomainError("tolerance must be nonnegative")
    if not epsilon0 > 0:
        raise DomainError("epsilon0 must be positive")
    shifts = sorted(float(s) for s in t_shift_candidates)
    if not shifts:
        raise DomainError("need at least one shift candidate")
    if shifts[0] <= 0:
        raise DomainError("shift candidates must be positive")
    dt = sigma / 8.0 if sample_dt is None else float(sample_dt)
    if dt > sigma / 8.0 * (1.0 + _EDGE_TOL):
        raise ResolutionError("sample_dt must be at most sigma / 8")
    if alpha < d_lo - _EDGE_TOL * dt or beta + shifts[-1] > d_hi + _EDGE_TOL * dt:
        raise CoverageError(
            f"domain [{d_lo}, {d_hi}] cannot hold "
            f"[{alpha}, {beta + shifts[-1]}]")

    # one master grid, reused for every shift
    m = int(np.floor((d_hi - alpha) / dt + _EDGE_TOL))
    grid = alpha + dt * np.arange(m + 1)
    h_grid = np.asarray(func(grid), dtype=np.float64)
    n_compact = int(np.floor((beta - alpha) / dt + _EDGE_TOL)) + 1
    win = int(round(2.0 * sigma / dt)) + 1

    witnesses: list[FunctionWitness] = []
    best_overall = 0.0
    any_qualifying = False
    last_u = -np.inf

    for shift in shifts:
        usable = int(np.floor((d_hi - shift - alpha) / dt + _EDGE_TOL)) + 1
        if usable < max(n_compact, win):
            continue
        h_shifted = np.asarray(func(grid[:usable] + shift), dtype=np.float64)
        diff = np.abs(h_shifted - h_grid[:usable])
        compact_err = float(np.max(diff[:n_compact]))
        if compact_err > tolerance:
            continue
        any_qualifying = True
        # sliding minimum of |h(t + shift) - h(t)| over 2*sigma windows
        n_win = usable - win + 1
        mins = diff[:n_win].copy()
        for j in range(1, win):
            np.minimum(mins, diff[j:j + n_win], out=mins)
        centers = grid[:n_win] + sigma
        allowed = centers > last_u
        if not np.any(allowed):
            continue
        idx = np.flatnonzero(allowed)
        best = idx[int(np.argmax(mins[idx]))]
        best_overall = max(best_overall, float(mins[best]))
        if mins[best] >= epsilon0:
            witnesses.append(FunctionWitness(
                t_shift=shift, u_center=float(centers[best]), sigma=sigma,
                max_compact_error=compact_err,
                min_separation_on_interval=float(mins[best])))
            last_u = float(centers[best])

    if witnesses:
        verdict = "consistent"
    elif any_qualifying:
        verdict = "inconsistent"
    else:
        verdict = "inconclusive"
    return FunctionVerdict(tuple(witnesses), best_overall, verdict)


def sequence_report(seq: SequenceWindow, result: SequenceVerdict, *,
                    window_half_width: int, tolerance: float,
                    epsilon0: float, count: int) -> dict:
    """JSON-ready summary of a sequence verification run."""
    return {
        "verdict": result.verdict,
        "epsilon0_requested": epsilon0,
        "epsilon0_achieved": result.epsilon0_achieved,
        "witnesses": [
            {"zeta": w.zeta, "eta": w.eta,
             "window": [w.window[0], w.window[1]],
             "max_window_error": w.max_window_error,
             "separation": w.separation}
            for w in result.witnesses],
        "data_coverage": {"first_index": seq.first_index,
                          "last_index": seq.last_index},
        "parameters": {"window_half_width": int(window_half_width),
                       "tolerance": tolerance,
                       "count": int(count)},
    }


def function_report(result: FunctionVerdict, *, epsilon0_requested: float,
                    predicted_lower_bound: float,
                    domain: tuple[float, float],
                    parameters: dict) -> dict:
    """JSON-ready summary of a function verification run."""
    return {
        "verdict": result.verdict,
        "epsilon0_requested": epsilon0_requested,
        "separation_achieved": result.separation_achieved,
        "separation_predicted_lower_bound": predicted_lower_bound,
        "witnesses": [
            {"t_shift": w.t_shift, "u_center": w.u_center, "sigma": w.sigma,
             "max_compact_error": w.max_compact_error,
             "min_separation_on_interval": w.min_separation_on_interval}
            for w in result.witnesses],
        "data_coverage": {"t_min": domain[0], "t_max": domain[1]},
        "parameters": parameters,
    }
