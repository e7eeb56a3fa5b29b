"""Approximate entropy of scalar player series."""

from __future__ import annotations

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from tracklight.core.property import PlayerProperty
from tracklight.models.base import BaseModel

_BLOCK = 512


def _phi(u: np.ndarray, m: int, r: float) -> float:
    windows = sliding_window_view(u, m)
    n = len(windows)
    log_c = np.empty(n)
    for start in range(0, n, _BLOCK):
        block = windows[start : start + _BLOCK]
        dist = np.abs(block[:, None, :] - windows[None, :, :]).max(axis=2)
        log_c[start : start + len(block)] = np.log(np.count_nonzero(dist <= r, axis=1) / n)
    return float(log_c.mean())


def approximate_entropy(u, m: int = 2, r: float | None = None) -> float:
    """Approximate entropy ``phi_m(r) - phi_{m+1}(r)`` of a gap-free series.

    Window distance is the maximum absolute coordinate difference and every
    window counts as a match of itself. ``r`` defaults to ``0.2 * std(u)``.
    """
    u = np.asarray(u, dtype=float)
    if m < 1:
        raise ValueError(f"embedding dimension must be at least 1, got {m}")
    if len(u) < m + 2:
        raise ValueError(f"series of length {len(u)} too short for m={m} (needs {m + 2})")
    if r is None:
        r = 0.2 * float(np.std(u))
    elif not r > 0:
        raise ValueError(f"tolerance r must be positive, got {r}")
    return _phi(u, m, r) - _phi(u, m + 1, r)


class ApproximateEntropyModel(BaseModel):
    """Approximate entropy of each player's series in a PlayerProperty.

    Leading and trailing missing values are trimmed; a player whose series
    still contains a gap gets a missing result.
    """

    def fit(self, prop: PlayerProperty, m: int = 2, r: float | None = None) -> ApproximateEntropyModel:
        if m < 1:
            raise ValueError(f"embedding dimension must be at least 1, got {m}")
        if r is not None and not r > 0:
            raise ValueError(f"tolerance r must be positive, got {r}")
        result = np.full(prop.n_players, np.nan)
        for k in range(prop.n_players):
            column = prop.values[:, k]
            present = np.flatnonzero(~np.isnan(column))
            if len(present) and len(present) != present[-1] - present[0] + 1:
                continue
            series = column[present[0] : present[-1] + 1] if len(present) else column[:0]
            if len(series) < m + 2:
                raise ValueError(
                    f"player {prop.player_ids[k]!r}: {len(series)} samples, needs at least {m + 2}"
                )
            result[k] = approximate_entropy(series, m, r)
        self.m, self.r = m, r
        self._apen = result
        self._set_state(prop.framerate, prop.player_ids)
        return self

    def approximate_entropy(self) -> np.ndarray:
        self._check_fitted()
        return self._apen.copy()
