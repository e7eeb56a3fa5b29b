"""Spatiotemporal tracking data container."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence

import numpy as np

MISSING = np.nan


class Direction(str, Enum):
    LEFT_TO_RIGHT = "left-to-right"
    RIGHT_TO_LEFT = "right-to-left"
    UNSPECIFIED = "unspecified"


def _frozen(array) -> np.ndarray:
    out = np.array(array, dtype=float, copy=True)
    out.flags.writeable = False
    return out


@dataclass(frozen=True, eq=False)
class TrackingData:
    """Positions of P players over F frames.

    ``coords`` is an (F, 2P) matrix where column ``2k`` holds the x and column
    ``2k+1`` the y coordinate of player ``k``. Missing samples are NaN in both
    columns of the pair. Instances are immutable; the coordinate matrix is
    copied on construction and flagged read-only.

    Parameters
    ----------
    coords: array-like of shape (F, 2P)
    framerate: float
        Frames per second, strictly positive.
    player_ids: sequence of str
        One distinct, non-empty identifier per player.
    direction: Direction, optional
        Playing direction of the team, unspecified by default.
    """

    coords: np.ndarray
    framerate: float
    player_ids: tuple[str, ...]
    direction: Direction = Direction.UNSPECIFIED
    _mask: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        coords = _frozen(self.coords)
        player_ids = tuple(self.player_ids)
        if coords.ndim == 1 and coords.size == 0:
            coords = _frozen(np.empty((0, 2 * len(player_ids))))
        if coords.ndim != 2:
            raise ValueError(f"coords must be two-dimensional, got shape {coords.shape}")
        if coords.shape[1] % 2:
            raise ValueError(f"coords must have an even column count, got {coords.shape[1]}")
        if coords.shape[1] != 2 * len(player_ids):
            raise ValueError(
                f"coords has {coords.shape[1]} columns but {len(player_ids)} player ids were given"
            )
        if any(not isinstance(pid, str) or not pid for pid in player_ids):
            raise ValueError("player ids must be non-empty strings")
        if len(set(player_ids)) != len(player_ids):
            raise ValueError("player ids must be distinct")
        framerate = float(self.framerate)
        if not np.isfinite(framerate) or framerate <= 0:
            raise ValueError(f"framerate must be positive, got {self.framerate}")
        if np.isinf(coords).any():
            raise ValueError("coords must be finite or NaN")
        nan = np.isnan(coords)
        if (nan[:, 0::2] != nan[:, 1::2]).any():
            raise ValueError("a sample must have both or neither of x and y missing")
        mask = nan[:, 0::2].copy()
        mask.flags.writeable = False

        object.__setattr__(self, "coords", coords)
        object.__setattr__(self, "framerate", framerate)
        object.__setattr__(self, "player_ids", player_ids)
        object.__setattr__(self, "direction", Direction(self.direction))
        object.__setattr__(self, "_mask", mask)

    def __len__(self) -> int:
        return self.coords.shape[0]

    def __eq__(self, other) -> bool:
        if not isinstance(other, TrackingData):
            return NotImplemented
        return (
            self.framerate == other.framerate
            and self.player_ids == other.player_ids
            and self.direction == other.direction
            and np.array_equal(self.coords, other.coords, equal_nan=True)
        )

    __hash__ = None

    @property
    def n_frames(self) -> int:
        return self.coords.shape[0]

    @property
    def n_players(self) -> int:
        return len(self.player_ids)

    @property
    def x(self) -> np.ndarray:
        """(F, P) view of the x coordinates."""
        return self.coords[:, 0::2]

    @property
    def y(self) -> np.ndarray:
        """(F, P) view of the y coordinates."""
        return self.coords[:, 1::2]

    @property
    def missing(self) -> np.ndarray:
        """(F, P) boolean mask, True where a player's sample is missing."""
        return self._mask

    def replace(self, coords=None, **changes) -> TrackingData:
        """New instance with the given fields swapped out."""
        return TrackingData(
            coords=self.coords if coords is None else coords,
            framerate=changes.get("framerate", self.framerate),
            player_ids=changes.get("player_ids", self.player_ids),
            direction=changes.get("direction", self.direction),
        )

    def player(self, k: int) -> np.ndarray:
        return player_slice(self, k)

    def frame(self, t: int) -> np.ndarray:
        return frame_slice(self, t)

    @classmethod
    def from_xy(cls, x, y, framerate: float, player_ids: Sequence[str], **kwargs) -> TrackingData:
        """Build from separate (F, P) x and y matrices."""
        x = np.asarray(x, dtype=float)
        y = np.asarray(y, dtype=float)
        if x.shape != y.shape:
            raise ValueError("x and y must have the same shape")
        coords = np.empty((x.shape[0], 2 * x.shape[1]))
        coords[:, 0::2] = x
        coords[:, 1::2] = y
        return cls(coords, framerate, tuple(player_ids), **kwargs)

    @classmethod
    def concat(cls, parts: Sequence[TrackingData], prefixes: Sequence[str] | None = None) -> TrackingData:
        """Join several objects player-wise. All parts need equal F and framerate."""
        if not parts:
            raise ValueError("nothing to concatenate")
        n = parts[0].n_frames
        rate = parts[0].framerate
        for p in parts[1:]:
            if p.n_frames != n:
                raise ValueError(f"frame count mismatch: {p.n_frames} != {n}")
            if p.framerate != rate:
                raise ValueError(f"framerate mismatch: {p.framerate} != {rate}")
        ids: list[str] = []
        for i, p in enumerate(parts):
            prefix = prefixes[i] if prefixes else ""
            ids.extend(prefix + pid for pid in p.player_ids)
        coords = np.hstack([p.coords for p in parts]) if n or ids else np.empty((0, 2 * len(ids)))
        return cls(coords.reshape(n, 2 * len(ids)), rate, ids)


def player_slice(td: TrackingData, k: int) -> np.ndarray:
    """Read-only (F, 2) view of player ``k``'s trajectory."""
    if not 0 <= k < td.n_players:
        raise IndexError(f"player index {k} out of range for {td.n_players} players")
    return td.coords[:, 2 * k : 2 * k + 2]


def frame_slice(td: TrackingData, t: int) -> np.ndarray:
    """Read-only (P, 2) view of all positions at frame ``t``."""
    if not 0 <= t < td.n_frames:
        raise IndexError(f"frame index {t} out of range for {td.n_frames} frames")
    return td.coords[t].reshape(td.n_players, 2)
