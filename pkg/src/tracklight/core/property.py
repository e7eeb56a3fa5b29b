"""Frame-wise scalar player properties."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True, eq=False)
class PlayerProperty:
    """(F, P) matrix of a scalar quantity such as velocity, NaN where missing."""

    values: np.ndarray
    name: str
    unit: str
    framerate: float
    player_ids: tuple[str, ...] = ()

    def __post_init__(self):
        values = np.array(self.values, dtype=float, copy=True)
        if values.ndim != 2:
            raise ValueError(f"values must be two-dimensional, got shape {values.shape}")
        values.flags.writeable = False
        player_ids = tuple(self.player_ids) or tuple(str(k) for k in range(values.shape[1]))
        if len(player_ids) != values.shape[1]:
            raise ValueError(f"{values.shape[1]} columns but {len(player_ids)} player ids")
        if float(self.framerate) <= 0:
            raise ValueError(f"framerate must be positive, got {self.framerate}")
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "player_ids", player_ids)
        object.__setattr__(self, "framerate", float(self.framerate))

    def __eq__(self, other):
        if not isinstance(other, PlayerProperty):
            return NotImplemented
        return (
            self.name == other.name
            and self.unit == other.unit
            and self.framerate == other.framerate
            and self.player_ids == other.player_ids
            and np.array_equal(self.values, other.values, equal_nan=True)
        )

    __hash__ = None

    @property
    def n_frames(self) -> int:
        return self.values.shape[0]

    @property
    def n_players(self) -> int:
        return self.values.shape[1]
