"""Distance, velocity and acceleration from tracking data."""

from __future__ import annotations

import numpy as np

from tracklight.core.property import PlayerProperty
from tracklight.core.xy import TrackingData
from tracklight.models.base import BaseModel


def central_difference(values: np.ndarray, framerate: float) -> np.ndarray:
    """Time derivative along axis 0: central inside, one-sided at both ends.

    Works on any trailing shape; NaN neighbours yield NaN. Needs at least two rows.
    """
    values = np.asarray(values, dtype=float)
    out = np.empty_like(values)
    out[1:-1] = (values[2:] - values[:-2]) * framerate / 2
    out[0] = (values[1] - values[0]) * framerate
    out[-1] = (values[-1] - values[-2]) * framerate
    return out


class DistanceModel(BaseModel):
    """Frame-to-frame distance covered by every player."""

    def fit(self, td: TrackingData) -> DistanceModel:
        if td.n_frames < 1:
            raise ValueError("distance model needs at least one frame")
        step = np.zeros((td.n_frames, td.n_players))
        step[1:] = np.hypot(np.diff(td.x, axis=0), np.diff(td.y, axis=0))
        self._frame_distance = step
        self._cumulative = np.cumsum(np.nan_to_num(step, nan=0.0), axis=0)
        self._set_state(td.framerate, td.player_ids)
        return self

    def frame_distance(self) -> PlayerProperty:
        """Distance between consecutive frames in m. Row 0 is zero; steps
        touching a missing sample are missing."""
        self._check_fitted()
        return PlayerProperty(self._frame_distance, "frame_distance", "m", *self._meta())

    def cumulative_distance(self) -> PlayerProperty:
        """Running total of ``frame_distance``, missing steps counted as 0."""
        self._check_fitted()
        return PlayerProperty(self._cumulative, "cumulative_distance", "m", *self._meta())

    def _meta(self):
        return self._state.source_framerate, self._state.source_player_ids


class VelocityModel(BaseModel):
    """Frame-wise speed.

    Interior frames use ``|p[t+1] - p[t-1]| * framerate / 2``; the first and
    last frame use forward and backward differences. A frame is missing when
    the player or a neighbour used by the difference is missing.
    """

    def fit(self, td: TrackingData) -> VelocityModel:
        if td.n_frames < 2:
            raise ValueError(f"velocity needs at least 2 frames, got {td.n_frames}")
        vx = central_difference(td.x, td.framerate)
        vy = central_difference(td.y, td.framerate)
        speed = np.hypot(vx, vy)
        speed[td.missing] = np.nan
        self._velocity = speed
        self._set_state(td.framerate, td.player_ids)
        return self

    def velocity(self) -> PlayerProperty:
        self._check_fitted()
        s = self._state
        return PlayerProperty(self._velocity, "velocity", "m/s", s.source_framerate, s.source_player_ids)


class AccelerationModel(BaseModel):
    """Signed rate of change of speed, the central difference of
    :class:`VelocityModel` output (one-sided at the ends)."""

    def fit(self, td: TrackingData) -> AccelerationModel:
        if td.n_frames < 3:
            raise ValueError(f"acceleration needs at least 3 frames, got {td.n_frames}")
        speed = VelocityModel().fit(td).velocity().values
        acceleration = central_difference(speed, td.framerate)
        acceleration[np.isnan(speed)] = np.nan
        self._acceleration = acceleration
        self._set_state(td.framerate, td.player_ids)
        return self

    def acceleration(self) -> PlayerProperty:
        self._check_fitted()
        s = self._state
        return PlayerProperty(
            self._acceleration, "acceleration", "m/s^2", s.source_framerate, s.source_player_ids
        )
