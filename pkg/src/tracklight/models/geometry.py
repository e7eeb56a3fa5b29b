"""Team centroid and dispersion measures."""

from __future__ import annotations

import warnings

import numpy as np

from tracklight.core.property import PlayerProperty
from tracklight.core.xy import TrackingData
from tracklight.models.base import BaseModel


def _nanmean(a: np.ndarray) -> np.ndarray:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RuntimeWarning)
        return np.nanmean(a, axis=1)


class CentroidModel(BaseModel):
    """Centroid of a team and the stretch index around it.

    The centroid at a frame is the mean position of the players present;
    frames where every player is missing get a missing centroid.
    """

    def fit(self, td: TrackingData) -> CentroidModel:
        if td.n_players:
            cx, cy = _nanmean(td.x), _nanmean(td.y)
        else:
            cx = cy = np.full(td.n_frames, np.nan)
        self._centroid = np.column_stack([cx, cy])
        self._stretch = _nanmean(np.hypot(td.x - cx[:, None], td.y - cy[:, None]))
        if not td.n_players:
            self._stretch = np.full(td.n_frames, np.nan)
        self._set_state(td.framerate, td.player_ids)
        self._n_frames = td.n_frames
        return self

    def centroid(self) -> TrackingData:
        self._check_fitted()
        return TrackingData(self._centroid, self._state.source_framerate, ["centroid"])

    def centroid_distance(self, other: CentroidModel) -> PlayerProperty:
        """Distance between this centroid and ``other``'s, frame by frame."""
        self._check_fitted()
        other._check_fitted()
        if other._n_frames != self._n_frames:
            raise ValueError(f"frame count mismatch: {self._n_frames} != {other._n_frames}")
        if other._state.source_framerate != self._state.source_framerate:
            raise ValueError("framerate mismatch between the two fitted models")
        d = np.hypot(*(self._centroid - other._centroid).T)
        return PlayerProperty(d[:, None], "centroid_distance", "m", self._state.source_framerate, ["centroid"])

    def stretch_index(self) -> PlayerProperty:
        """Mean distance of the present players to the centroid."""
        self._check_fitted()
        return PlayerProperty(
            self._stretch[:, None], "stretch_index", "m", self._state.source_framerate, ["centroid"]
        )
