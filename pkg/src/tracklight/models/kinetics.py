"""Metabolic power of accelerated running.

Accelerated running on flat ground is treated as running up an equivalent
slope ``ES = a / g`` with the body weight scaled by the equivalent mass
``EM = sqrt(ES^2 + 1)``. The energy cost of running uphill is the usual
quintic in the slope, and metabolic power is energy cost times speed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from tracklight.core.property import PlayerProperty
from tracklight.core.xy import TrackingData
from tracklight.models.base import BaseModel
from tracklight.models.kinematics import AccelerationModel, VelocityModel

# energy cost of running on a slope, J/(kg*m); highest degree first
RUNNING_COST_COEFFICIENTS = (155.4, -30.4, -43.3, 46.3, 19.5, 3.6)


@dataclass(frozen=True)
class KineticsParams:
    terrain_factor: float = 1.0
    g: float = 9.81

    def __post_init__(self):
        if not self.terrain_factor > 0:
            raise ValueError(f"terrain_factor must be positive, got {self.terrain_factor}")
        if not self.g > 0:
            raise ValueError(f"g must be positive, got {self.g}")


def energy_cost_running(es, em=None, terrain_factor: float = 1.0):
    """Energy cost of running in J/(kg*m) at equivalent slope ``es``.

    ``em`` defaults to ``sqrt(es**2 + 1)``.
    """
    es = np.asarray(es, dtype=float)
    if em is None:
        em = np.sqrt(es**2 + 1)
    cost = np.zeros_like(es)
    for c in RUNNING_COST_COEFFICIENTS:
        cost = cost * es + c
    return cost * em * terrain_factor


class MetabolicPowerModel(BaseModel):
    """Frame-wise and cumulative metabolic power per player.

    Examples
    --------
    >>> model = MetabolicPowerModel()
    >>> model.fit(home)  # doctest: +SKIP
    >>> work = model.cumulative_metabolic_power()  # doctest: +SKIP
    """

    def fit(self, td: TrackingData, params: KineticsParams | None = None) -> MetabolicPowerModel:
        params = params or KineticsParams()
        if td.n_frames < 3:
            raise ValueError(f"metabolic power needs at least 3 frames, got {td.n_frames}")
        v = VelocityModel().fit(td).velocity().values
        a = AccelerationModel().fit(td).acceleration().values

        es = a / params.g
        em = np.sqrt(es**2 + 1)
        ec = energy_cost_running(es, em, params.terrain_factor)
        power = ec * v
        power[np.isnan(v) | np.isnan(a)] = np.nan

        self.params = params
        self._es = es
        self._ec = ec
        self._power = power
        self._cumulative = np.cumsum(np.nan_to_num(power, nan=0.0), axis=0) / td.framerate
        self._set_state(td.framerate, td.player_ids)
        return self

    def _prop(self, attr: str, name: str, unit: str) -> PlayerProperty:
        self._check_fitted()
        s = self._state
        return PlayerProperty(getattr(self, attr), name, unit, s.source_framerate, s.source_player_ids)

    def equivalent_slope(self) -> PlayerProperty:
        return self._prop("_es", "equivalent_slope", "1")

    def energy_cost(self) -> PlayerProperty:
        return self._prop("_ec", "energy_cost", "J/(kg*m)")

    def metabolic_power(self) -> PlayerProperty:
        return self._prop("_power", "metabolic_power", "W/kg")

    def cumulative_metabolic_power(self) -> PlayerProperty:
        """Metabolic work so far in J/kg: running sum of ``P / framerate``
        with missing frames contributing nothing."""
        return self._prop("_cumulative", "cumulative_metabolic_power", "J/kg")
