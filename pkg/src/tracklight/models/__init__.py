"""Fit-then-query analysis models.

Every model is instantiated, fitted once with core data structures and then
queried::

    model = VelocityModel()
    model.fit(td)
    v = model.velocity()
"""

from tracklight.models.base import BaseModel, ModelState
from tracklight.models.entropy import ApproximateEntropyModel, approximate_entropy
from tracklight.models.geometry import CentroidModel
from tracklight.models.kinematics import (
    AccelerationModel,
    DistanceModel,
    VelocityModel,
    central_difference,
)
from tracklight.models.kinetics import KineticsParams, MetabolicPowerModel, energy_cost_running

__all__ = [
    "AccelerationModel",
    "ApproximateEntropyModel",
    "BaseModel",
    "CentroidModel",
    "DistanceModel",
    "KineticsParams",
    "MetabolicPowerModel",
    "ModelState",
    "VelocityModel",
    "approximate_entropy",
    "central_difference",
    "energy_cost_running",
]
