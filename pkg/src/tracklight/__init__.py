"""Team sport tracking data analysis: core data structures, parsers, transforms,
models and SVG rendering."""

from tracklight.core import (
    Direction,
    Event,
    EventList,
    GameCode,
    Pitch,
    PlayerProperty,
    TrackingData,
)

__version__ = "0.1.0"

__all__ = [
    "Direction",
    "Event",
    "EventList",
    "GameCode",
    "Pitch",
    "PlayerProperty",
    "TrackingData",
]
