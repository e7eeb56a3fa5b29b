from tracklight.core.code import GameCode, code_intervals
from tracklight.core.events import Event, EventList, Outcome, filter_events
from tracklight.core.pitch import Boundedness, Pitch, Sport, Unit
from tracklight.core.property import PlayerProperty
from tracklight.core.xy import (
    MISSING,
    Direction,
    TrackingData,
    frame_slice,
    player_slice,
)

__all__ = [
    "MISSING",
    "Boundedness",
    "Direction",
    "Event",
    "EventList",
    "GameCode",
    "Outcome",
    "Pitch",
    "PlayerProperty",
    "Sport",
    "TrackingData",
    "Unit",
    "code_intervals",
    "filter_events",
    "frame_slice",
    "player_slice",
]
