"""Discrete match events."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from types import MappingProxyType
from typing import Iterator, Mapping, Sequence


class Outcome(str, Enum):
    SUCCESS = "success"
    FAILURE = "failure"


@dataclass(frozen=True)
class Event:
    """A single annotated event.

    ``gameclock`` is in seconds from the start of the segment. ``x`` and ``y``
    are either both given or both None.
    """

    event_id: str
    gameclock: float
    team: str | None = None
    player_id: str | None = None
    outcome: Outcome | None = None
    x: float | None = None
    y: float | None = None
    qualifiers: Mapping[str, str] = field(default_factory=dict)

    def __post_init__(self):
        if not isinstance(self.event_id, str) or not self.event_id:
            raise ValueError("event_id must be a non-empty string")
        clock = float(self.gameclock)
        if not math.isfinite(clock) or clock < 0:
            raise ValueError(f"gameclock must be a finite non-negative number, got {self.gameclock}")
        if (self.x is None) != (self.y is None):
            raise ValueError("x and y must be given together")
        object.__setattr__(self, "gameclock", clock)
        if self.outcome is not None:
            object.__setattr__(self, "outcome", Outcome(self.outcome))
        if self.x is not None:
            object.__setattr__(self, "x", float(self.x))
            object.__setattr__(self, "y", float(self.y))
        object.__setattr__(self, "qualifiers", MappingProxyType(dict(self.qualifiers)))

    def __hash__(self):
        return hash((self.event_id, self.gameclock, self.team, self.player_id))

    def __eq__(self, other):
        if not isinstance(other, Event):
            return NotImplemented
        return (
            self.event_id == other.event_id
            and self.gameclock == other.gameclock
            and self.team == other.team
            and self.player_id == other.player_id
            and self.outcome == other.outcome
            and self.x == other.x
            and self.y == other.y
            and dict(self.qualifiers) == dict(other.qualifiers)
        )


@dataclass(frozen=True)
class EventList:
    """Events ordered by non-decreasing gameclock."""

    records: tuple[Event, ...] = ()

    def __post_init__(self):
        records = tuple(self.records)
        for prev, cur in zip(records, records[1:]):
            if cur.gameclock < prev.gameclock:
                raise ValueError("events must be sorted by gameclock")
        object.__setattr__(self, "records", records)

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self) -> Iterator[Event]:
        return iter(self.records)

    def __getitem__(self, i):
        return self.records[i]

    @classmethod
    def from_unsorted(cls, events: Sequence[Event]) -> EventList:
        return cls(tuple(sorted(events, key=lambda e: e.gameclock)))


def filter_events(
    events: EventList,
    event_id: str | None = None,
    team: str | None = None,
    gameclock_range: tuple[float, float] | None = None,
) -> EventList:
    """Select events matching every given criterion, keeping their order.

    ``gameclock_range`` is inclusive on both ends.
    """
    if gameclock_range is not None:
        lo, hi = gameclock_range
        if lo > hi:
            raise ValueError(f"invalid gameclock range ({lo}, {hi}): lower bound exceeds upper")

    def keep(e: Event) -> bool:
        if event_id is not None and e.event_id != event_id:
            return False
        if team is not None and e.team != team:
            return False
        if gameclock_range is not None and not lo <= e.gameclock <= hi:
            return False
        return True

    return EventList(tuple(e for e in events.records if keep(e)))
