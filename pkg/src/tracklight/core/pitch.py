"""Embedding of a playing surface into a Cartesian coordinate system."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum


class Unit(str, Enum):
    METERS = "meters"
    CENTIMETERS = "centimeters"
    PERCENT = "percent"


class Boundedness(str, Enum):
    FIXED = "fixed"
    FLEXIBLE = "flexible"


class Sport(str, Enum):
    FOOTBALL = "football"
    HANDBALL = "handball"
    OTHER = "other"


@dataclass(frozen=True)
class Pitch:
    """Axis ranges and unit of a pitch.

    When ``unit`` is percent, ``length`` and ``width`` (meters) are required so
    that metric distances can be recovered.
    """

    xlim: tuple[float, float]
    ylim: tuple[float, float]
    unit: Unit = Unit.METERS
    boundedness: Boundedness = Boundedness.FIXED
    length: float | None = None
    width: float | None = None
    sport: Sport = Sport.OTHER

    def __post_init__(self):
        xlim = tuple(float(v) for v in self.xlim)
        ylim = tuple(float(v) for v in self.ylim)
        if len(xlim) != 2 or len(ylim) != 2:
            raise ValueError("xlim and ylim must be pairs")
        if not all(math.isfinite(v) for v in xlim + ylim):
            raise ValueError("pitch limits must be finite")
        if not xlim[0] < xlim[1]:
            raise ValueError(f"xmin must be smaller than xmax, got {xlim}")
        if not ylim[0] < ylim[1]:
            raise ValueError(f"ymin must be smaller than ymax, got {ylim}")
        unit = Unit(self.unit)
        if unit is Unit.PERCENT and (self.length is None or self.width is None):
            raise ValueError("percent pitches need length and width")
        object.__setattr__(self, "xlim", xlim)
        object.__setattr__(self, "ylim", ylim)
        object.__setattr__(self, "unit", unit)
        object.__setattr__(self, "boundedness", Boundedness(self.boundedness))
        object.__setattr__(self, "sport", Sport(self.sport))

    @property
    def center(self) -> tuple[float, float]:
        return (self.xlim[0] + self.xlim[1]) / 2, (self.ylim[0] + self.ylim[1]) / 2

    @property
    def extent(self) -> tuple[float, float]:
        return self.xlim[1] - self.xlim[0], self.ylim[1] - self.ylim[0]

    @classmethod
    def from_template(cls, sport: str, centered: bool = False) -> Pitch:
        """Standard metric pitch: football 105 x 68 m, handball 40 x 20 m.

        The origin sits in the lower-left corner unless ``centered`` is set.
        """
        sizes = {"football": (105.0, 68.0), "handball": (40.0, 20.0)}
        try:
            length, width = sizes[Sport(sport).value]
        except KeyError:
            raise ValueError(f"no template for sport {sport!r}") from None
        if centered:
            xlim, ylim = (-length / 2, length / 2), (-width / 2, width / 2)
        else:
            xlim, ylim = (0.0, length), (0.0, width)
        return cls(xlim, ylim, Unit.METERS, Boundedness.FIXED, length, width, Sport(sport))
