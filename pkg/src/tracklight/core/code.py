"""Per-frame categorical game codes such as ball possession."""

from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType
from typing import Hashable, Mapping


@dataclass(frozen=True)
class GameCode:
    """A token per frame plus a human-readable label for every token."""

    name: str
    values: tuple[Hashable, ...]
    definitions: Mapping[Hashable, str]
    framerate: float

    def __post_init__(self):
        values = tuple(self.values)
        definitions = MappingProxyType(dict(self.definitions))
        if float(self.framerate) <= 0:
            raise ValueError(f"framerate must be positive, got {self.framerate}")
        undefined = {v for v in values if v not in definitions}
        if undefined:
            raise ValueError(f"tokens without definition: {sorted(map(str, undefined))}")
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "definitions", definitions)
        object.__setattr__(self, "framerate", float(self.framerate))

    def __len__(self) -> int:
        return len(self.values)

    def __eq__(self, other):
        if not isinstance(other, GameCode):
            return NotImplemented
        return (
            self.name == other.name
            and self.values == other.values
            and dict(self.definitions) == dict(other.definitions)
            and self.framerate == other.framerate
        )

    def __hash__(self):
        return hash((self.name, self.values, self.framerate))


def code_intervals(code: GameCode) -> list[tuple[int, int, Hashable]]:
    """Run-length view of a code as ``(start, end_exclusive, token)`` triples."""
    out = []
    start = 0
    values = code.values
    for i in range(1, len(values) + 1):
        if i == len(values) or values[i] != values[start]:
            out.append((start, i, values[start]))
            start = i
    return out


def decode_intervals(intervals) -> list:
    """Inverse of :func:`code_intervals`."""
    values = []
    for start, end, token in intervals:
        values.extend([token] * (end - start))
    return values
