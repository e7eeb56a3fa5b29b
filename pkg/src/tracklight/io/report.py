from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import BinaryIO, Iterator, Union

from tracklight.exceptions import FormatError

Source = Union[bytes, bytearray, str, os.PathLike, BinaryIO]


@dataclass(frozen=True)
class ParseWarning:
    line_number: int
    message: str


@dataclass
class ParseReport:
    """Bookkeeping of a single parse run.

    For row-oriented formats ``rows_read`` equals accepted rows plus
    ``rows_skipped``. ``time_base`` is filled by the long-format parser with
    the sorted timestamps (ms) of each group.
    """

    rows_read: int = 0
    rows_skipped: int = 0
    warnings: list[ParseWarning] = field(default_factory=list)
    time_base: dict[str, tuple[float, ...]] = field(default_factory=dict)

    def warn(self, line_number: int, message: str) -> None:
        self.warnings.append(ParseWarning(line_number, message))

    def skip(self, line_number: int, message: str) -> None:
        self.rows_skipped += 1
        self.warn(line_number, message)

    def summary(self) -> str:
        return f"rows read: {self.rows_read}, rows skipped: {self.rows_skipped}, warnings: {len(self.warnings)}"


def read_bytes(source: Source) -> bytes:
    """Accept raw bytes, a path, or a binary file object."""
    if isinstance(source, (bytes, bytearray)):
        return bytes(source)
    if isinstance(source, (str, os.PathLike)):
        with open(source, "rb") as f:
            return f.read()
    data = source.read()
    if isinstance(data, str):
        raise TypeError("expected a binary stream")
    return data


def iter_lines(source: Source) -> Iterator[tuple[int, str]]:
    """Yield ``(line_number, text)`` with 1-based numbers and line endings removed."""
    raw = read_bytes(source)
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError as e:
        raise FormatError(f"input is not valid UTF-8 ({e.reason} at byte {e.start})") from None
    if text.startswith("﻿"):
        text = text[1:]
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    for i, line in enumerate(lines, start=1):
        if line.endswith("\r"):
            line = line[:-1]
        yield i, line
