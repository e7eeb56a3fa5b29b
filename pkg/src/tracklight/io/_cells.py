import math
import re

from tracklight.exceptions import FormatError

_NUMBER = re.compile(r"[+-]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?")
_INTEGER = re.compile(r"[+-]?\d+")


def number(cell: str) -> float:
    """Strict decimal parse: no whitespace, no nan/inf, no digit separators."""
    if not _NUMBER.fullmatch(cell):
        raise FormatError(f"not a number: {cell[:40]!r}")
    value = float(cell)
    if value != value or value in (float("inf"), float("-inf")):
        raise FormatError(f"number out of range: {cell[:40]!r}")
    return value


def integer(cell: str) -> int:
    if not _INTEGER.fullmatch(cell):
        raise FormatError(f"not an integer: {cell[:40]!r}")
    return int(cell)


def optional_number(cell: str) -> float | None:
    return None if cell == "" else number(cell)


def format_number(value: float) -> str:
    """Shortest text that parses back to the same double."""
    value = float(value)
    negative_zero = value == 0 and math.copysign(1.0, value) < 0
    if value.is_integer() and abs(value) < 1e15 and not negative_zero:
        return str(int(value))
    return repr(value)
