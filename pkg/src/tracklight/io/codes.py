from __future__ import annotations

from tracklight.core.code import GameCode
from tracklight.exceptions import FormatError
from tracklight.io._cells import integer
from tracklight.io.report import Source, iter_lines
from tracklight.io.tracking import DEFAULT_FRAMERATE


def parse_code_csv(source: Source, name: str = "code", framerate: float = DEFAULT_FRAMERATE) -> GameCode:
    """Parse a ``frame,token`` CSV with contiguous frames 0..F-1.

    The file carries no timing information, so ``framerate`` is supplied by
    the caller. Every token is defined as itself.
    """
    lines = iter_lines(source)
    header = next(lines, None)
    if header is None or header[1] != "frame,token":
        raise FormatError("header must be 'frame,token'", 1)
    values = []
    for line_number, line in lines:
        if line == "":
            continue
        cells = line.split(",")
        if len(cells) != 2:
            raise FormatError(f"expected 2 cells, found {len(cells)}", line_number)
        try:
            frame = integer(cells[0])
        except FormatError as e:
            raise FormatError(str(e), line_number) from None
        if frame != len(values):
            kind = "duplicate" if frame < len(values) else "gap"
            raise FormatError(f"{kind} in frame column: expected {len(values)}, got {cells[0][:20]!r}", line_number)
        values.append(cells[1])
    return GameCode(name, tuple(values), {v: v for v in values}, framerate)
