"""Event CSV format: ``event_id,gameclock,team,player_id,outcome,x,y,qualifiers``."""

from __future__ import annotations

from tracklight.core.events import Event, EventList, Outcome
from tracklight.exceptions import FormatError
from tracklight.io._cells import number, optional_number
from tracklight.io.report import ParseReport, Source, iter_lines

EVENT_FIELDS = ("event_id", "gameclock", "team", "player_id", "outcome", "x", "y", "qualifiers")


def _qualifiers(cell: str) -> dict[str, str]:
    out: dict[str, str] = {}
    if cell == "":
        return out
    for item in cell.split("|"):
        key, sep, value = item.partition("=")
        if not sep or not key or "=" in value:
            raise FormatError(f"malformed qualifier {item[:40]!r}")
        if key in out:
            raise FormatError(f"qualifier {key!r} given twice")
        out[key] = value
    return out


def _event(cells: list[str]) -> Event:
    event_id, clock, team, player_id, outcome, xs, ys, quals = cells
    if not event_id:
        raise FormatError("empty event_id")
    gameclock = number(clock)
    if gameclock < 0:
        raise FormatError(f"negative gameclock {clock}")
    if outcome and outcome not in {o.value for o in Outcome}:
        raise FormatError(f"unknown outcome {outcome[:20]!r}")
    x, y = optional_number(xs), optional_number(ys)
    if (x is None) != (y is None):
        raise FormatError("x and y must be given together")
    return Event(
        event_id=event_id,
        gameclock=gameclock,
        team=team or None,
        player_id=player_id or None,
        outcome=Outcome(outcome) if outcome else None,
        x=x,
        y=y,
        qualifiers=_qualifiers(quals),
    )


def parse_events_csv(source: Source) -> tuple[EventList, ParseReport]:
    """Parse an event CSV into an EventList sorted by gameclock.

    Empty optional cells mean absent values and ``qualifiers`` holds
    ``k1=v1|k2=v2``. Invalid rows (x without y, negative gameclock, bad
    numbers) are skipped with a warning. Unsorted input is stably sorted,
    also with a warning.
    """
    report = ParseReport()
    lines = iter_lines(source)
    header = next(lines, None)
    if header is None or header[1] == "":
        raise FormatError("header missing", 1)
    if tuple(header[1].split(",")) != EVENT_FIELDS:
        raise FormatError(f"header must be {','.join(EVENT_FIELDS)}", header[0])

    events = []
    for line_number, line in lines:
        if line == "":
            continue
        report.rows_read += 1
        cells = line.split(",")
        if len(cells) != len(EVENT_FIELDS):
            report.skip(line_number, f"expected {len(EVENT_FIELDS)} cells, found {len(cells)}")
            continue
        try:
            events.append(_event(cells))
        except FormatError as e:
            report.skip(line_number, str(e))

    clocks = [e.gameclock for e in events]
    if any(b < a for a, b in zip(clocks, clocks[1:])):
        report.warn(0, "events were not sorted by gameclock and have been reordered")
    return EventList.from_unsorted(events), report
