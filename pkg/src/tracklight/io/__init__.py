"""Parsers and writers for the documented tracking, event and code text formats.

See ``docs/formats.md`` for the grammars.
"""

from tracklight.io.codes import parse_code_csv
from tracklight.io.events import parse_events_csv
from tracklight.io.report import ParseReport, ParseWarning
from tracklight.io.tracking import (
    DAT_FRAMERATE,
    DEFAULT_FRAMERATE,
    flatten_long,
    parse_tracking_dat,
    parse_tracking_long_csv,
    parse_tracking_wide_csv,
    read_tracking,
    write_tracking_wide_csv,
)

__all__ = [
    "DAT_FRAMERATE",
    "DEFAULT_FRAMERATE",
    "ParseReport",
    "ParseWarning",
    "flatten_long",
    "parse_code_csv",
    "parse_events_csv",
    "parse_tracking_dat",
    "parse_tracking_long_csv",
    "parse_tracking_wide_csv",
    "read_tracking",
    "write_tracking_wide_csv",
]
