"""Tracking data formats.

Three text layouts are supported, each one mirroring a family of provider
formats:

* wide CSV, one row per frame with an x and y column per player
* long CSV, one row per player sample, grouped by ``group_id``
* DAT, one colon-delimited line per frame holding home, away and ball chunks

Coordinates are stored exactly as found in the file; no unit conversion or
origin shift is applied here (see :mod:`tracklight.transforms`).
"""

from __future__ import annotations

import io
from typing import Mapping

import numpy as np

from tracklight.core.xy import TrackingData
from tracklight.exceptions import FormatError
from tracklight.io._cells import format_number, integer, number, optional_number
from tracklight.io.report import ParseReport, Source, iter_lines

# used when fewer than two frames leave the framerate undetermined
DEFAULT_FRAMERATE = 25.0
# DAT frame numbers are assumed to tick at this rate when spaced by 1
DAT_FRAMERATE = 25.0

WIDE_PREFIX = ("frame", "t_ms")
LONG_FIELDS = ("t_ms", "group_id", "player_id", "x", "y")


def _framerate_from_ms(t_ms) -> float:
    if len(t_ms) < 2:
        return DEFAULT_FRAMERATE
    return 1000.0 / float(np.median(np.diff(np.asarray(t_ms, dtype=float))))


def _wide_header(line: str, line_number: int) -> list[str]:
    cells = line.split(",")
    if tuple(cells[:2]) != WIDE_PREFIX:
        raise FormatError("header must start with 'frame,t_ms'", line_number)
    coord_cols = cells[2:]
    if len(coord_cols) % 2:
        raise FormatError(f"odd number of coordinate columns ({len(coord_cols)})", line_number)
    player_ids = []
    for xcol, ycol in zip(coord_cols[0::2], coord_cols[1::2]):
        if not (xcol.endswith("_x") and ycol.endswith("_y")) or xcol[:-2] != ycol[:-2] or not xcol[:-2]:
            raise FormatError(f"expected '<id>_x,<id>_y' column pair, got {xcol!r},{ycol!r}", line_number)
        player_ids.append(xcol[:-2])
    if len(set(player_ids)) != len(player_ids):
        raise FormatError("duplicate player id in header", line_number)
    return player_ids


def _pair(xcell: str, ycell: str) -> tuple[float, float]:
    x, y = optional_number(xcell), optional_number(ycell)
    if (x is None) != (y is None):
        raise FormatError("exactly one of x and y is missing")
    if x is None:
        return np.nan, np.nan
    return x, y


def parse_tracking_wide_csv(source: Source) -> tuple[TrackingData, ParseReport]:
    """Parse a wide CSV (header ``frame,t_ms,<pid>_x,<pid>_y,...``).

    The framerate is ``1000 / median(successive t_ms differences)``. Empty
    coordinate cells are missing samples. Rows with unparsable numbers or a
    wrong cell count are skipped and reported.

    Raises
    ------
    FormatError
        Missing or malformed header, or ``t_ms`` not strictly increasing.
    """
    report = ParseReport()
    lines = iter_lines(source)
    header = next(lines, None)
    if header is None or header[1] == "":
        raise FormatError("header missing", 1)
    player_ids = _wide_header(header[1], header[0])
    n_cols = 2 + 2 * len(player_ids)

    rows: list[list[float]] = []
    t_ms: list[float] = []
    for line_number, line in lines:
        if line == "":
            continue
        report.rows_read += 1
        cells = line.split(",")
        if len(cells) != n_cols:
            report.skip(line_number, f"expected {n_cols} cells, found {len(cells)}")
            continue
        try:
            integer(cells[0])
            t = number(cells[1])
            row = []
            for xcell, ycell in zip(cells[2::2], cells[3::2]):
                row.extend(_pair(xcell, ycell))
        except FormatError as e:
            report.skip(line_number, str(e))
            continue
        if t_ms and t <= t_ms[-1]:
            raise FormatError(f"t_ms not strictly increasing ({t} after {t_ms[-1]})", line_number)
        t_ms.append(t)
        rows.append(row)

    coords = np.array(rows, dtype=float).reshape(len(rows), 2 * len(player_ids))
    return TrackingData(coords, _framerate_from_ms(t_ms), player_ids), report


def parse_tracking_long_csv(source: Source) -> tuple[dict[str, TrackingData], ParseReport]:
    """Parse a long CSV (``t_ms,group_id,player_id,x,y``), one sample per row.

    Each group is pivoted onto the sorted union of its timestamps; players
    without a sample at a timestamp are missing there. Player ids are sorted
    within a group. A row with both coordinates empty is an explicit missing
    sample. The per-group time base is stored in ``report.time_base``.

    Raises
    ------
    FormatError
        Missing header field, or the same (t_ms, group_id, player_id) given
        twice with different coordinates.
    """
    report = ParseReport()
    lines = iter_lines(source)
    header = next(lines, None)
    if header is None or header[1] == "":
        raise FormatError("header missing", 1)
    columns = header[1].split(",")
    if len(set(columns)) != len(columns):
        raise FormatError("duplicate header field", header[0])
    missing = [f for f in LONG_FIELDS if f not in columns]
    if missing:
        raise FormatError(f"header lacks field(s) {', '.join(missing)}", header[0])
    idx = {f: columns.index(f) for f in LONG_FIELDS}

    samples: dict[tuple[float, str, str], tuple[float, float, int]] = {}
    for line_number, line in lines:
        if line == "":
            continue
        report.rows_read += 1
        cells = line.split(",")
        if len(cells) != len(columns):
            report.skip(line_number, f"expected {len(columns)} cells, found {len(cells)}")
            continue
        group, player = cells[idx["group_id"]], cells[idx["player_id"]]
        if not group or not player:
            report.skip(line_number, "empty group_id or player_id")
            continue
        try:
            t = number(cells[idx["t_ms"]])
            xy = _pair(cells[idx["x"]], cells[idx["y"]])
        except FormatError as e:
            report.skip(line_number, str(e))
            continue
        key = (t, group, player)
        if key in samples:
            *prev, first_line = samples[key]
            if np.array_equal(prev, xy, equal_nan=True):
                report.warn(line_number, f"duplicate of line {first_line}")
                continue
            raise FormatError(
                f"conflicting coordinates for t_ms={format_number(t)}, group {group!r}, "
                f"player {player!r} (first given on line {first_line})",
                line_number,
            )
        samples[key] = (*xy, line_number)

    by_group: dict[str, list] = {}
    for (t, group, player), (x, y, _) in samples.items():
        by_group.setdefault(group, []).append((t, player, x, y))

    result = {}
    for group in sorted(by_group):
        entries = by_group[group]
        times = sorted({e[0] for e in entries})
        players = sorted({e[1] for e in entries})
        t_index = {t: i for i, t in enumerate(times)}
        p_index = {p: k for k, p in enumerate(players)}
        coords = np.full((len(times), 2 * len(players)), np.nan)
        for t, player, x, y in entries:
            i, k = t_index[t], p_index[player]
            coords[i, 2 * k] = x
            coords[i, 2 * k + 1] = y
        result[group] = TrackingData(coords, _framerate_from_ms(times), players)
        report.time_base[group] = tuple(times)
    return result, report


def flatten_long(
    groups: Mapping[str, TrackingData], time_base: Mapping[str, tuple[float, ...]]
) -> list[tuple[float, str, str, float, float]]:
    """Sorted ``(t_ms, group_id, player_id, x, y)`` tuples of all non-missing samples."""
    out = []
    for group, td in groups.items():
        times = time_base[group]
        if len(times) != td.n_frames:
            raise ValueError(f"time base of group {group!r} does not match its frame count")
        for k, pid in enumerate(td.player_ids):
            xs, ys = td.coords[:, 2 * k], td.coords[:, 2 * k + 1]
            for t, x, y in zip(times, xs, ys):
                if not np.isnan(x):
                    out.append((t, group, pid, float(x), float(y)))
    out.sort()
    return out


def _dat_chunk(chunk: str) -> tuple[str, str, float, float]:
    parts = chunk.split(",")
    if len(parts) != 4:
        raise FormatError(f"player chunk needs 4 fields, got {len(parts)}")
    team, pid, xs, ys = parts
    if team not in ("0", "1"):
        raise FormatError(f"unknown team code {team[:10]!r}")
    if not pid:
        raise FormatError("empty player id")
    return team, pid, number(xs), number(ys)


def _dat_ball(chunk: str) -> tuple[float, float]:
    parts = chunk.split(",")
    if len(parts) != 2:
        raise FormatError(f"ball chunk needs 2 fields, got {len(parts)}")
    return number(parts[0]), number(parts[1])


def parse_tracking_dat(source: Source) -> tuple[TrackingData, TrackingData, TrackingData, ParseReport]:
    """Parse frame lines ``<frame_no>:<team>,<pid>,<x>,<y>;...;:<x>,<y>:``.

    Team 0 is home, team 1 is away; coordinates are centimeters and are kept
    as such. Players appear in order of first appearance and are missing on
    lines where they are absent. The framerate is 25 divided by the median
    spacing of frame numbers. Malformed player chunks are dropped with a
    warning; structurally broken lines are skipped.

    Returns
    -------
    home, away, ball, report
    """
    report = ParseReport()
    frames: list[int] = []
    home_rows: list[dict] = []
    away_rows: list[dict] = []
    balls: list[tuple[float, float]] = []
    home_ids: dict[str, None] = {}
    away_ids: dict[str, None] = {}

    for line_number, line in iter_lines(source):
        if line == "":
            continue
        report.rows_read += 1
        parts = line.split(":")
        if len(parts) != 4 or parts[3] != "":
            report.skip(line_number, "expected '<frame>:<players>:<ball>:'")
            continue
        try:
            frame_no = integer(parts[0])
        except FormatError as e:
            report.skip(line_number, str(e))
            continue
        if frames and frame_no <= frames[-1]:
            raise FormatError(f"frame number {frame_no} does not increase (previous {frames[-1]})", line_number)

        home, away = {}, {}
        for chunk in parts[1].split(";"):
            if chunk == "":
                continue
            try:
                team, pid, x, y = _dat_chunk(chunk)
            except FormatError as e:
                report.warn(line_number, f"chunk {chunk[:40]!r} dropped: {e}")
                continue
            target, ids = (home, home_ids) if team == "0" else (away, away_ids)
            if pid in target:
                report.warn(line_number, f"player {pid!r} listed twice, later chunk dropped")
                continue
            target[pid] = (x, y)
            ids.setdefault(pid)

        ball = (np.nan, np.nan)
        if parts[2] != "":
            try:
                ball = _dat_ball(parts[2])
            except FormatError as e:
                report.warn(line_number, f"ball chunk {parts[2][:40]!r} dropped: {e}")

        frames.append(frame_no)
        home_rows.append(home)
        away_rows.append(away)
        balls.append(ball)

    if len(frames) >= 2:
        framerate = DAT_FRAMERATE / float(np.median(np.diff(frames)))
    else:
        framerate = DAT_FRAMERATE

    def assemble(rows: list[dict], ids: dict) -> TrackingData:
        order = list(ids)
        coords = np.full((len(rows), 2 * len(order)), np.nan)
        for i, row in enumerate(rows):
            for k, pid in enumerate(order):
                if pid in row:
                    coords[i, 2 * k : 2 * k + 2] = row[pid]
        return TrackingData(coords, framerate, order)

    ball_td = TrackingData(np.array(balls, dtype=float).reshape(len(balls), 2), framerate, ["ball"])
    return assemble(home_rows, home_ids), assemble(away_rows, away_ids), ball_td, report


def write_tracking_wide_csv(td: TrackingData) -> bytes:
    """Serialize to the wide CSV layout.

    Frames are numbered from 0 and ``t_ms = 1000 * frame / framerate``, written
    as an integer when exact and as the shortest round-tripping decimal
    otherwise. Missing samples become empty cells.
    """
    out = io.StringIO()
    header = ["frame", "t_ms"]
    for pid in td.player_ids:
        header += [f"{pid}_x", f"{pid}_y"]
    out.write(",".join(header) + "\n")
    for t, row in enumerate(td.coords):
        cells = [str(t), format_number(1000.0 * t / td.framerate)]
        cells += ["" if np.isnan(v) else format_number(v) for v in row]
        out.write(",".join(cells) + "\n")
    return out.getvalue().encode("utf-8")


def read_tracking(source: Source, fmt: str) -> tuple[dict[str, TrackingData], ParseReport]:
    """Parse any tracking format into named TrackingData objects.

    ``fmt`` is one of ``wide_csv`` (single object named ``tracking``),
    ``long_csv`` (one object per group) or ``dat`` (``home``, ``away``,
    ``ball``).
    """
    if fmt == "wide_csv":
        td, report = parse_tracking_wide_csv(source)
        return {"tracking": td}, report
    if fmt == "long_csv":
        return parse_tracking_long_csv(source)
    if fmt == "dat":
        home, away, ball, report = parse_tracking_dat(source)
        return {"home": home, "away": away, "ball": ball}, report
    raise ValueError(f"unknown tracking format {fmt!r}")
