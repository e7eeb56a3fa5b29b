"""Deterministic SVG rendering of pitches, player positions and trajectories.

Output is plain SVG 1.1 text. All numbers are printed with at most six
decimals (trailing zeros trimmed), elements are emitted in a fixed order and
nothing time-dependent is written, so equal inputs give identical bytes.
Pitch coordinates are drawn with the y axis pointing up.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence, Union
from xml.sax.saxutils import quoteattr

import numpy as np

from tracklight.core.pitch import Pitch, Sport
from tracklight.core.xy import TrackingData

_HEX = re.compile(r"#[0-9a-fA-F]{6}")

Teams = Union[TrackingData, Sequence[TrackingData]]


@dataclass(frozen=True)
class RenderStyle:
    """Drawing parameters; sizes are in pitch coordinate units.

    The defaults are an arbitrary but fixed choice.
    """

    point_radius: float = 0.8
    stroke_width: float = 0.15
    team_colors: tuple[str, ...] = ("#d62728", "#1f77b4", "#ff7f0e", "#2ca02c")
    background: str = "#ffffff"
    line_color: str = "#555555"

    def __post_init__(self):
        if not self.point_radius > 0:
            raise ValueError(f"point_radius must be positive, got {self.point_radius}")
        if not self.stroke_width > 0:
            raise ValueError(f"stroke_width must be positive, got {self.stroke_width}")
        colors = tuple(self.team_colors)
        if not colors:
            raise ValueError("team_colors must not be empty")
        for c in (*colors, self.background, self.line_color):
            if not isinstance(c, str) or not _HEX.fullmatch(c):
                raise ValueError(f"colors must look like '#rrggbb', got {c!r}")
        object.__setattr__(self, "team_colors", colors)


def fmt(value: float) -> str:
    text = f"{value:.6f}".rstrip("0").rstrip(".")
    return "0" if text in ("-0", "") else text


def view_box(pitch: Pitch) -> tuple[float, float, float, float]:
    """``(x, y, width, height)`` with a margin of 5 % of each axis' extent."""
    (x0, x1), (y0, y1) = pitch.xlim, pitch.ylim
    mx, my = 0.05 * (x1 - x0), 0.05 * (y1 - y0)
    return x0 - mx, y0 - my, (x1 - x0) + 2 * mx, (y1 - y0) + 2 * my


def _football(pitch: Pitch) -> list[str]:
    (x0, x1), (y0, y1) = pitch.xlim, pitch.ylim
    sx, sy = (x1 - x0) / 105.0, (y1 - y0) / 68.0
    cx, cy = (x0 + x1) / 2, (y0 + y1) / 2
    box_w, box_h = 16.5 * sx, 40.32 * sy
    return [
        f'<line class="halfway-line" x1="{fmt(cx)}" y1="{fmt(y0)}" x2="{fmt(cx)}" y2="{fmt(y1)}"/>',
        f'<ellipse class="center-circle" cx="{fmt(cx)}" cy="{fmt(cy)}" rx="{fmt(9.15 * sx)}" ry="{fmt(9.15 * sy)}"/>',
        f'<rect class="penalty-area" x="{fmt(x0)}" y="{fmt(cy - box_h / 2)}" width="{fmt(box_w)}" height="{fmt(box_h)}"/>',
        f'<rect class="penalty-area" x="{fmt(x1 - box_w)}" y="{fmt(cy - box_h / 2)}" width="{fmt(box_w)}" height="{fmt(box_h)}"/>',
    ]


def _handball(pitch: Pitch) -> list[str]:
    (x0, x1), (y0, y1) = pitch.xlim, pitch.ylim
    sx, sy = (x1 - x0) / 40.0, (y1 - y0) / 20.0
    cx, cy = (x0 + x1) / 2, (y0 + y1) / 2
    rx, ry = 6.0 * sx, 6.0 * sy
    post = 1.5 * sy
    out = [f'<line class="center-line" x1="{fmt(cx)}" y1="{fmt(y0)}" x2="{fmt(cx)}" y2="{fmt(y1)}"/>']
    for goal_x, inward, sweep in ((x0, 1, 0), (x1, -1, 1)):
        line_x = goal_x + inward * rx
        d = (
            f"M {fmt(goal_x)} {fmt(cy + post + ry)} "
            f"A {fmt(rx)} {fmt(ry)} 0 0 {sweep} {fmt(line_x)} {fmt(cy + post)} "
            f"L {fmt(line_x)} {fmt(cy - post)} "
            f"A {fmt(rx)} {fmt(ry)} 0 0 {sweep} {fmt(goal_x)} {fmt(cy - post - ry)}"
        )
        out.append(f'<path class="goal-area" d="{d}"/>')
    return out


def _markings(pitch: Pitch) -> list[str]:
    (x0, x1), (y0, y1) = pitch.xlim, pitch.ylim
    out = [f'<rect class="outline" x="{fmt(x0)}" y="{fmt(y0)}" width="{fmt(x1 - x0)}" height="{fmt(y1 - y0)}"/>']
    if pitch.sport is Sport.FOOTBALL:
        out += _football(pitch)
    elif pitch.sport is Sport.HANDBALL:
        out += _handball(pitch)
    return out


def _document(pitch: Pitch, style: RenderStyle, layers: list[str]) -> str:
    vx, vy, vw, vh = view_box(pitch)
    flip = fmt(pitch.ylim[0] + pitch.ylim[1])
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="{fmt(vx)} {fmt(vy)} {fmt(vw)} {fmt(vh)}">',
        f'<rect class="background" x="{fmt(vx)}" y="{fmt(vy)}" width="{fmt(vw)}" height="{fmt(vh)}" fill="{style.background}"/>',
        f'<g transform="matrix(1 0 0 -1 0 {flip})">',
        f'<g class="pitch" fill="none" stroke="{style.line_color}" stroke-width="{fmt(style.stroke_width)}">',
        *_markings(pitch),
        "</g>",
        *layers,
        "</g>",
        "</svg>",
    ]
    return "\n".join(parts) + "\n"


def _teams(td: Teams) -> list[TrackingData]:
    return [td] if isinstance(td, TrackingData) else list(td)


def render_pitch(pitch: Pitch, style: RenderStyle | None = None) -> str:
    """SVG of the bare pitch with its sport's markings."""
    return _document(pitch, style or RenderStyle(), [])


def render_positions(pitch: Pitch, td: Teams, frame: int, style: RenderStyle | None = None) -> str:
    """Players at one frame as filled circles on the pitch.

    ``td`` may be a single TrackingData or a sequence (one per team); team
    ``i`` is drawn in ``style.team_colors[i]`` (cycling).
    """
    style = style or RenderStyle()
    teams = _teams(td)
    layers = []
    for i, team in enumerate(teams):
        if not 0 <= frame < team.n_frames:
            raise IndexError(f"frame {frame} out of range for {team.n_frames} frames")
        color = style.team_colors[i % len(style.team_colors)]
        layers.append(f'<g class="positions" fill="{color}" stroke="none">')
        for pid, (x, y) in zip(team.player_ids, team.frame(frame)):
            if np.isnan(x):
                continue
            layers.append(
                f'<circle data-player={quoteattr(pid)} cx="{fmt(x)}" cy="{fmt(y)}" r="{fmt(style.point_radius)}"/>'
            )
        layers.append("</g>")
    return _document(pitch, style, layers)


def render_trajectories(
    pitch: Pitch, td: Teams, frame_range: tuple[int, int], style: RenderStyle | None = None
) -> str:
    """Player paths over frames ``[t0, t1)``; a missing sample splits a path."""
    style = style or RenderStyle()
    t0, t1 = frame_range
    teams = _teams(td)
    layers = []
    for i, team in enumerate(teams):
        if not 0 <= t0 < t1 <= team.n_frames:
            raise IndexError(f"invalid frame range ({t0}, {t1}) for {team.n_frames} frames")
        color = style.team_colors[i % len(style.team_colors)]
        layers.append(
            f'<g class="trajectories" fill="none" stroke="{color}" stroke-width="{fmt(style.stroke_width)}" '
            'stroke-linejoin="round" stroke-linecap="round">'
        )
        for k, pid in enumerate(team.player_ids):
            xy = team.player(k)[t0:t1]
            present = ~np.isnan(xy[:, 0])
            edges = np.flatnonzero(np.diff(np.concatenate(([0], present.view(np.int8), [0]))))
            for start, stop in zip(edges[0::2], edges[1::2]):
                points = " ".join(f"{fmt(x)},{fmt(y)}" for x, y in xy[start:stop])
                layers.append(f'<polyline data-player={quoteattr(pid)} points="{points}"/>')
        layers.append("</g>")
    return _document(pitch, style, layers)
