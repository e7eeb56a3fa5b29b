"""Affine transforms of tracking coordinates. Missing samples stay missing."""

from __future__ import annotations

import math

import numpy as np

from tracklight.core.pitch import Pitch
from tracklight.core.xy import TrackingData


def _apply(td: TrackingData, fn) -> TrackingData:
    x, y = fn(td.x, td.y)
    coords = np.empty_like(td.coords)
    coords[:, 0::2] = x
    coords[:, 1::2] = y
    return td.replace(coords)


def translate(td: TrackingData, dx: float, dy: float) -> TrackingData:
    return _apply(td, lambda x, y: (x + dx, y + dy))


def scale(td: TrackingData, fx: float, fy: float) -> TrackingData:
    return _apply(td, lambda x, y: (fx * x, fy * y))


def rotate(td: TrackingData, degrees: float) -> TrackingData:
    """Rotate counter-clockwise about the origin."""
    theta = math.radians(degrees)
    c, s = math.cos(theta), math.sin(theta)
    return _apply(td, lambda x, y: (c * x - s * y, s * x + c * y))


def reflect(td: TrackingData, axis: str) -> TrackingData:
    """Mirror across the x axis (negates y) or the y axis (negates x)."""
    if axis == "x":
        return _apply(td, lambda x, y: (x, -y))
    if axis == "y":
        return _apply(td, lambda x, y: (-x, y))
    raise ValueError(f"axis must be 'x' or 'y', got {axis!r}")


def rescale_to_pitch(td: TrackingData, source: Pitch, target: Pitch) -> TrackingData:
    """Map ``source`` pitch coordinates linearly onto the ``target`` pitch."""
    (sx0, sx1), (sy0, sy1) = source.xlim, source.ylim
    (tx0, tx1), (ty0, ty1) = target.xlim, target.ylim
    if sx1 == sx0 or sy1 == sy0:
        raise ValueError("source pitch has zero width along an axis")
    fx = (tx1 - tx0) / (sx1 - sx0)
    fy = (ty1 - ty0) / (sy1 - sy0)
    return _apply(td, lambda x, y: (tx0 + (x - sx0) * fx, ty0 + (y - sy0) * fy))
