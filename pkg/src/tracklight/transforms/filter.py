"""Zero-phase Butterworth low-pass filtering of tracking data."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.signal import sosfiltfilt

from tracklight.core.xy import TrackingData


@dataclass(frozen=True)
class FilterSpec:
    order: int = 3
    cutoff_hz: float = 1.0

    def __post_init__(self):
        if int(self.order) != self.order or self.order < 1:
            raise ValueError(f"filter order must be a positive integer, got {self.order}")
        if not self.cutoff_hz > 0:
            raise ValueError(f"cutoff_hz must be positive, got {self.cutoff_hz}")

    def check(self, framerate: float) -> None:
        nyquist = framerate / 2
        if self.cutoff_hz >= nyquist:
            raise ValueError(
                f"cutoff_hz={self.cutoff_hz} must be below the Nyquist frequency {nyquist} Hz"
            )


def padding_length(order: int) -> int:
    return 3 * (order + 1)


def butter_lowpass_sos(order: int, cutoff_hz: float, fs: float) -> np.ndarray:
    """Digital Butterworth low-pass as an (n_sections, 6) array of biquads.

    Rows are ``[b0, b1, b2, 1, a1, a2]``. The design places the analog
    prototype poles on the unit circle, scales them to the prewarped cutoff
    and maps them through the bilinear transform; all zeros end up at z = -1.
    """
    if order < 1:
        raise ValueError(f"filter order must be at least 1, got {order}")
    if not 0 < cutoff_hz < fs / 2:
        raise ValueError(f"cutoff must lie in (0, {fs / 2}), got {cutoff_hz}")

    k = np.arange(order)
    prototype = np.exp(1j * np.pi * (2 * k + order + 1) / (2 * order))
    warped = 2 * fs * np.tan(np.pi * cutoff_hz / fs)
    analog = warped * prototype

    fs2 = 2 * fs
    digital = (fs2 + analog) / (fs2 - analog)
    gain = np.real(warped**order / np.prod(fs2 - analog))

    sections = []
    for p in digital:
        if abs(p.imag) < 1e-14 * max(1.0, abs(p)):
            sections.append([1.0, 1.0, 0.0, 1.0, -p.real, 0.0])
        elif p.imag > 0:
            sections.append([1.0, 2.0, 1.0, 1.0, -2 * p.real, abs(p) ** 2])
    sos = np.array(sections, dtype=float)
    # poles nearest the unit circle go last
    radius = np.sqrt(np.abs(sos[:, 5])) + np.where(sos[:, 5] == 0, np.abs(sos[:, 4]), 0)
    sos = sos[np.argsort(radius, kind="stable")]
    sos[0, :3] *= gain
    return sos


def _forward_backward(sos: np.ndarray, x: np.ndarray, padlen: int) -> np.ndarray:
    return sosfiltfilt(sos, x, padtype="odd", padlen=padlen)


def filter_series(x: np.ndarray, sos: np.ndarray, padlen: int) -> np.ndarray:
    """Filter one column, run by run over its non-missing stretches.

    Every stretch is filtered forward-backward and, separately, on its time
    reversal; the two are averaged so the output is exactly symmetric under
    time reversal. Stretches not longer than ``padlen`` become missing.
    """
    x = np.asarray(x, dtype=float)
    out = np.full_like(x, np.nan)
    valid = ~np.isnan(x)
    edges = np.flatnonzero(np.diff(np.concatenate(([0], valid.view(np.int8), [0]))))
    for start, stop in zip(edges[0::2], edges[1::2]):
        if stop - start <= padlen:
            continue
        seg = x[start:stop]
        forward = _forward_backward(sos, seg, padlen)
        backward = _forward_backward(sos, seg[::-1], padlen)[::-1]
        out[start:stop] = 0.5 * (forward + backward)
    return out


def butterworth_lowpass(td: TrackingData, spec: FilterSpec | None = None) -> TrackingData:
    """Zero-phase Butterworth low-pass of every coordinate column.

    Parameters
    ----------
    td: TrackingData
    spec: FilterSpec, optional
        Order and cutoff; defaults to order 3 at 1 Hz.

    Returns
    -------
    TrackingData
        Filtered copy. Gaps stay missing and non-missing stretches of at most
        ``3 * (order + 1)`` samples are set to missing.
    """
    spec = spec or FilterSpec()
    spec.check(td.framerate)
    sos = butter_lowpass_sos(spec.order, spec.cutoff_hz, td.framerate)
    padlen = padding_length(spec.order)
    coords = np.empty_like(td.coords)
    for j in range(td.coords.shape[1]):
        coords[:, j] = filter_series(td.coords[:, j], sos, padlen)
    return td.replace(coords)
