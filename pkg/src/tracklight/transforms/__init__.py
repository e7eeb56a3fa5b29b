from tracklight.transforms.filter import (
    FilterSpec,
    butter_lowpass_sos,
    butterworth_lowpass,
    filter_series,
    padding_length,
)
from tracklight.transforms.spatial import reflect, rescale_to_pitch, rotate, scale, translate

__all__ = [
    "FilterSpec",
    "butter_lowpass_sos",
    "butterworth_lowpass",
    "filter_series",
    "padding_length",
    "reflect",
    "rescale_to_pitch",
    "rotate",
    "scale",
    "translate",
]
