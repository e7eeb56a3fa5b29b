"""Config-driven load -> filter -> fit -> query -> output pipeline.

Configs are flat ``section.key = value`` lines; ``#`` starts a comment.
Example::

    input.kind = sample
    input.team = home
    filter.order = 3
    filter.cutoff_hz = 1.0
    model.name = metabolic_power
    output.kind = summary
"""

from __future__ import annotations

import io
import os
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from tracklight import datasets
from tracklight.core.pitch import Pitch
from tracklight.core.property import PlayerProperty
from tracklight.core.xy import TrackingData
from tracklight.io._cells import format_number
from tracklight.io.tracking import read_tracking, write_tracking_wide_csv
from tracklight.models import (
    AccelerationModel,
    ApproximateEntropyModel,
    CentroidModel,
    DistanceModel,
    KineticsParams,
    MetabolicPowerModel,
    VelocityModel,
)
from tracklight.transforms.filter import FilterSpec, butterworth_lowpass
from tracklight.vis import render_trajectories


class ConfigError(ValueError):
    """Invalid pipeline configuration; ``key`` names the offending field."""

    def __init__(self, key: str, message: str):
        self.key = key
        super().__init__(f"{key}: {message}")


INPUT_KINDS = ("sample", "wide_csv", "long_csv", "dat", "dataset")
OUTPUT_KINDS = ("csv", "svg", "summary")
TEAMS = ("home", "away", "ball")

# model name -> (available queries, default query)
QUERIES = {
    "distance": (("cumulative_distance", "frame_distance"), "cumulative_distance"),
    "velocity": (("velocity",), "velocity"),
    "acceleration": (("acceleration",), "acceleration"),
    "metabolic_power": (("cumulative_metabolic_power", "metabolic_power"), "cumulative_metabolic_power"),
    "centroid": (("stretch_index", "centroid", "centroid_distance"), "stretch_index"),
    "approximate_entropy": (("approximate_entropy",), "approximate_entropy"),
}
APEN_SIGNALS = ("velocity", "acceleration", "x", "y")

KNOWN_KEYS = {
    "input.kind", "input.path", "input.team", "input.other_team", "input.group", "input.pitch",
    "input.registry", "input.dataset_id", "input.segment_id",
    "filter.order", "filter.cutoff_hz",
    "model.name", "model.query", "model.terrain_factor", "model.m", "model.r", "model.signal",
    "output.kind", "output.path",
}


def read_config_text(text: str) -> dict[str, str]:
    values: dict[str, str] = {}
    for n, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not sep or "." not in key:
            raise ConfigError(f"line {n}", "expected 'section.key = value'")
        if key not in KNOWN_KEYS:
            raise ConfigError(key, "unknown setting")
        if key in values:
            raise ConfigError(key, f"set twice (line {n})")
        values[key] = value
    return values


@dataclass(frozen=True)
class PipelineConfig:
    input_kind: str
    input_path: Path | None = None
    team: str = "home"
    other_team: str | None = None
    group: str | None = None
    pitch: Pitch | None = None
    registry: Path | None = None
    dataset_id: str | None = None
    segment_id: str | None = None
    filter: FilterSpec | None = None
    model: str = "metabolic_power"
    query: str = "cumulative_metabolic_power"
    params: dict = field(default_factory=dict)
    output_kind: str = "summary"
    output_path: Path | None = None


def _choice(values: dict, key: str, options, default=None) -> str:
    value = values.get(key, default)
    if value is None:
        raise ConfigError(key, "required")
    if value not in options:
        raise ConfigError(key, f"must be one of {', '.join(options)}, got {value!r}")
    return value


def _float(values: dict, key: str, default=None) -> float | None:
    if key not in values:
        return default
    try:
        v = float(values[key])
    except ValueError:
        raise ConfigError(key, f"not a number: {values[key]!r}") from None
    if not np.isfinite(v):
        raise ConfigError(key, "must be finite")
    return v


def _int(values: dict, key: str, default=None) -> int | None:
    if key not in values:
        return default
    try:
        return int(values[key])
    except ValueError:
        raise ConfigError(key, f"not an integer: {values[key]!r}") from None


def _pitch(text: str) -> Pitch:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 6:
        raise ConfigError("input.pitch", "expected 'xmin,xmax,ymin,ymax,unit,sport'")
    try:
        return Pitch((float(parts[0]), float(parts[1])), (float(parts[2]), float(parts[3])), unit=parts[4], sport=parts[5])
    except ValueError as e:
        raise ConfigError("input.pitch", str(e)) from None


def parse_config(text: str, base_dir: Path | None = None) -> PipelineConfig:
    """Validate config text. Relative paths resolve against ``base_dir``."""
    values = read_config_text(text)
    base_dir = base_dir or Path.cwd()

    def path(key: str, required: bool) -> Path | None:
        if key not in values:
            if required:
                raise ConfigError(key, "required")
            return None
        p = Path(values[key])
        return p if p.is_absolute() else base_dir / p

    kind = _choice(values, "input.kind", INPUT_KINDS)
    cfg: dict = {"input_kind": kind}
    if kind in ("wide_csv", "long_csv", "dat"):
        cfg["input_path"] = path("input.path", True)
        if not cfg["input_path"].is_file():
            raise ConfigError("input.path", f"no such file: {cfg['input_path']}")
    if kind == "dataset":
        cfg["registry"] = path("input.registry", True)
        for key in ("input.dataset_id", "input.segment_id"):
            if not values.get(key):
                raise ConfigError(key, "required")
        cfg["dataset_id"] = values["input.dataset_id"]
        cfg["segment_id"] = values["input.segment_id"]
    if "input.team" in values:
        cfg["team"] = _choice(values, "input.team", TEAMS)
    if "input.other_team" in values:
        cfg["other_team"] = _choice(values, "input.other_team", TEAMS)
    cfg["group"] = values.get("input.group")
    if "input.pitch" in values:
        cfg["pitch"] = _pitch(values["input.pitch"])

    if any(k.startswith("filter.") for k in values):
        order = _int(values, "filter.order", 3)
        if order < 1:
            raise ConfigError("filter.order", "must be at least 1")
        cutoff = _float(values, "filter.cutoff_hz", 1.0)
        if not cutoff > 0:
            raise ConfigError("filter.cutoff_hz", "must be positive")
        cfg["filter"] = FilterSpec(order, cutoff)

    model = _choice(values, "model.name", tuple(QUERIES))
    queries, default_query = QUERIES[model]
    cfg["model"] = model
    cfg["query"] = _choice(values, "model.query", queries, default_query)
    params: dict = {}
    if model == "metabolic_power":
        tf = _float(values, "model.terrain_factor", 1.0)
        if not tf > 0:
            raise ConfigError("model.terrain_factor", "must be positive")
        params["terrain_factor"] = tf
    if model == "approximate_entropy":
        m = _int(values, "model.m", 2)
        if m < 1:
            raise ConfigError("model.m", "must be at least 1")
        r = _float(values, "model.r")
        if r is not None and not r > 0:
            raise ConfigError("model.r", "must be positive")
        params.update(m=m, r=r, signal=_choice(values, "model.signal", APEN_SIGNALS, "velocity"))
    if cfg["query"] == "centroid_distance" and "other_team" not in cfg:
        raise ConfigError("input.other_team", "required for centroid_distance")
    cfg["params"] = params

    cfg["output_kind"] = _choice(values, "output.kind", OUTPUT_KINDS, "summary")
    if cfg["output_kind"] != "summary":
        cfg["output_path"] = path("output.path", True)
        if not cfg["output_path"].parent.is_dir():
            raise ConfigError("output.path", f"directory does not exist: {cfg['output_path'].parent}")
    return PipelineConfig(**cfg)


def load_config(path: str | os.PathLike) -> PipelineConfig:
    path = Path(path)
    return parse_config(path.read_text(encoding="utf-8"), path.parent)


def _bounding_pitch(td: TrackingData) -> Pitch:
    if np.isnan(td.coords).all():
        return Pitch((0.0, 1.0), (0.0, 1.0))
    x0, x1 = np.nanmin(td.x), np.nanmax(td.x)
    y0, y1 = np.nanmin(td.y), np.nanmax(td.y)
    return Pitch((x0, max(x1, x0 + 1e-6)), (y0, max(y1, y0 + 1e-6)))


def _select(objects: dict[str, TrackingData], cfg: PipelineConfig, which: str | None):
    if cfg.input_kind == "wide_csv":
        return objects["tracking"]
    if "home" in objects:
        return objects[which]
    if cfg.group is not None:
        if cfg.group not in objects:
            raise ConfigError("input.group", f"no group {cfg.group!r} in input")
        return objects[cfg.group]
    if len(objects) != 1:
        raise ConfigError("input.group", f"input has groups {', '.join(objects)}; choose one")
    return next(iter(objects.values()))


def load_input(cfg: PipelineConfig) -> tuple[TrackingData, TrackingData | None, Pitch]:
    """Return the selected tracking object, the optional second team and the pitch."""
    pitch = cfg.pitch
    if cfg.input_kind == "sample":
        home, away, ball, sample_pitch = datasets.get_dataset_sample()
        objects = {"home": home, "away": away, "ball": ball}
        pitch = pitch or sample_pitch
    elif cfg.input_kind == "dataset":
        entry = datasets.find_entry(datasets.load_registry(cfg.registry), cfg.dataset_id)
        objects, _ = datasets.load_segment(entry, cfg.segment_id)
        pitch = pitch or entry.pitch
    else:
        objects, _ = read_tracking(cfg.input_path, cfg.input_kind)
    td = _select(objects, cfg, cfg.team)
    other = _select(objects, cfg, cfg.other_team) if cfg.other_team else None
    return td, other, pitch or _bounding_pitch(td)


def _signal(td: TrackingData, signal: str) -> PlayerProperty:
    if signal == "velocity":
        return VelocityModel().fit(td).velocity()
    if signal == "acceleration":
        return AccelerationModel().fit(td).acceleration()
    values = td.x if signal == "x" else td.y
    return PlayerProperty(values, signal, "", td.framerate, td.player_ids)


def run_model(cfg: PipelineConfig, td: TrackingData, other: TrackingData | None = None):
    """Fit the configured model and return the configured query's result."""
    if cfg.model == "distance":
        model = DistanceModel().fit(td)
    elif cfg.model == "velocity":
        model = VelocityModel().fit(td)
    elif cfg.model == "acceleration":
        model = AccelerationModel().fit(td)
    elif cfg.model == "metabolic_power":
        model = MetabolicPowerModel().fit(td, KineticsParams(terrain_factor=cfg.params["terrain_factor"]))
    elif cfg.model == "centroid":
        model = CentroidModel().fit(td)
        if cfg.query == "centroid_distance":
            return model.centroid_distance(CentroidModel().fit(other))
    else:
        prop = _signal(td, cfg.params["signal"])
        model = ApproximateEntropyModel().fit(prop, cfg.params["m"], cfg.params["r"])
    return getattr(model, cfg.query)()


def _num(v: float, digits: int | None = None) -> str:
    if np.isnan(v):
        return "NA"
    return f"{v:.{digits}f}" if digits is not None else format_number(v)


def summarize(cfg: PipelineConfig, result, td: TrackingData) -> str:
    """One line per player: ``<player_id> <value>`` with three decimals.

    Cumulative queries report the final frame, per-frame queries the mean
    over non-missing frames.
    """
    lines = []
    if isinstance(result, TrackingData):
        for k, pid in enumerate(result.player_ids):
            xy = result.player(k)
            mx, my = (np.nanmean(xy[:, i]) if (~np.isnan(xy[:, i])).any() else np.nan for i in (0, 1))
            lines.append(f"{pid} {_num(mx, 3)} {_num(my, 3)}")
    elif isinstance(result, PlayerProperty):
        for k, pid in enumerate(result.player_ids):
            column = result.values[:, k]
            if cfg.query.startswith("cumulative_"):
                value = column[-1] if len(column) else np.nan
            else:
                value = np.nanmean(column) if (~np.isnan(column)).any() else np.nan
            lines.append(f"{pid} {_num(value, 3)}")
    else:
        for pid, value in zip(td.player_ids, result):
            lines.append(f"{pid} {_num(value, 3)}")
    return "".join(line + "\n" for line in lines)


def to_csv(result, td: TrackingData) -> bytes:
    if isinstance(result, TrackingData):
        return write_tracking_wide_csv(result)
    out = io.StringIO()
    if isinstance(result, PlayerProperty):
        out.write(",".join(["frame", *result.player_ids]) + "\n")
        for t, row in enumerate(result.values):
            out.write(",".join([str(t), *("" if np.isnan(v) else format_number(v) for v in row)]) + "\n")
    else:
        out.write("player_id,approximate_entropy\n")
        for pid, value in zip(td.player_ids, result):
            out.write(f"{pid},{'' if np.isnan(value) else format_number(value)}\n")
    return out.getvalue().encode("utf-8")


def run_pipeline(cfg: PipelineConfig) -> str:
    """Execute the pipeline. Returns the text meant for standard output
    (the summary, or an empty string when writing a file)."""
    td, other, pitch = load_input(cfg)
    if cfg.filter is not None:
        try:
            cfg.filter.check(td.framerate)
        except ValueError as e:
            raise ConfigError("filter.cutoff_hz", str(e)) from None
        td = butterworth_lowpass(td, cfg.filter)
        if other is not None:
            other = butterworth_lowpass(other, cfg.filter)
    result = run_model(cfg, td, other)

    if cfg.output_kind == "summary":
        return summarize(cfg, result, td)
    if cfg.output_kind == "csv":
        cfg.output_path.write_bytes(to_csv(result, td))
    else:
        track = result if isinstance(result, TrackingData) else td
        cfg.output_path.write_text(render_trajectories(pitch, track, (0, track.n_frames)), encoding="utf-8")
    return ""
