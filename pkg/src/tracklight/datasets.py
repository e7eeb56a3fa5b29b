"""Public dataset registry, download cache and the bundled sample.

A registry file lists one segment per line::

    dataset_id<TAB>segment_id<TAB>url<TAB>sha256<TAB>format<TAB>framerate<TAB>xmin,xmax,ymin,ymax,unit,sport

Lines starting with ``#`` and blank lines are ignored. Downloaded segments
are cached under ``<cache_dir>/<dataset_id>/<segment_id>`` and verified
against their SHA-256 digest on every access.
"""

from __future__ import annotations

import hashlib
import os
import re
import tempfile
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path
from types import MappingProxyType
from typing import Callable, Mapping

import requests
from filelock import FileLock

from tracklight.core.pitch import Pitch
from tracklight.core.xy import TrackingData
from tracklight.exceptions import FormatError, IntegrityError, TransferError
from tracklight.io._cells import number
from tracklight.io.report import ParseReport
from tracklight.io.tracking import parse_tracking_wide_csv, read_tracking

CACHE_ENV = "TRACKLIGHT_CACHE"
FORMATS = ("wide_csv", "long_csv", "dat")
MAX_REDIRECTS = 5

_SHA256 = re.compile(r"[0-9a-fA-F]{64}")

Transport = Callable[[str], bytes]


@dataclass(frozen=True)
class Segment:
    url: str
    sha256: str
    format: str


@dataclass(frozen=True)
class DatasetRegistryEntry:
    dataset_id: str
    segments: Mapping[str, Segment]
    pitch: Pitch
    framerate: float

    def __post_init__(self):
        if not self.dataset_id:
            raise ValueError("dataset_id must not be empty")
        if not self.framerate > 0:
            raise ValueError(f"framerate must be positive, got {self.framerate}")
        for sid, seg in self.segments.items():
            if not sid:
                raise ValueError("segment ids must not be empty")
            if not _SHA256.fullmatch(seg.sha256):
                raise ValueError(f"segment {sid!r}: sha256 must be 64 hex characters")
            if seg.format not in FORMATS:
                raise ValueError(f"segment {sid!r}: unknown format {seg.format!r}")
        object.__setattr__(self, "segments", MappingProxyType(dict(self.segments)))


def _pitch_field(cell: str) -> Pitch:
    parts = cell.split(",")
    if len(parts) != 6:
        raise FormatError("pitch field must be 'xmin,xmax,ymin,ymax,unit,sport'")
    xmin, xmax, ymin, ymax = (number(p) for p in parts[:4])
    unit, sport = parts[4], parts[5]
    return Pitch((xmin, xmax), (ymin, ymax), unit=unit, sport=sport)


def parse_registry(text: str) -> list[DatasetRegistryEntry]:
    """Parse registry text; see the module docstring for the layout.

    Consecutive or scattered lines sharing a dataset id form one entry and must
    agree on framerate and pitch. A repeated (dataset_id, segment_id) pair is
    an error.
    """
    drafts: dict[str, dict] = {}
    for line_number, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        cells = line.split("\t")
        if len(cells) != 7:
            raise FormatError(f"expected 7 tab-separated fields, found {len(cells)}", line_number)
        dataset_id, segment_id, url, sha, fmt, rate, pitch_cell = cells
        if not dataset_id or not segment_id or not url:
            raise FormatError("dataset_id, segment_id and url must not be empty", line_number)
        if not _SHA256.fullmatch(sha):
            raise FormatError(f"sha256 must be 64 hex characters, got {len(sha)}", line_number)
        if fmt not in FORMATS:
            raise FormatError(f"format must be one of {', '.join(FORMATS)}, got {fmt!r}", line_number)
        try:
            framerate = number(rate)
            pitch = _pitch_field(pitch_cell)
        except (FormatError, ValueError) as e:
            raise FormatError(str(e), line_number) from None
        if not framerate > 0:
            raise FormatError(f"framerate must be positive, got {rate}", line_number)

        draft = drafts.setdefault(
            dataset_id, {"segments": {}, "pitch": pitch, "framerate": framerate}
        )
        if segment_id in draft["segments"]:
            raise FormatError(f"duplicate entry {dataset_id}/{segment_id}", line_number)
        if draft["pitch"] != pitch or draft["framerate"] != framerate:
            raise FormatError(f"dataset {dataset_id!r} declared with conflicting pitch or framerate", line_number)
        draft["segments"][segment_id] = Segment(url, sha.lower(), fmt)

    return [
        DatasetRegistryEntry(did, d["segments"], d["pitch"], d["framerate"])
        for did, d in drafts.items()
    ]


def load_registry(path: str | os.PathLike) -> list[DatasetRegistryEntry]:
    try:
        text = Path(path).read_bytes().decode("utf-8")
    except UnicodeDecodeError:
        raise FormatError("registry is not valid UTF-8") from None
    return parse_registry(text)


def find_entry(entries, dataset_id: str) -> DatasetRegistryEntry:
    for entry in entries:
        if entry.dataset_id == dataset_id:
            return entry
    raise LookupError(f"dataset {dataset_id!r} is not in the registry")


def default_cache_dir() -> Path:
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "tracklight"


def sha256_file(path: Path) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as f:
        for chunk in iter(lambda: f.read(1 << 16), b""):
            h.update(chunk)
    return h.hexdigest()


def http_get(url: str) -> bytes:
    """Plain HTTP(S) GET following at most five redirects."""
    if not url.startswith(("http://", "https://")):
        raise TransferError(f"unsupported URL scheme: {url}")
    try:
        with requests.Session() as session:
            session.max_redirects = MAX_REDIRECTS
            response = session.get(url, timeout=60)
            response.raise_for_status()
            return response.content
    except requests.RequestException as e:
        raise TransferError(f"download of {url} failed: {e}") from e


def fetch_segment(
    entry: DatasetRegistryEntry,
    segment_id: str,
    cache_dir: str | os.PathLike | None = None,
    transport: Transport | None = None,
) -> Path:
    """Return the verified local path of a segment, downloading it if needed.

    A cached file whose digest matches is returned without any network
    access. Otherwise the file is downloaded through ``transport`` (defaults to
    :func:`http_get`) and verified before it is moved into place. Concurrent
    calls for the same segment are serialized with a lock file.

    Raises
    ------
    LookupError
        ``segment_id`` is not part of the entry.
    IntegrityError
        The downloaded bytes do not match the registered digest; any cached
        copy is removed.
    TransferError
        The download failed; the cache is left as it was.
    """
    try:
        segment = entry.segments[segment_id]
    except KeyError:
        raise LookupError(f"dataset {entry.dataset_id!r} has no segment {segment_id!r}") from None
    transport = transport or http_get
    folder = Path(cache_dir if cache_dir is not None else default_cache_dir()) / entry.dataset_id
    folder.mkdir(parents=True, exist_ok=True)
    target = folder / segment_id

    with FileLock(str(folder / f".{segment_id}.lock")):
        if target.is_file() and sha256_file(target) == segment.sha256:
            return target
        try:
            data = transport(segment.url)
        except TransferError:
            raise
        except Exception as e:
            raise TransferError(f"download of {segment.url} failed: {e}") from e
        digest = hashlib.sha256(data).hexdigest()
        if digest != segment.sha256:
            target.unlink(missing_ok=True)
            raise IntegrityError(
                f"{entry.dataset_id}/{segment_id}: expected sha256 {segment.sha256}, got {digest}"
            )
        fd, tmp = tempfile.mkstemp(dir=folder, prefix=f".{segment_id}.", suffix=".part")
        try:
            with os.fdopen(fd, "wb") as f:
                f.write(data)
            os.replace(tmp, target)
        except BaseException:
            Path(tmp).unlink(missing_ok=True)
            raise
    return target


def load_segment(
    entry: DatasetRegistryEntry,
    segment_id: str,
    cache_dir: str | os.PathLike | None = None,
    transport: Transport | None = None,
) -> tuple[dict[str, TrackingData], ParseReport]:
    """Fetch a segment and parse it with the format named in the registry."""
    path = fetch_segment(entry, segment_id, cache_dir, transport)
    return read_tracking(path, entry.segments[segment_id].format)


SAMPLE_PITCH = Pitch((0.0, 40.0), (0.0, 20.0), unit="meters", length=40.0, width=20.0, sport="handball")


@lru_cache(maxsize=1)
def _sample() -> tuple[TrackingData, TrackingData, TrackingData]:
    data = resources.files("tracklight") / "data"
    parts = []
    for name in ("home", "away", "ball"):
        td, _ = parse_tracking_wide_csv((data / f"sample_{name}.csv").read_bytes())
        parts.append(td)
    return tuple(parts)


def get_dataset_sample() -> tuple[TrackingData, TrackingData, TrackingData, Pitch]:
    """Bundled synthetic handball segment: home, away, ball and the pitch.

    Seven players per team, 1200 frames at 20 Hz on a 40 x 20 m pitch with
    coordinates in meters. Available offline; every call returns the same data.
    """
    home, away, ball = _sample()
    return home, away, ball, SAMPLE_PITCH
