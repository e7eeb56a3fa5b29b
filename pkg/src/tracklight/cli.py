"""Command line interface.

Subcommands::

    tracklight parse    --format dat --input match.dat --output match.csv
    tracklight pipeline --config pipeline.cfg
    tracklight plot     --format sample --mode positions --frame 0 --output pos.svg
    tracklight dataset  --registry registry.tsv --dataset-id eigd --segment-id 01

Results go to standard output, diagnostics to standard error. Exit codes:
0 success, 1 invalid input/config/arguments, 2 I/O error, 3 integrity error,
4 network error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from tracklight import datasets
from tracklight.core.pitch import Pitch
from tracklight.core.xy import TrackingData
from tracklight.exceptions import FormatError, IntegrityError, StateError, TransferError
from tracklight.io.tracking import read_tracking, write_tracking_wide_csv
from tracklight.pipeline import ConfigError, _bounding_pitch, load_config, run_pipeline
from tracklight.vis import render_positions, render_trajectories

CACHE_ENV = datasets.CACHE_ENV

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_IO = 2
EXIT_INTEGRITY = 3
EXIT_NETWORK = 4

TRACKING_FORMATS = ("wide_csv", "long_csv", "dat")


def _error(message: str) -> None:
    print(f"tracklight: {message}", file=sys.stderr)


def _exit_code(exc: BaseException) -> int:
    """Map an exception to the documented exit code."""
    if isinstance(exc, IntegrityError):
        return EXIT_INTEGRITY
    if isinstance(exc, TransferError):
        return EXIT_NETWORK
    if isinstance(exc, (FormatError, ConfigError, ValueError, IndexError, LookupError, StateError)):
        return EXIT_INVALID
    if isinstance(exc, OSError):
        return EXIT_IO
    raise exc


def _combined(objects: dict[str, TrackingData], fmt: str) -> TrackingData:
    if fmt == "wide_csv":
        return objects["tracking"]
    if len(objects) == 1:
        return next(iter(objects.values()))
    names = list(objects)
    prefixes = ["" if objects[n].player_ids == ("ball",) else f"{n}_" for n in names]
    return TrackingData.concat([objects[n] for n in names], prefixes)


def cmd_parse(args) -> int:
    objects, report = read_tracking(args.input, args.format)
    if args.group is not None:
        if args.group not in objects:
            raise LookupError(f"no group {args.group!r} in {args.input}")
        objects = {args.group: objects[args.group]}
    td = _combined(objects, args.format)
    Path(args.output).write_bytes(write_tracking_wide_csv(td))
    print(report.summary(), file=sys.stderr)
    for w in report.warnings:
        print(f"  line {w.line_number}: {w.message}", file=sys.stderr)
    return EXIT_OK


def _plot_input(args) -> tuple[list[TrackingData], Pitch]:
    if args.format == "sample":
        home, away, ball, pitch = datasets.get_dataset_sample()
        objects = {"home": home, "away": away, "ball": ball}
    else:
        if args.input is None:
            raise ValueError("--input is required unless --format sample")
        objects, _ = read_tracking(args.input, args.format)
        pitch = None
    if args.team != "all":
        if args.team not in objects:
            raise LookupError(f"no team or group {args.team!r} in input (have {', '.join(objects)})")
        objects = {args.team: objects[args.team]}
    teams = [td for td in objects.values() if td.n_players]
    if args.pitch:
        parts = args.pitch.split(",")
        if len(parts) != 6:
            raise ValueError("--pitch must be 'xmin,xmax,ymin,ymax,unit,sport'")
        pitch = Pitch((float(parts[0]), float(parts[1])), (float(parts[2]), float(parts[3])), unit=parts[4], sport=parts[5])
    if pitch is None:
        pitch = _bounding_pitch(TrackingData.concat(teams)) if teams else Pitch((0, 1), (0, 1))
    return teams, pitch


def cmd_plot(args) -> int:
    teams, pitch = _plot_input(args)
    output = Path(args.output)
    if not output.parent.is_dir():
        raise FileNotFoundError(f"output directory does not exist: {output.parent}")
    if args.mode == "positions":
        svg = render_positions(pitch, teams, args.frame)
    else:
        n = min(td.n_frames for td in teams) if teams else 0
        end = n if args.end is None else args.end
        svg = render_trajectories(pitch, teams, (args.start, end))
    output.write_text(svg, encoding="utf-8")
    return EXIT_OK


def cmd_pipeline(args) -> int:
    cfg = load_config(args.config)
    sys.stdout.write(run_pipeline(cfg))
    return EXIT_OK


def cmd_dataset(args) -> int:
    entry = datasets.find_entry(datasets.load_registry(args.registry), args.dataset_id)
    path = datasets.fetch_segment(entry, args.segment_id, args.cache_dir)
    print(path)
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    # usage errors share the exit code of other invalid input
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tracklight", description="Team sport tracking data toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", help="convert a tracking file to canonical wide CSV")
    p.add_argument("--format", required=True, choices=TRACKING_FORMATS)
    p.add_argument("--input", required=True)
    p.add_argument("--output", required=True)
    p.add_argument("--group", help="long_csv/dat: keep only this group or team")
    p.set_defaults(func=cmd_parse)

    p = sub.add_parser("pipeline", help="run a load/filter/model/output pipeline from a config file")
    p.add_argument("--config", required=True)
    p.set_defaults(func=cmd_pipeline)

    p = sub.add_parser("plot", help="render positions or trajectories as SVG")
    p.add_argument("--format", default="sample", choices=("sample", *TRACKING_FORMATS))
    p.add_argument("--input")
    p.add_argument("--mode", required=True, choices=("positions", "trajectories"))
    p.add_argument("--frame", type=int, default=0)
    p.add_argument("--start", type=int, default=0)
    p.add_argument("--end", type=int)
    p.add_argument("--team", default="all", help="team/group to draw, or 'all'")
    p.add_argument("--pitch", help="xmin,xmax,ymin,ymax,unit,sport")
    p.add_argument("--output", required=True)
    p.set_defaults(func=cmd_plot)

    p = sub.add_parser("dataset", help="fetch and verify a registered dataset segment")
    p.add_argument("--registry", required=True)
    p.add_argument("--dataset-id", required=True)
    p.add_argument("--segment-id", required=True)
    p.add_argument("--cache-dir", help=f"defaults to ${CACHE_ENV} or ~/.cache/tracklight")
    p.set_defaults(func=cmd_dataset)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except Exception as exc:  # noqa: BLE001 - mapped to exit codes
        code = _exit_code(exc)
        _error(str(exc))
        return code


if __name__ == "__main__":
    sys.exit(main())
