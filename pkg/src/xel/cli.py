"""Command-line interface.

Subcommands: validate, convert, flatten, discover, replay, serve. Every
failure exits non-zero after printing a single machine-parseable line to
stderr of the form ``error[CODE]: message``.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .discovery import GRANULARITIES, alpha_miner, build_traces
from .errors import InvalidLogError, XelError
from .flatten import export_csv
from .render import export_dot, json_bytes, net_to_json, route_to_json
from .replay import replay_case
from .validation import validate
from .xes import import_xes
from .xml_io import parse_xel, write_xel


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="xel", description="Event log toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p_validate = sub.add_parser("validate", help="check a log file and print a report")
    p_validate.add_argument("file")

    p_convert = sub.add_parser("convert", help="convert a foreign log to XEL")
    p_convert.add_argument("--from", dest="source_format", required=True, choices=["xes"])
    p_convert.add_argument("file")
    p_convert.add_argument("-o", "--output", required=True)

    p_flatten = sub.add_parser("flatten", help="export a flat CSV view")
    p_flatten.add_argument("file")
    p_flatten.add_argument("--granularity", choices=list(GRANULARITIES), default="activity")
    p_flatten.add_argument("-o", "--output", default=None)

    p_discover = sub.add_parser("discover", help="mine a Petri net from a log")
    p_discover.add_argument("file")
    p_discover.add_argument("--granularity", choices=list(GRANULARITIES), default="activity")
    p_discover.add_argument("--format", dest="out_format", choices=["dot", "json"], default="dot")
    p_discover.add_argument("-o", "--output", default=None)

    p_replay = sub.add_parser("replay", help="replay one case on the mined net")
    p_replay.add_argument("file")
    p_replay.add_argument("--case", required=True)
    p_replay.add_argument("--granularity", choices=list(GRANULARITIES), default="activity")

    p_serve = sub.add_parser("serve", help="serve the log over HTTP")
    p_serve.add_argument("file")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.add_argument("--ui", default=None, help="directory of viewer assets to serve at /")

    return parser


def _emit(data: bytes, output: str | None) -> None:
    if output is None:
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
    else:
        Path(output).write_bytes(data)


def _cmd_validate(args: argparse.Namespace) -> int:
    log = parse_xel(Path(args.file).read_bytes(), check=False)
    report = validate(log)
    for finding in report.errors:
        print(f"ERROR {finding.code}: {finding.message}")
    for finding in report.warnings:
        print(f"WARN  {finding.code}: {finding.message}")
    print(f"{len(report.errors)} error(s), {len(report.warnings)} warning(s)")
    if not report.ok:
        raise InvalidLogError(report)
    return 0


def _cmd_convert(args: argparse.Namespace) -> int:
    log = import_xes(Path(args.file).read_bytes())
    Path(args.output).write_bytes(write_xel(log))
    return 0


def _cmd_flatten(args: argparse.Namespace) -> int:
    log = parse_xel(Path(args.file).read_bytes())
    _emit(export_csv(log, args.granularity), args.output)
    return 0


def _cmd_discover(args: argparse.Namespace) -> int:
    log = parse_xel(Path(args.file).read_bytes())
    traces = build_traces(log, args.granularity)
    net = alpha_miner(traces)
    if args.out_format == "dot":
        data = export_dot(net, traces.label_index)
    else:
        data = json_bytes(net_to_json(net, traces, log))
    _emit(data, args.output)
    return 0


def _cmd_replay(args: argparse.Namespace) -> int:
    log = parse_xel(Path(args.file).read_bytes())
    traces = build_traces(log, args.granularity)
    net = alpha_miner(traces)
    route = replay_case(net, traces, args.case)
    _emit(json_bytes(route_to_json(route)), None)
    return 0


def _cmd_serve(args: argparse.Namespace) -> int:
    from .server import serve

    serve(args.file, args.port, ui_dir=args.ui)
    return 0


_COMMANDS = {
    "validate": _cmd_validate,
    "convert": _cmd_convert,
    "flatten": _cmd_flatten,
    "discover": _cmd_discover,
    "replay": _cmd_replay,
    "serve": _cmd_serve,
}


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except XelError as exc:
        print(f"error[{exc.code}]: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error[IO]: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
