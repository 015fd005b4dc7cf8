"""Command-line face of the engine: validate, generate, replay, inspect,
and serve. Diagnostics go to stderr; document/code bytes go only to the
requested destination. Exit codes: 0 ok, 1 engine error, 2 usage."""

from __future__ import annotations

import argparse
import re
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import __version__
from .engine import replay_trace
from .codegen import generate
from .errors import DesignError
from .model import WindowSettings, new_document
from .persistence import document_to_bytes, load

_SIZE_RE = re.compile(r"^(\d+)x(\d+)$")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tkdraft",
        description="Headless canvas GUI designer: replay interaction traces, "
        "validate design documents, and generate Tk-dialect source.",
    )
    parser.add_argument("--version", action="version", version=f"tkdraft {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_validate = sub.add_parser("validate", help="check a document file")
    p_validate.add_argument("doc", help="document file path")

    p_generate = sub.add_parser("generate", help="compile a document to source text")
    p_generate.add_argument("doc", help="document file path")
    p_generate.add_argument("-o", "--output", default="-",
                            help="output file, `-` for stdout (default)")

    p_replay = sub.add_parser("replay", help="replay a trace over a document")
    p_replay.add_argument("doc", nargs="?", help="starting document file")
    p_replay.add_argument("trace", help="trace file path")
    p_replay.add_argument("--new", metavar="WxH",
                          help="start from an empty WxH window instead of a document")
    p_replay.add_argument("-o", "--output", default="-",
                          help="where to write the resulting document, `-` for stdout")

    p_inspect = sub.add_parser("inspect", help="print the widget table")
    p_inspect.add_argument("doc", help="document file path")

    p_serve = sub.add_parser("serve", help="serve the designer UI and engine API")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8440)
    p_serve.add_argument("--ui", default=None,
                         help="directory with the built designer UI to serve at /")
    return parser


def _write_out(data: bytes, destination: str) -> None:
    if destination == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
    else:
        Path(destination).write_bytes(data)


def _cmd_validate(args: argparse.Namespace) -> int:
    doc = load(args.doc)
    print(f"ok: {args.doc} ({len(doc.widgets)} widgets)", file=sys.stderr)
    return 0


def _cmd_generate(args: argparse.Namespace) -> int:
    doc = load(args.doc)
    _write_out(generate(doc).encode("utf-8"), args.output)
    return 0


def _cmd_replay(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    if (args.doc is None) == (args.new is None):
        parser.error("replay needs a starting document or --new WxH, not both")
    if args.new is not None:
        match = _SIZE_RE.match(args.new)
        if match is None:
            parser.error(f"--new expects WxH, got {args.new!r}")
        doc = new_document(
            WindowSettings(width=int(match.group(1)), height=int(match.group(2)))
        )
    else:
        doc = load(args.doc)
    trace_text = Path(args.trace).read_text("utf-8")
    result = replay_trace(doc, trace_text)
    _write_out(document_to_bytes(result), args.output)
    return 0


def _cmd_inspect(args: argparse.Namespace) -> int:
    doc = load(args.doc)
    window = doc.window
    print(f"window: {window.title!r} {window.width}x{window.height}")
    header = f"{'name':<16} {'kind':<12} {'rect':<22} container"
    print(header)
    print("-" * len(header))
    for w in doc.widgets:
        rect = f"({w.rect.x0}, {w.rect.y0}) {w.rect.width}x{w.rect.height}"
        print(f"{w.name:<16} {w.kind.value:<12} {rect:<22} {w.container}")
    if doc.menu is not None:
        from .menu import visible_submenus

        for serial, title, origin in visible_submenus(doc.menu):
            print(f"menu[{serial}] {title!r} at {origin}")
    return 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "validate":
            return _cmd_validate(args)
        if args.command == "generate":
            return _cmd_generate(args)
        if args.command == "replay":
            return _cmd_replay(args, parser)
        if args.command == "inspect":
            return _cmd_inspect(args)
        if args.command == "serve":
            from .service import serve

            return serve(args.host, args.port, args.ui)
    except DesignError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 2


if __name__ == "__main__":
    sys.exit(main())
