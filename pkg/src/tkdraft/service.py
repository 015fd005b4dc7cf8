"""Local engine service for the browser designer.

Exposes the trace-verb protocol over HTTP plus document/source downloads;
the UI keeps no document state of its own. One engine session per id,
commands applied strictly in order under a per-session lock.

  POST /api/session                {"width": W, "height": H} -> {"session": id}
  POST /api/session/<id>/commands  text/plain trace lines
  GET  /api/session/<id>/document  canonical document JSON
  GET  /api/session/<id>/source    generated source text
  GET  /api/session/<id>/trace     every successfully applied command line
  GET  /api/session/<id>/state     selection / armed kind / grid / lock
  GET  /api/registry               property descriptors + capability matrix
"""

from __future__ import annotations

import json
import sys
import threading
import uuid
from dataclasses import dataclass, field
from http import HTTPStatus
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path

from . import properties as props
from .codegen import generate
from .engine import EngineSession, prototype_size
from .errors import DesignError, TraceParseError
from .model import RECT_KINDS, WindowSettings, new_document
from .persistence import document_to_bytes
from .trace import format_command, parse_trace


@dataclass
class _Session:
    engine: EngineSession
    lines: list[str] = field(default_factory=list)
    lock: threading.Lock = field(default_factory=threading.Lock)


class _Hub:
    def __init__(self) -> None:
        self.sessions: dict[str, _Session] = {}
        self.lock = threading.Lock()

    def create(self, width: int, height: int) -> str:
        doc = new_document(WindowSettings(width=width, height=height))
        session = _Session(EngineSession(doc))
        session.lines.append(f"WINDOW SIZE {width} {height}")
        session_id = uuid.uuid4().hex[:12]
        with self.lock:
            self.sessions[session_id] = session
        return session_id

    def get(self, session_id: str) -> _Session | None:
        with self.lock:
            return self.sessions.get(session_id)


def _registry_payload() -> dict:
    descriptors = [
        {
            "name": d.name,
            "type": d.value_type,
            "default": d.default,
            "choices": list(d.choices),
        }
        for d in props._DESCRIPTORS
    ]
    return {
        "kinds": [k.value for k in RECT_KINDS],
        "descriptors": descriptors,
        "matrix": props.capability_matrix(),
        "prototypes": {k.value: list(prototype_size(k)) for k in RECT_KINDS},
    }


def _make_handler(hub: _Hub, ui_root: Path | None):
    class Handler(BaseHTTPRequestHandler):
        protocol_version = "HTTP/1.1"

        def log_message(self, fmt: str, *args) -> None:  # quiet by default
            pass

        def _send(self, status: int, body: bytes, content_type: str) -> None:
            self.send_response(status)
            self.send_header("Content-Type", content_type)
            self.send_header("Content-Length", str(len(body)))
            self.send_header("Cache-Control", "no-store")
            self.end_headers()
            self.wfile.write(body)

        def _send_json(self, status: int, payload: dict) -> None:
            self._send(status, json.dumps(payload).encode("utf-8"),
                       "application/json; charset=utf-8")

        def _read_body(self) -> bytes:
            length = int(self.headers.get("Content-Length") or 0)
            return self.rfile.read(length) if length else b""

        def do_POST(self) -> None:  # noqa: N802 (http.server casing)
            parts = self.path.strip("/").split("/")
            if parts == ["api", "session"]:
                raw = self._read_body()
                try:
                    options = json.loads(raw) if raw else {}
                except json.JSONDecodeError:
                    self._send_json(HTTPStatus.BAD_REQUEST, {"error": "bad JSON"})
                    return
                try:
                    session_id = hub.create(
                        int(options.get("width", 400)), int(options.get("height", 300))
                    )
                except (DesignError, ValueError) as exc:
                    self._send_json(HTTPStatus.BAD_REQUEST, {"error": str(exc)})
                    return
                self._send_json(HTTPStatus.OK, {"session": session_id})
                return
            if len(parts) == 4 and parts[:2] == ["api", "session"] and parts[3] == "commands":
                session = hub.get(parts[2])
                if session is None:
                    self._send_json(HTTPStatus.NOT_FOUND, {"error": "unknown session"})
                    return
                text = self._read_body().decode("utf-8")
                try:
                    commands = parse_trace(text)
                except TraceParseError as exc:
                    self._send_json(HTTPStatus.BAD_REQUEST,
                                    {"error": str(exc), "line": exc.line_no})
                    return
                with session.lock:
                    for index, (line_no, command) in enumerate(commands):
                        try:
                            session.engine.apply(command)
                        except DesignError as exc:
                            self._send_json(
                                HTTPStatus.CONFLICT,
                                {"error": str(exc), "index": index, "line": line_no,
                                 "applied": index},
                            )
                            return
                        session.lines.append(format_command(command))
                self._send_json(HTTPStatus.OK, {"applied": len(commands)})
                return
            self._send_json(HTTPStatus.NOT_FOUND, {"error": "no such endpoint"})

        def do_GET(self) -> None:  # noqa: N802
            parts = self.path.split("?")[0].strip("/").split("/")
            if parts == ["api", "registry"]:
                self._send_json(HTTPStatus.OK, _registry_payload())
                return
            if len(parts) == 4 and parts[:2] == ["api", "session"]:
                session = hub.get(parts[2])
                if session is None:
                    self._send_json(HTTPStatus.NOT_FOUND, {"error": "unknown session"})
                    return
                with session.lock:
                    if parts[3] == "document":
                        self._send(HTTPStatus.OK, document_to_bytes(session.engine.doc),
                                   "application/json; charset=utf-8")
                        return
                    if parts[3] == "source":
                        self._send(HTTPStatus.OK,
                                   generate(session.engine.doc).encode("utf-8"),
                                   "text/plain; charset=utf-8")
                        return
                    if parts[3] == "trace":
                        body = ("\n".join(session.lines) + "\n").encode("utf-8")
                        self._send(HTTPStatus.OK, body, "text/plain; charset=utf-8")
                        return
                    if parts[3] == "state":
                        engine = session.engine
                        self._send_json(HTTPStatus.OK, {
                            "selection": engine.selected_names(),
                            "armed": engine.armed_kind.value if engine.armed_kind else None,
                            "grid": {"enabled": engine.grid.enabled,
                                     "size": engine.grid.size},
                            "locked": engine.locked,
                        })
                        return
                self._send_json(HTTPStatus.NOT_FOUND, {"error": "no such endpoint"})
                return
            if ui_root is not None and not parts[0].startswith("api"):
                self._serve_static(parts)
                return
            self._send_json(HTTPStatus.NOT_FOUND, {"error": "no such endpoint"})

        def _serve_static(self, parts: list[str]) -> None:
            relative = "/".join(parts) or "index.html"
            target = (ui_root / relative).resolve()
            if not str(target).startswith(str(ui_root.resolve())) or not target.is_file():
                self._send(HTTPStatus.NOT_FOUND, b"not found", "text/plain")
                return
            content_types = {
                ".html": "text/html; charset=utf-8",
                ".js": "text/javascript; charset=utf-8",
                ".css": "text/css; charset=utf-8",
                ".map": "application/json",
            }
            content_type = content_types.get(target.suffix, "application/octet-stream")
            self._send(HTTPStatus.OK, target.read_bytes(), content_type)

    return Handler


def create_server(host: str, port: int, ui_root: Path | None) -> ThreadingHTTPServer:
    return ThreadingHTTPServer((host, port), _make_handler(_Hub(), ui_root))


def serve(host: str, port: int, ui_dir: str | None) -> int:
    ui_root = Path(ui_dir) if ui_dir else None
    if ui_root is not None and not ui_root.is_dir():
        print(f"error: UI directory {ui_root} does not exist", file=sys.stderr)
        return 1
    server = create_server(host, port, ui_root)
    print(f"engine service on http://{host}:{server.server_address[1]}/", file=sys.stderr)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        print("stopped", file=sys.stderr)
    return 0
