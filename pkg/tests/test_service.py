"""Engine HTTP service: trace verbs in, document/source/trace out."""

from __future__ import annotations

import json
import threading
import urllib.error
import urllib.request

import pytest

from tkdraft.engine import replay_trace
from tkdraft.model import WindowSettings, new_document
from tkdraft.persistence import document_to_bytes
from tkdraft.service import create_server


@pytest.fixture(scope="module")
def base_url():
    server = create_server("127.0.0.1", 0, None)
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    yield f"http://127.0.0.1:{server.server_address[1]}"
    server.shutdown()


def post(url: str, body: bytes, content_type: str):
    request = urllib.request.Request(url, data=body, method="POST",
                                     headers={"Content-Type": content_type})
    with urllib.request.urlopen(request) as response:
        return response.status, response.read()


def get(url: str):
    with urllib.request.urlopen(url) as response:
        return response.status, response.read()


def new_session(base_url, width=400, height=300) -> str:
    status, body = post(f"{base_url}/api/session",
                        json.dumps({"width": width, "height": height}).encode(),
                        "application/json")
    assert status == 200
    return json.loads(body)["session"]


DEMO_LINES = (
    "KIND Button\nPRESS 10 10\nDRAG 60 30\nRELEASE 60 30\n"
    'SETPROP Button1 text "Run"\nBIND Button1 command on_run\n'
)


def test_commands_then_document(base_url):
    session = new_session(base_url)
    status, body = post(f"{base_url}/api/session/{session}/commands",
                        DEMO_LINES.encode(), "text/plain")
    assert status == 200
    assert json.loads(body)["applied"] == 6
    status, body = get(f"{base_url}/api/session/{session}/document")
    assert status == 200
    payload = json.loads(body)
    assert payload["widgets"][0]["name"] == "Button1"
    assert payload["widgets"][0]["properties"]["text"] == "Run"


def test_source_matches_generate(base_url):
    from tkdraft.codegen import generate
    from tkdraft.persistence import loads

    session = new_session(base_url)
    post(f"{base_url}/api/session/{session}/commands", DEMO_LINES.encode(), "text/plain")
    _, doc_bytes = get(f"{base_url}/api/session/{session}/document")
    _, source = get(f"{base_url}/api/session/{session}/source")
    assert source.decode() == generate(loads(doc_bytes))


def test_exported_trace_replays_to_same_document(base_url):
    session = new_session(base_url, width=500, height=400)
    post(f"{base_url}/api/session/{session}/commands", DEMO_LINES.encode(), "text/plain")
    _, trace = get(f"{base_url}/api/session/{session}/trace")
    _, doc_bytes = get(f"{base_url}/api/session/{session}/document")
    replayed = replay_trace(new_document(WindowSettings()), trace.decode())
    assert document_to_bytes(replayed) == doc_bytes


def test_engine_error_is_conflict_and_session_survives(base_url):
    session = new_session(base_url)
    post(f"{base_url}/api/session/{session}/commands", DEMO_LINES.encode(), "text/plain")
    bad = "KIND Button\nPRESS 10 10\nRELEASE 60 30\n"
    with pytest.raises(urllib.error.HTTPError) as excinfo:
        post(f"{base_url}/api/session/{session}/commands", bad.encode(), "text/plain")
    assert excinfo.value.code == 409
    detail = json.loads(excinfo.value.read())
    assert "overlap" in detail["error"]
    assert detail["index"] == 2
    # The failed command is not recorded; the trace still replays cleanly.
    _, trace = get(f"{base_url}/api/session/{session}/trace")
    _, doc_bytes = get(f"{base_url}/api/session/{session}/document")
    replayed = replay_trace(new_document(WindowSettings()), trace.decode())
    assert document_to_bytes(replayed) == doc_bytes


def test_parse_error_is_bad_request(base_url):
    session = new_session(base_url)
    with pytest.raises(urllib.error.HTTPError) as excinfo:
        post(f"{base_url}/api/session/{session}/commands", b"EXPLODE\n", "text/plain")
    assert excinfo.value.code == 400


def test_state_endpoint_tracks_selection(base_url):
    session = new_session(base_url)
    post(f"{base_url}/api/session/{session}/commands", DEMO_LINES.encode(), "text/plain")
    post(f"{base_url}/api/session/{session}/commands",
         b"PRESS 0 0\nRELEASE 399 299\n", "text/plain")
    _, body = get(f"{base_url}/api/session/{session}/state")
    state = json.loads(body)
    assert state["selection"] == ["Button1"]
    assert state["armed"] is None
    assert state["grid"] == {"enabled": False, "size": 10}


def test_registry_payload(base_url):
    _, body = get(f"{base_url}/api/registry")
    registry = json.loads(body)
    assert "Button" in registry["kinds"]
    assert registry["matrix"]["length"]["Scale"] is True
    assert registry["matrix"]["length"]["Button"] is False
    assert registry["prototypes"]["Text"] == [120, 80]
    names = [d["name"] for d in registry["descriptors"]]
    assert "relief" in names and "x0" in names


def test_unknown_session_404(base_url):
    with pytest.raises(urllib.error.HTTPError) as excinfo:
        get(f"{base_url}/api/session/nope/document")
    assert excinfo.value.code == 404
