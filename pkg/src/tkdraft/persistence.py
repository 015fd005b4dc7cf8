"""Versioned document files: canonical JSON save/load.

The writer is canonical (sorted keys, two-space indent, LF, trailing
newline) so identical documents always produce identical bytes; tests
and the engine's snapshot comparisons rely on that. Loading re-validates
every document invariant from scratch and rejects unknown versions.
The field layout is frozen in docs/document-schema.json.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import IO, Union

from .errors import DesignError, FormatError, ValidationError, VersionError
from .menu import MenuItem, MenuModel, SubmenuButton, add_item, recompute_offsets
from .model import (
    DesignDocument,
    EventBinding,
    Rect,
    Widget,
    WindowSettings,
    add_widget,
    new_document,
    parse_kind,
)

FORMAT_VERSION = 1


def document_to_payload(doc: DesignDocument) -> dict:
    window = doc.window
    payload: dict = {
        "format_version": FORMAT_VERSION,
        "window": {
            "title": window.title,
            "width": window.width,
            "height": window.height,
            "background": window.background,
            "resizable_x": window.resizable_x,
            "resizable_y": window.resizable_y,
        },
        "widgets": [
            {
                "kind": w.kind.value,
                "name": w.name,
                "container": w.container,
                "rect": {
                    "x0": w.rect.x0,
                    "y0": w.rect.y0,
                    "width": w.rect.width,
                    "height": w.rect.height,
                },
                "properties": dict(sorted(w.properties.items())),
                "events": [
                    {"trigger": b.trigger, "handler": b.handler} for b in w.events
                ],
            }
            for w in doc.widgets
        ],
        "menu": _menu_to_payload(doc.menu),
        "name_counters": dict(sorted(doc.name_counters.items())),
    }
    return payload


def _menu_to_payload(menu: MenuModel | None) -> dict | None:
    if menu is None:
        return None
    return {
        "y0": menu.y0,
        "buttons": [
            {
                "serial": serial,
                "title": menu.buttons[serial].title,
                "width": menu.buttons[serial].width,
                "items": [
                    {"separator": True} if item.separator else {"label": item.label}
                    for item in menu.items[serial]
                ],
            }
            for serial in menu.live_serials()
        ],
        "deleted": list(menu.deleted),
    }


def document_to_bytes(doc: DesignDocument) -> bytes:
    text = json.dumps(document_to_payload(doc), indent=2, sort_keys=True,
                      ensure_ascii=False)
    return (text + "\n").encode("utf-8")


def _expect(payload: dict, key: str, types: type | tuple) -> object:
    if key not in payload:
        raise FormatError(f"missing field {key!r}")
    value = payload[key]
    if not isinstance(value, types):
        raise FormatError(f"field {key!r} has the wrong type")
    return value


def payload_to_document(payload: object) -> DesignDocument:
    if not isinstance(payload, dict):
        raise FormatError("document must be a JSON object")
    version = payload.get("format_version")
    if version != FORMAT_VERSION:
        raise VersionError(version)

    window_raw = _expect(payload, "window", dict)
    try:
        window = WindowSettings(
            title=str(_expect(window_raw, "title", str)),
            width=_expect(window_raw, "width", int),
            height=_expect(window_raw, "height", int),
            background=str(_expect(window_raw, "background", str)),
            resizable_x=bool(_expect(window_raw, "resizable_x", bool)),
            resizable_y=bool(_expect(window_raw, "resizable_y", bool)),
        )
    except DesignError as exc:
        raise ValidationError(f"window: {exc}") from exc
    doc = new_document(window)

    for raw in _expect(payload, "widgets", list):
        if not isinstance(raw, dict):
            raise FormatError("widget entries must be objects")
        rect_raw = _expect(raw, "rect", dict)
        try:
            rect = Rect(
                x0=_expect(rect_raw, "x0", int),
                y0=_expect(rect_raw, "y0", int),
                width=_expect(rect_raw, "width", int),
                height=_expect(rect_raw, "height", int),
            )
            name = str(_expect(raw, "name", str))
            widget = Widget(
                kind=parse_kind(str(_expect(raw, "kind", str))),
                name=name,
                rect=rect,
                container=str(_expect(raw, "container", str)),
                properties=dict(_expect(raw, "properties", dict)),
                events=[
                    EventBinding(
                        name,
                        str(_expect(b, "trigger", str)),
                        str(_expect(b, "handler", str)),
                    )
                    for b in _expect(raw, "events", list)
                ],
            )
            add_widget(doc, widget)
        except FormatError:
            raise
        except DesignError as exc:
            raise ValidationError(str(exc)) from exc

    doc.menu = _payload_to_menu(payload.get("menu"))

    counters = _expect(payload, "name_counters", dict)
    for kind_name, count in counters.items():
        parse_kind(str(kind_name))
        if not isinstance(count, int) or count < 0:
            raise ValidationError(f"name counter for {kind_name} must be >= 0")
    doc.name_counters = {str(k): int(v) for k, v in counters.items()}
    return doc


def _payload_to_menu(raw: object) -> MenuModel | None:
    if raw is None:
        return None
    if not isinstance(raw, dict):
        raise FormatError("menu must be an object or null")
    menu = MenuModel(y0=_expect(raw, "y0", int))
    deleted = _expect(raw, "deleted", list)
    if not all(isinstance(s, int) for s in deleted):
        raise FormatError("deleted serials must be integers")
    buttons = _expect(raw, "buttons", list)
    try:
        taken: set[int] = set()
        for entry in buttons:
            if not isinstance(entry, dict):
                raise FormatError("submenu entries must be objects")
            serial = _expect(entry, "serial", int)
            if serial < 1 or serial in taken or serial in deleted:
                raise ValidationError(f"bad submenu serial {serial}")
            taken.add(serial)
            menu.buttons[serial] = SubmenuButton(
                serial,
                str(_expect(entry, "title", str)),
                _expect(entry, "width", int),
            )
            if menu.buttons[serial].width < 1:
                raise ValidationError(f"submenu {serial} width must be >= 1")
            menu.items[serial] = []
            for item_raw in _expect(entry, "items", list):
                if not isinstance(item_raw, dict):
                    raise FormatError("menu items must be objects")
                if item_raw.get("separator"):
                    add_item(menu, serial, MenuItem.divider())
                else:
                    add_item(menu, serial, MenuItem.command(str(_expect(item_raw, "label", str))))
        if len(set(deleted)) != len(deleted):
            raise ValidationError("deleted serials repeat")
        menu.deleted = [int(s) for s in deleted]
    except FormatError:
        raise
    except DesignError as exc:
        raise ValidationError(str(exc)) from exc
    recompute_offsets(menu)
    return menu


def save(doc: DesignDocument, destination: Union[str, Path, IO[bytes]]) -> None:
    data = document_to_bytes(doc)
    if hasattr(destination, "write"):
        destination.write(data)  # type: ignore[union-attr]
        return
    Path(destination).write_bytes(data)


def loads(data: Union[str, bytes]) -> DesignDocument:
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    try:
        payload = json.loads(data)
    except json.JSONDecodeError as exc:
        raise FormatError(f"not valid JSON: {exc}") from exc
    return payload_to_document(payload)


def load(source: Union[str, Path, IO[bytes]]) -> DesignDocument:
    if hasattr(source, "read"):
        raw = source.read()  # type: ignore[union-attr]
    else:
        raw = Path(source).read_bytes()
    return loads(raw)
