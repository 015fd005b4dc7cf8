"""Shared builders for randomized document tests."""

from __future__ import annotations

import random

import pytest

from tkdraft import menu as menu_ops
from tkdraft import properties as props
from tkdraft.model import (
    CONTAINER_KINDS,
    RECT_KINDS,
    DesignDocument,
    Rect,
    Widget,
    WindowSettings,
    auto_name,
    new_document,
    rect_inside_window,
    rects_overlap,
)
from tkdraft.persistence import document_to_bytes

WORDS = ["File", "Edit", "View", "Run", "Stop", "Open file", 'He said "hi"',
         "übergröße", "a_b", "x", "Save As", "line\nbreak"]
COLORS = ["#fff", "#a0b1c2", "red", "lightgray", "#000000"]
SEQUENCES = ["<Button-1>", "<Return>", "<Key>", "<Double-Button-1>", "<FocusOut>"]
HANDLERS = ["on_click", "on_submit", "handle_key", "refresh_view"]


def canonical(doc: DesignDocument) -> bytes:
    return document_to_bytes(doc)


def place_random_widget(rng: random.Random, doc: DesignDocument,
                        kind=None, attempts: int = 30) -> Widget | None:
    """Try to drop one random non-overlapping widget; None if no room found."""
    from tkdraft.model import add_widget

    kind = kind or rng.choice(RECT_KINDS)
    window = doc.window
    for _ in range(attempts):
        width = rng.randint(8, max(9, window.width // 4))
        height = rng.randint(8, max(9, window.height // 4))
        if width >= window.width or height >= window.height:
            continue
        x0 = rng.randint(0, window.width - width)
        y0 = rng.randint(0, window.height - height)
        rect = Rect(x0, y0, width, height)
        if not rect_inside_window(rect, window):
            continue
        if any(rects_overlap(rect, w.rect) for w in doc.widgets):
            continue
        widget = Widget(kind=kind, name=auto_name(doc, kind), rect=rect)
        add_widget(doc, widget)
        return widget
    return None


def _random_property_value(rng: random.Random, descriptor) -> object:
    if descriptor.value_type == props.INTEGER:
        return rng.randint(0, 40)
    if descriptor.value_type == props.BOOLEAN:
        return rng.choice([True, False])
    if descriptor.value_type == props.COLOR:
        return rng.choice(COLORS)
    if descriptor.value_type == props.ENUM:
        return rng.choice(list(descriptor.choices))
    return rng.choice(WORDS)


def decorate_random_widget(rng: random.Random, doc: DesignDocument, widget: Widget) -> None:
    """Sprinkle supported plain properties and events on a placed widget."""
    settable = [
        d for d in props.list_properties(widget.kind)
        if d.name not in props.SPECIAL_PROPS
    ]
    for descriptor in rng.sample(settable, k=min(len(settable), rng.randint(0, 3))):
        props.set_property(doc, widget.name, descriptor.name,
                           _random_property_value(rng, descriptor))
    if rng.random() < 0.3 and props.supports(widget.kind, "command"):
        props.bind_event(doc, widget.name, "command", rng.choice(HANDLERS))
    if rng.random() < 0.3:
        props.bind_event(doc, widget.name, rng.choice(SEQUENCES), rng.choice(HANDLERS))


def attach_random_menu(rng: random.Random, doc: DesignDocument) -> None:
    menu = menu_ops.MenuModel()
    doc.menu = menu
    serials = []
    for _ in range(rng.randint(1, 5)):
        title = rng.choice(WORDS)
        serials.append(menu_ops.add_submenu(menu, title, rng.randint(10, 80)))
    for serial in serials:
        for _ in range(rng.randint(0, 4)):
            if rng.random() < 0.2:
                item = menu_ops.MenuItem.divider()
            else:
                item = menu_ops.MenuItem.command(rng.choice(WORDS))
            length = len(menu.items[serial])
            position = rng.randint(0, length) if rng.random() < 0.3 else None
            menu_ops.add_item(menu, serial, item, position)
    for serial in serials:
        if len(menu.buttons) > 1 and rng.random() < 0.3:
            menu_ops.delete_submenu(menu, serial)


def build_random_document(rng: random.Random, max_widgets: int = 8,
                          decorated: bool = True) -> DesignDocument:
    window = WindowSettings(
        title=rng.choice(WORDS),
        width=rng.randint(120, 640),
        height=rng.randint(120, 480),
        background=rng.choice(COLORS),
        resizable_x=rng.choice([True, False]),
        resizable_y=rng.choice([True, False]),
    )
    doc = new_document(window)
    container_names = []
    for _ in range(rng.randint(0, max_widgets)):
        widget = place_random_widget(rng, doc)
        if widget is None:
            continue
        if widget.kind in CONTAINER_KINDS:
            container_names.append(widget.name)
        elif container_names and rng.random() < 0.25:
            widget.container = rng.choice(container_names)
        if decorated:
            decorate_random_widget(rng, doc, widget)
    if decorated and rng.random() < 0.5:
        attach_random_menu(rng, doc)
    return doc


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xC0FFEE)
