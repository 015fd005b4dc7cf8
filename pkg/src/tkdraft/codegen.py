"""Compile a design document to Tk-dialect source text, and parse that
text back for round-trip verification.

The emitted dialect is line-structured and deterministic: same document,
same bytes. Section order is prologue (imports + window), handler stubs,
menu, widgets (two lines each, in creation order), bind statements, main
loop. docs/generated-code.md documents every line shape.
"""

from __future__ import annotations

import ast
import json
import re
from dataclasses import dataclass, field

from . import menu as menu_ops
from . import properties as props
from .errors import DesignError, ParseError
from .menu import MenuItem, MenuModel
from .model import (
    DesignDocument,
    Rect,
    Widget,
    WidgetKind,
    WindowSettings,
    add_widget,
    new_document,
)

# Estimated pixel width for submenu buttons rebuilt from source; generated
# code carries no design-time widths.
def _estimate_width(title: str) -> int:
    return 8 * len(title) + 16


def _module_for(kind: WidgetKind) -> str:
    return "ttk" if kind is WidgetKind.COMBOBOX else "tk"


def _literal(value: object) -> str:
    if isinstance(value, bool):
        return "True" if value else "False"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, str):
        return json.dumps(value, ensure_ascii=False)
    raise TypeError(f"cannot emit property value {value!r}")


def nondefault_properties(widget: Widget) -> dict[str, object]:
    """The widget's plain properties that differ from registry defaults."""
    out: dict[str, object] = {}
    for prop, value in widget.properties.items():
        if value != props.DESCRIPTORS[prop].default:
            out[prop] = value
    return out


def _handler_signatures(doc: DesignDocument) -> list[tuple[str, bool]]:
    """(handler, wants_event) pairs, sorted by handler name."""
    wants_event: dict[str, bool] = {}
    for widget in doc.widgets:
        for binding in widget.events:
            takes_event = binding.trigger != "command"
            wants_event[binding.handler] = wants_event.get(binding.handler, False) or takes_event
    return sorted(wants_event.items())


def generate_widget(widget: Widget) -> list[str]:
    """Exactly two lines: the constructor and the place call."""
    kwargs: dict[str, object] = dict(nondefault_properties(widget))
    if props.supports(widget.kind, "width"):
        kwargs["width"] = widget.rect.width
        kwargs["height"] = widget.rect.height
    parts = [widget.container]
    parts += [f"{k}={_literal(kwargs[k])}" for k in sorted(kwargs)]
    command = widget.command_binding()
    if command is not None:
        parts.append(f"command={command.handler}")
    constructor = (
        f"{widget.name} = {_module_for(widget.kind)}.{widget.kind.value}"
        f"({', '.join(parts)})"
    )
    if props.supports(widget.kind, "width"):
        place = f"{widget.name}.place(x={widget.rect.x0}, y={widget.rect.y0})"
    else:
        place = (
            f"{widget.name}.place(x={widget.rect.x0}, y={widget.rect.y0}, "
            f"width={widget.rect.width}, height={widget.rect.height})"
        )
    return [constructor, place]


def _menu_lines(menu: MenuModel) -> list[str]:
    visible = menu_ops.visible_submenus(menu)
    if not visible:
        return []
    lines = ["Menu1 = tk.Menu(self)"]
    for position, (serial, title, _origin) in enumerate(visible, start=1):
        sub = f"Menu1_Sub{position}"
        lines.append(f"{sub} = tk.Menu(Menu1, tearoff=0)")
        for item in menu.items[serial]:
            if item.separator:
                lines.append(f"{sub}.add_separator()")
            else:
                lines.append(f"{sub}.add_command(label={_literal(item.label)})")
        lines.append(f"Menu1.add_cascade(label={_literal(title)}, menu={sub})")
    lines.append("self.config(menu=Menu1)")
    return lines


def generate(doc: DesignDocument) -> str:
    """Compile the document; a valid document always compiles."""
    window = doc.window
    prologue = [
        "import tkinter as tk",
        "from tkinter import ttk",
        "",
        "self = tk.Tk()",
        f"self.title({_literal(window.title)})",
        f'self.geometry("{window.width}x{window.height}")',
        f"self.configure(background={_literal(window.background)})",
        f"self.resizable({window.resizable_x}, {window.resizable_y})",
    ]

    sections: list[list[str]] = []

    stubs: list[str] = []
    for handler, wants_event in _handler_signatures(doc):
        if stubs:
            stubs.append("")
        signature = "(event=None)" if wants_event else "()"
        stubs.append(f"def {handler}{signature}:")
        stubs.append("    pass")
    if stubs:
        sections.append(stubs)

    if doc.menu is not None:
        menu_lines = _menu_lines(doc.menu)
        if menu_lines:
            sections.append(menu_lines)

    widget_lines: list[str] = []
    for widget in doc.widgets:
        widget_lines.extend(generate_widget(widget))
    if widget_lines:
        sections.append(widget_lines)

    bind_lines: list[str] = []
    for widget in doc.widgets:
        for binding in widget.events:
            if binding.trigger != "command":
                bind_lines.append(
                    f"{binding.widget}.bind({_literal(binding.trigger)}, {binding.handler})"
                )
    if bind_lines:
        sections.append(bind_lines)

    lines = list(prologue)
    for section in sections:
        lines.append("")
        lines.extend(section)
    lines.append("")
    lines.append("self.mainloop()")
    return "\n".join(lines) + "\n"


# --- parsing the emitted dialect back ---

_GEOMETRY_RE = re.compile(r'^self\.geometry\("(\d+)x(\d+)"\)$')
_TITLE_RE = re.compile(r"^self\.title\((.*)\)$")
_BACKGROUND_RE = re.compile(r"^self\.configure\(background=(.*)\)$")
_RESIZABLE_RE = re.compile(r"^self\.resizable\((True|False), (True|False)\)$")
_STUB_RE = re.compile(r"^def ([A-Za-z_]\w*)\((?:event=None)?\):$")
_SUBMENU_RE = re.compile(r"^(Menu1_Sub\d+) = tk\.Menu\(Menu1, tearoff=0\)$")
_ADD_COMMAND_RE = re.compile(r"^(Menu1_Sub\d+)\.add_command\(label=(.*)\)$")
_ADD_SEPARATOR_RE = re.compile(r"^(Menu1_Sub\d+)\.add_separator\(\)$")
_CASCADE_RE = re.compile(r"^Menu1\.add_cascade\(label=(.*), menu=(Menu1_Sub\d+)\)$")
_CONSTRUCTOR_RE = re.compile(r"^([A-Za-z_]\w*) = (tk|ttk)\.([A-Za-z]\w*)\(")
_PLACE_RE = re.compile(r"^([A-Za-z_]\w*)\.place\(x=(\d+), y=(\d+)(?:, width=(\d+), height=(\d+))?\)$")
_BIND_RE = re.compile(r"^([A-Za-z_]\w*)\.bind\((\".*\"), ([A-Za-z_]\w*)\)$")

_NAME_COUNTER_RE = re.compile(r"^([A-Za-z]+?)(\d+)$")


class _Cursor:
    """Line cursor; fail() reports the line most recently taken."""

    def __init__(self, text: str) -> None:
        self.lines = text.splitlines()
        self.pos = 0

    def peek(self) -> str | None:
        return self.lines[self.pos] if self.pos < len(self.lines) else None

    def take(self) -> str:
        line = self.peek()
        if line is None:
            raise ParseError(self.pos + 1, "unexpected end of source")
        self.pos += 1
        return line

    def expect(self, exact: str) -> None:
        line = self.take()
        if line != exact:
            raise self.fail(f"expected {exact!r}, got {line!r}")

    def fail(self, message: str) -> ParseError:
        return ParseError(max(self.pos, 1), message)


def _eval_string(cursor: _Cursor, token: str) -> str:
    try:
        value = ast.literal_eval(token)
    except (ValueError, SyntaxError):
        raise cursor.fail(f"bad string literal {token}") from None
    if not isinstance(value, str):
        raise cursor.fail(f"expected a string literal, got {token}")
    return value


@dataclass
class _ParsedWidget:
    name: str
    kind: WidgetKind
    container: str
    kwargs: dict[str, object]
    command: str | None
    line_no: int
    rect: Rect | None = None
    binds: list[tuple[str, str]] = field(default_factory=list)


def _parse_constructor(cursor: _Cursor, line: str) -> _ParsedWidget:
    match = _CONSTRUCTOR_RE.match(line)
    if match is None:
        raise cursor.fail(f"expected a widget constructor, got {line!r}")
    name, module, kind_name = match.groups()
    try:
        kind = WidgetKind(kind_name)
    except ValueError:
        raise cursor.fail(f"unknown widget kind {kind_name!r}") from None
    if _module_for(kind) != module:
        raise cursor.fail(f"{kind_name} belongs to {_module_for(kind)}, not {module}")
    try:
        node = ast.parse(line, mode="exec").body[0]
    except SyntaxError:
        raise cursor.fail(f"unparseable constructor {line!r}") from None
    call = node.value  # type: ignore[attr-defined]
    if not isinstance(call, ast.Call) or len(call.args) != 1:
        raise cursor.fail("constructor must take the container as sole positional arg")
    container_node = call.args[0]
    if not isinstance(container_node, ast.Name):
        raise cursor.fail("container must be a bare name")
    kwargs: dict[str, object] = {}
    command: str | None = None
    for keyword in call.keywords:
        if keyword.arg is None:
            raise cursor.fail("**kwargs is not part of the dialect")
        if keyword.arg == "command":
            if not isinstance(keyword.value, ast.Name):
                raise cursor.fail("command must reference a handler by name")
            command = keyword.value.id
            continue
        if not isinstance(keyword.value, ast.Constant):
            raise cursor.fail(f"property {keyword.arg} must be a literal")
        kwargs[keyword.arg] = keyword.value.value
    return _ParsedWidget(name, kind, container_node.id, kwargs, command, cursor.pos)


def parse_generated(source: str) -> DesignDocument:
    """Rebuild a document from generated source.

    Whatever the emitter writes, this reads back: window settings, widget
    kinds/names/containers/rects, non-default properties, bindings, and
    the visible menu structure. Retired menu serials and design-time
    submenu widths are not represented in source and come back as
    position-assigned serials with estimated widths.
    """
    cursor = _Cursor(source)
    cursor.expect("import tkinter as tk")
    cursor.expect("from tkinter import ttk")
    cursor.expect("")
    cursor.expect("self = tk.Tk()")

    match = _TITLE_RE.match(cursor.take())
    if match is None:
        raise cursor.fail("expected self.title(...)")
    title = _eval_string(cursor, match.group(1))
    match = _GEOMETRY_RE.match(cursor.take())
    if match is None:
        raise cursor.fail('expected self.geometry("WxH")')
    width, height = int(match.group(1)), int(match.group(2))
    match = _BACKGROUND_RE.match(cursor.take())
    if match is None:
        raise cursor.fail("expected self.configure(background=...)")
    background = _eval_string(cursor, match.group(1))
    match = _RESIZABLE_RE.match(cursor.take())
    if match is None:
        raise cursor.fail("expected self.resizable(...)")
    resizable_x, resizable_y = match.group(1) == "True", match.group(2) == "True"

    try:
        doc = new_document(
            WindowSettings(title, width, height, background, resizable_x, resizable_y)
        )
    except DesignError as exc:
        raise cursor.fail(str(exc)) from exc

    menu: MenuModel | None = None
    parsed_widgets: list[_ParsedWidget] = []
    by_name: dict[str, _ParsedWidget] = {}
    seen = {"stubs": False, "menu": False, "widgets": False, "binds": False}

    while True:
        cursor.expect("")
        line = cursor.take()
        if line == "self.mainloop()":
            if cursor.peek() is not None:
                raise ParseError(cursor.pos + 1, "trailing content after mainloop")
            break
        if _STUB_RE.match(line):
            if any(seen.values()):
                raise cursor.fail("handler stubs must precede other sections")
            seen["stubs"] = True
            while True:
                cursor.expect("    pass")
                nxt = cursor.peek()
                if nxt == "":
                    after = (cursor.lines[cursor.pos + 1]
                             if cursor.pos + 1 < len(cursor.lines) else None)
                    if after is not None and _STUB_RE.match(after):
                        cursor.take()
                        cursor.take()
                        continue
                break
        elif line == "Menu1 = tk.Menu(self)":
            if seen["menu"] or seen["widgets"] or seen["binds"]:
                raise cursor.fail("menu section out of order")
            seen["menu"] = True
            menu = _parse_menu_section(cursor)
        elif _CONSTRUCTOR_RE.match(line):
            if seen["binds"]:
                raise cursor.fail("widget section out of order")
            seen["widgets"] = True
            while True:
                parsed = _parse_constructor(cursor, line)
                if parsed.name in by_name:
                    raise cursor.fail(f"duplicate constructor for {parsed.name}")
                place = cursor.take()
                place_match = _PLACE_RE.match(place)
                if place_match is None or place_match.group(1) != parsed.name:
                    raise cursor.fail(f"expected {parsed.name}.place(...)")
                parsed.rect = _rect_from(cursor, parsed, place_match)
                parsed_widgets.append(parsed)
                by_name[parsed.name] = parsed
                nxt = cursor.peek()
                if nxt is None or nxt == "":
                    break
                line = cursor.take()
        elif _BIND_RE.match(line):
            seen["binds"] = True
            while True:
                bind_match = _BIND_RE.match(line)
                if bind_match is None:
                    raise cursor.fail(f"expected a bind statement, got {line!r}")
                target, sequence_token, handler = bind_match.groups()
                sequence = _eval_string(cursor, sequence_token)
                if target not in by_name:
                    raise cursor.fail(f"bind targets unknown widget {target!r}")
                by_name[target].binds.append((sequence, handler))
                nxt = cursor.peek()
                if nxt is None or nxt == "":
                    break
                line = cursor.take()
        else:
            raise cursor.fail(f"unrecognized line {line!r}")

    doc.menu = menu
    counters: dict[str, int] = {}
    for parsed in parsed_widgets:
        try:
            widget = Widget(
                kind=parsed.kind,
                name=parsed.name,
                rect=parsed.rect,
                container=parsed.container,
                properties=_properties_from(parsed),
            )
            add_widget(doc, widget)
            if parsed.command is not None:
                props.bind_event(doc, parsed.name, "command", parsed.command)
            for sequence, handler in parsed.binds:
                props.bind_event(doc, parsed.name, sequence, handler)
        except DesignError as exc:
            raise ParseError(parsed.line_no, f"{parsed.name}: {exc}") from exc
        counter_match = _NAME_COUNTER_RE.match(parsed.name)
        if counter_match and counter_match.group(1) == parsed.kind.value:
            number = int(counter_match.group(2))
            key = parsed.kind.value
            counters[key] = max(counters.get(key, 0), number)
    doc.name_counters = counters
    return doc


def _rect_from(cursor: _Cursor, parsed: _ParsedWidget, place_match: re.Match) -> Rect:
    x0, y0 = int(place_match.group(2)), int(place_match.group(3))
    if place_match.group(4) is not None:
        width, height = int(place_match.group(4)), int(place_match.group(5))
    else:
        width = parsed.kwargs.pop("width", None)
        height = parsed.kwargs.pop("height", None)
        if not isinstance(width, int) or not isinstance(height, int):
            raise cursor.fail(f"{parsed.name}: constructor lacks width/height integers")
    try:
        return Rect(x0, y0, width, height)
    except DesignError as exc:
        raise cursor.fail(str(exc)) from exc


def _properties_from(parsed: _ParsedWidget) -> dict[str, object]:
    properties: dict[str, object] = {}
    for prop, value in parsed.kwargs.items():
        if prop in ("width", "height"):
            continue
        properties[prop] = value
    return properties


def _parse_menu_section(cursor: _Cursor) -> MenuModel:
    menu = MenuModel()
    pending: str | None = None  # submenu awaiting its cascade line
    pending_items: list[MenuItem] = []
    while True:
        line = cursor.take()
        if line == "self.config(menu=Menu1)":
            if pending is not None:
                raise cursor.fail(f"{pending} never got a cascade line")
            return menu
        match = _SUBMENU_RE.match(line)
        if match:
            if pending is not None:
                raise cursor.fail(f"{pending} never got a cascade line")
            pending = match.group(1)
            pending_items = []
            continue
        match = _ADD_COMMAND_RE.match(line)
        if match:
            sub, token = match.groups()
            if sub != pending:
                raise cursor.fail(f"item added to {sub} outside its block")
            pending_items.append(MenuItem.command(_eval_string(cursor, token)))
            continue
        match = _ADD_SEPARATOR_RE.match(line)
        if match:
            if match.group(1) != pending:
                raise cursor.fail("separator added outside its submenu block")
            pending_items.append(MenuItem.divider())
            continue
        match = _CASCADE_RE.match(line)
        if match:
            token, sub = match.groups()
            if sub != pending:
                raise cursor.fail(f"cascade names {sub}, expected {pending}")
            title = _eval_string(cursor, token)
            serial = menu_ops.add_submenu(menu, title, _estimate_width(title))
            for item in pending_items:
                menu_ops.add_item(menu, serial, item)
            pending = None
            continue
        raise cursor.fail(f"unrecognized menu line {line!r}")


def _visible_structure(menu: MenuModel | None) -> list[tuple[str, tuple]]:
    if menu is None:
        return []
    return [
        (menu.buttons[serial].title,
         tuple((item.label, item.separator) for item in menu.items[serial]))
        for serial in menu.live_serials()
    ]


def round_trip_equal(a: DesignDocument, b: DesignDocument) -> bool:
    """Document equality modulo unrecoverable history: name counters, the
    deleted-serial log, submenu widths/serials, and never-set defaults."""
    if a.window != b.window:
        return False
    if len(a.widgets) != len(b.widgets):
        return False
    for wa, wb in zip(a.widgets, b.widgets):
        if (wa.kind, wa.name, wa.container, wa.rect) != (wb.kind, wb.name, wb.container, wb.rect):
            return False
        if nondefault_properties(wa) != nondefault_properties(wb):
            return False
        if {(e.trigger, e.handler) for e in wa.events} != {
            (e.trigger, e.handler) for e in wb.events
        }:
            return False
    return _visible_structure(a.menu) == _visible_structure(b.menu)
