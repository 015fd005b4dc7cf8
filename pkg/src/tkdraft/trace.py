"""Line-oriented interaction trace grammar.

One command per line; blank lines and `#` comments are skipped. Tokens
follow shell quoting rules (double-quote values containing spaces). The
full grammar lives in docs/trace-grammar.md. Unknown verbs raise
TraceParseError.
"""

from __future__ import annotations

import shlex
from dataclasses import dataclass
from typing import Optional, Union

from .errors import TraceParseError
from .model import WidgetKind

FUNC_OPS = ("MOVE", "DESIGN", "DELETE", "OK", "CANCEL")


@dataclass(frozen=True)
class SetWindowSize:
    width: int
    height: int


@dataclass(frozen=True)
class SetWindowTitle:
    title: str


@dataclass(frozen=True)
class SetWindowBackground:
    background: str


@dataclass(frozen=True)
class SetWindowResizable:
    x: bool
    y: bool


@dataclass(frozen=True)
class ChooseKind:
    kind: WidgetKind


@dataclass(frozen=True)
class Press:
    x: int
    y: int


@dataclass(frozen=True)
class Drag:
    x: int
    y: int


@dataclass(frozen=True)
class Release:
    x: int
    y: int


@dataclass(frozen=True)
class Func:
    op: str
    dx: int = 0
    dy: int = 0


@dataclass(frozen=True)
class SetProp:
    widget: str
    prop: str
    value: str  # raw token; the session coerces it per the property type


@dataclass(frozen=True)
class Bind:
    widget: str
    trigger: str
    handler: str


@dataclass(frozen=True)
class MenuAddSubmenu:
    title: str
    width: int


@dataclass(frozen=True)
class MenuDeleteSubmenu:
    serial: int


@dataclass(frozen=True)
class MenuAddItem:
    serial: int
    label: Optional[str]  # None means separator
    index: Optional[int] = None


@dataclass(frozen=True)
class MenuDeleteItem:
    serial: int
    index: int


@dataclass(frozen=True)
class SetGridEnabled:
    enabled: bool


@dataclass(frozen=True)
class SetGridSize:
    size: int


@dataclass(frozen=True)
class SetLock:
    enabled: bool


@dataclass(frozen=True)
class Compile:
    pass


Command = Union[
    SetWindowSize, SetWindowTitle, SetWindowBackground, SetWindowResizable,
    ChooseKind, Press, Drag, Release, Func, SetProp, Bind,
    MenuAddSubmenu, MenuDeleteSubmenu, MenuAddItem, MenuDeleteItem,
    SetGridEnabled, SetGridSize, SetLock, Compile,
]


def _int(token: str, line_no: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise TraceParseError(line_no, f"{what} must be an integer, got {token!r}") from None


def _flag(token: str, line_no: int, what: str) -> bool:
    if token in ("0", "1"):
        return token == "1"
    raise TraceParseError(line_no, f"{what} must be 0 or 1, got {token!r}")


def _arity(tokens: list[str], n: int, line_no: int, usage: str) -> None:
    if len(tokens) != n:
        raise TraceParseError(line_no, f"expected `{usage}`")


def parse_line(line: str, line_no: int = 1) -> Optional[Command]:
    """Parse one trace line; returns None for blanks and comments."""
    stripped = line.strip()
    if not stripped or stripped.startswith("#"):
        return None
    try:
        tokens = shlex.split(stripped, comments=False)
    except ValueError as exc:
        raise TraceParseError(line_no, f"bad quoting: {exc}") from None
    verb = tokens[0]

    if verb == "WINDOW":
        if len(tokens) < 2:
            raise TraceParseError(line_no, "WINDOW needs a subverb")
        sub = tokens[1]
        if sub == "SIZE":
            _arity(tokens, 4, line_no, "WINDOW SIZE <w> <h>")
            return SetWindowSize(_int(tokens[2], line_no, "width"),
                                 _int(tokens[3], line_no, "height"))
        if sub == "TITLE":
            _arity(tokens, 3, line_no, "WINDOW TITLE <text>")
            return SetWindowTitle(tokens[2])
        if sub == "BG":
            _arity(tokens, 3, line_no, "WINDOW BG <color>")
            return SetWindowBackground(tokens[2])
        if sub == "RESIZABLE":
            _arity(tokens, 4, line_no, "WINDOW RESIZABLE <0|1> <0|1>")
            return SetWindowResizable(_flag(tokens[2], line_no, "resizable x"),
                                      _flag(tokens[3], line_no, "resizable y"))
        raise TraceParseError(line_no, f"unknown WINDOW subverb {sub!r}")

    if verb == "KIND":
        _arity(tokens, 2, line_no, "KIND <WidgetKind>")
        try:
            kind = WidgetKind(tokens[1])
        except ValueError:
            raise TraceParseError(line_no, f"unknown widget kind {tokens[1]!r}") from None
        return ChooseKind(kind)

    if verb in ("PRESS", "DRAG", "RELEASE"):
        _arity(tokens, 3, line_no, f"{verb} <x> <y>")
        x = _int(tokens[1], line_no, "x")
        y = _int(tokens[2], line_no, "y")
        cls = {"PRESS": Press, "DRAG": Drag, "RELEASE": Release}[verb]
        return cls(x, y)

    if verb == "FUNC":
        if len(tokens) < 2 or tokens[1] not in FUNC_OPS:
            raise TraceParseError(line_no, f"FUNC needs one of {FUNC_OPS}")
        op = tokens[1]
        if op == "MOVE":
            _arity(tokens, 4, line_no, "FUNC MOVE <dx> <dy>")
            return Func("MOVE", _int(tokens[2], line_no, "dx"),
                        _int(tokens[3], line_no, "dy"))
        _arity(tokens, 2, line_no, f"FUNC {op}")
        return Func(op)

    if verb == "SETPROP":
        _arity(tokens, 4, line_no, "SETPROP <widget> <prop> <value>")
        return SetProp(tokens[1], tokens[2], tokens[3])

    if verb == "BIND":
        _arity(tokens, 4, line_no, "BIND <widget> <trigger> <handler>")
        trigger = tokens[2]
        if trigger != "command" and not (trigger.startswith("<") and trigger.endswith(">")):
            raise TraceParseError(
                line_no, f"trigger must be `command` or a <sequence>, got {trigger!r}"
            )
        return Bind(tokens[1], trigger, tokens[3])

    if verb == "MENU":
        if len(tokens) < 2:
            raise TraceParseError(line_no, "MENU needs a subverb")
        sub = tokens[1]
        if sub == "+X":
            _arity(tokens, 4, line_no, 'MENU +X <title> <width>')
            return MenuAddSubmenu(tokens[2], _int(tokens[3], line_no, "width"))
        if sub == "-X":
            _arity(tokens, 3, line_no, "MENU -X <serial>")
            return MenuDeleteSubmenu(_int(tokens[2], line_no, "serial"))
        if sub == "+Y":
            if len(tokens) not in (4, 5):
                raise TraceParseError(line_no, "expected `MENU +Y <serial> <label|-> [<index>]`")
            serial = _int(tokens[2], line_no, "serial")
            label = None if tokens[3] == "-" else tokens[3]
            index = _int(tokens[4], line_no, "index") if len(tokens) == 5 else None
            return MenuAddItem(serial, label, index)
        if sub == "-Y":
            _arity(tokens, 4, line_no, "MENU -Y <serial> <index>")
            return MenuDeleteItem(_int(tokens[2], line_no, "serial"),
                                  _int(tokens[3], line_no, "index"))
        raise TraceParseError(line_no, f"unknown MENU subverb {sub!r}")

    if verb == "GRID":
        if len(tokens) == 2 and tokens[1] in ("ON", "OFF"):
            return SetGridEnabled(tokens[1] == "ON")
        if len(tokens) == 3 and tokens[1] == "SIZE":
            size = _int(tokens[2], line_no, "grid size")
            if size < 1:
                raise TraceParseError(line_no, "grid size must be >= 1")
            return SetGridSize(size)
        raise TraceParseError(line_no, "expected `GRID ON|OFF` or `GRID SIZE <n>`")

    if verb == "LOCK":
        if len(tokens) == 2 and tokens[1] in ("ON", "OFF"):
            return SetLock(tokens[1] == "ON")
        raise TraceParseError(line_no, "expected `LOCK ON|OFF`")

    if verb == "COMPILE":
        _arity(tokens, 1, line_no, "COMPILE")
        return Compile()

    raise TraceParseError(line_no, f"unknown verb {verb!r}")


def parse_trace(text: str) -> list[tuple[int, Command]]:
    """Parse a whole trace; yields (line_no, command) for real commands."""
    commands: list[tuple[int, Command]] = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        command = parse_line(line, line_no)
        if command is not None:
            commands.append((line_no, command))
    return commands


def _quote(value: str) -> str:
    if "\n" in value or "\r" in value:
        # The framing unit is the line; such values only exist off-wire.
        raise ValueError("trace values cannot contain newlines")
    if value and all(c not in ' \t"\'#\\' for c in value):
        return value
    return '"' + value.replace("\\", "\\\\").replace('"', '\\"') + '"'


def format_command(command: Command) -> str:
    """Render a command back to its trace line (parse_line inverse)."""
    if isinstance(command, SetWindowSize):
        return f"WINDOW SIZE {command.width} {command.height}"
    if isinstance(command, SetWindowTitle):
        return f"WINDOW TITLE {_quote(command.title)}"
    if isinstance(command, SetWindowBackground):
        return f"WINDOW BG {_quote(command.background)}"
    if isinstance(command, SetWindowResizable):
        return f"WINDOW RESIZABLE {int(command.x)} {int(command.y)}"
    if isinstance(command, ChooseKind):
        return f"KIND {command.kind.value}"
    if isinstance(command, Press):
        return f"PRESS {command.x} {command.y}"
    if isinstance(command, Drag):
        return f"DRAG {command.x} {command.y}"
    if isinstance(command, Release):
        return f"RELEASE {command.x} {command.y}"
    if isinstance(command, Func):
        if command.op == "MOVE":
            return f"FUNC MOVE {command.dx} {command.dy}"
        return f"FUNC {command.op}"
    if isinstance(command, SetProp):
        return f"SETPROP {command.widget} {command.prop} {_quote(command.value)}"
    if isinstance(command, Bind):
        return f"BIND {command.widget} {_quote(command.trigger)} {command.handler}"
    if isinstance(command, MenuAddSubmenu):
        return f"MENU +X {_quote(command.title)} {command.width}"
    if isinstance(command, MenuDeleteSubmenu):
        return f"MENU -X {command.serial}"
    if isinstance(command, MenuAddItem):
        label = "-" if command.label is None else _quote(command.label)
        suffix = "" if command.index is None else f" {command.index}"
        return f"MENU +Y {command.serial} {label}{suffix}"
    if isinstance(command, MenuDeleteItem):
        return f"MENU -Y {command.serial} {command.index}"
    if isinstance(command, SetGridEnabled):
        return f"GRID {'ON' if command.enabled else 'OFF'}"
    if isinstance(command, SetGridSize):
        return f"GRID SIZE {command.size}"
    if isinstance(command, SetLock):
        return f"LOCK {'ON' if command.enabled else 'OFF'}"
    if isinstance(command, Compile):
        return "COMPILE"
    raise TypeError(f"not a trace command: {command!r}")
