"""Design document core: window, widgets, naming, and the non-overlap law.

The document is the single source of truth for a design session. All
mutations arrive on one serialized command stream (see engine); the
functions here validate before they touch the document, so a rejected
mutation leaves it untouched.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Optional

from .errors import (
    DuplicateNameError,
    OutOfBoundsError,
    OverlapError,
    UnknownNameError,
    ValidationError,
)
from .menu import MenuModel

IDENTIFIER_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")
COLOR_RE = re.compile(r"^(#[0-9a-fA-F]{3}|#[0-9a-fA-F]{6}|[A-Za-z]+)$")

# Names the code generator claims for itself.
RESERVED_NAMES = frozenset({"self", "tk", "ttk", "Menu1"})
_RESERVED_PATTERN = re.compile(r"^Menu1_Sub\d+$")

DEFAULT_BACKGROUND = "#f0f0f0"


class WidgetKind(str, Enum):
    """The closed set of drawable controls. Menu is edited separately."""

    BUTTON = "Button"
    CANVAS = "Canvas"
    CHECKBUTTON = "Checkbutton"
    COMBOBOX = "Combobox"
    ENTRY = "Entry"
    FRAME = "Frame"
    LABEL = "Label"
    LABELFRAME = "LabelFrame"
    LISTBOX = "Listbox"
    MESSAGE = "Message"
    PANEDWINDOW = "PanedWindow"
    RADIOBUTTON = "Radiobutton"
    SCALE = "Scale"
    SPINBOX = "Spinbox"
    TEXT = "Text"
    MENU = "Menu"


RECT_KINDS: tuple[WidgetKind, ...] = tuple(
    k for k in WidgetKind if k is not WidgetKind.MENU
)

# Kinds that may act as a container for other widgets.
CONTAINER_KINDS = frozenset(
    {WidgetKind.FRAME, WidgetKind.LABELFRAME, WidgetKind.PANEDWINDOW}
)


def parse_kind(token: str) -> WidgetKind:
    try:
        return WidgetKind(token)
    except ValueError:
        raise ValidationError(f"unknown widget kind {token!r}") from None


def is_reserved_name(name: str) -> bool:
    return name in RESERVED_NAMES or bool(_RESERVED_PATTERN.match(name))


def validate_identifier(name: str) -> None:
    if not IDENTIFIER_RE.match(name):
        raise ValidationError(f"{name!r} is not a valid identifier")


def validate_color(value: str) -> bool:
    """Color grammar: #rgb, #rrggbb, or an alphabetic name. '' clears."""
    return value == "" or bool(COLOR_RE.match(value))


@dataclass(frozen=True)
class WindowSettings:
    """Simulated window parameters; the canvas is exactly this big."""

    title: str = ""
    width: int = 400
    height: int = 300
    background: str = DEFAULT_BACKGROUND
    resizable_x: bool = True
    resizable_y: bool = True

    def __post_init__(self) -> None:
        if not isinstance(self.width, int) or not isinstance(self.height, int):
            raise ValidationError("window width/height must be integers")
        if self.width < 1 or self.height < 1:
            raise ValidationError(
                f"window size must be at least 1x1, got {self.width}x{self.height}"
            )
        if not validate_color(self.background):
            raise ValidationError(f"bad window background {self.background!r}")


@dataclass(frozen=True)
class Rect:
    """Axis-aligned widget box. Origin is the top-left corner of the canvas;
    x grows right, y grows down."""

    x0: int
    y0: int
    width: int
    height: int

    def __post_init__(self) -> None:
        for name in ("x0", "y0", "width", "height"):
            if not isinstance(getattr(self, name), int):
                raise ValidationError(f"rect {name} must be an integer")
        if self.x0 < 0 or self.y0 < 0:
            raise ValidationError(f"rect origin must be >= 0, got ({self.x0}, {self.y0})")
        if self.width < 1 or self.height < 1:
            raise ValidationError(
                f"rect extent must be >= 1, got {self.width}x{self.height}"
            )

    @property
    def x1(self) -> int:
        return self.x0 + self.width

    @property
    def y1(self) -> int:
        return self.y0 + self.height

    def translated(self, dx: int, dy: int) -> Rect:
        return Rect(self.x0 + dx, self.y0 + dy, self.width, self.height)

    def contains(self, other: Rect) -> bool:
        """Full containment; touching this rect's boundary still counts."""
        return (
            self.x0 <= other.x0
            and self.y0 <= other.y0
            and other.x1 <= self.x1
            and other.y1 <= self.y1
        )


def rects_overlap(a: Rect, b: Rect) -> bool:
    """True iff the interiors intersect; edge or corner contact is legal."""
    return a.x0 < b.x1 and b.x0 < a.x1 and a.y0 < b.y1 and b.y0 < a.y1


def rect_inside_window(rect: Rect, window: WindowSettings) -> bool:
    return rect.x1 <= window.width and rect.y1 <= window.height


@dataclass(frozen=True)
class EventBinding:
    """One trigger on one widget. trigger is either the literal "command"
    or a bind-sequence string such as "<Button-1>"."""

    widget: str
    trigger: str
    handler: str


@dataclass
class Widget:
    kind: WidgetKind
    name: str
    rect: Rect
    container: str = "self"
    properties: dict[str, object] = field(default_factory=dict)
    events: list[EventBinding] = field(default_factory=list)

    def __post_init__(self) -> None:
        if self.kind is WidgetKind.MENU:
            raise ValidationError("Menu is not a rect widget; use the menu model")
        validate_identifier(self.name)
        if is_reserved_name(self.name):
            raise DuplicateNameError(self.name, "is reserved by the code generator")
        if self.container != "self":
            validate_identifier(self.container)

    def command_binding(self) -> Optional[EventBinding]:
        for b in self.events:
            if b.trigger == "command":
                return b
        return None


@dataclass
class DesignDocument:
    """Window settings plus the ordered widget list and the optional menu.

    Widget order is creation order; code generation emits in this order.
    The observer list carries property-change callbacks and is not part
    of the persisted document.
    """

    window: WindowSettings = field(default_factory=WindowSettings)
    widgets: list[Widget] = field(default_factory=list)
    menu: Optional[MenuModel] = None
    name_counters: dict[str, int] = field(default_factory=dict)
    observers: list[Callable] = field(default_factory=list, compare=False, repr=False)

    def find(self, name: str) -> Widget:
        for w in self.widgets:
            if w.name == name:
                return w
        raise UnknownNameError(name)

    def has(self, name: str) -> bool:
        return any(w.name == name for w in self.widgets)


def new_document(window: WindowSettings) -> DesignDocument:
    """Start an empty design for the given window."""
    return DesignDocument(window=window)


def peek_auto_name(doc: DesignDocument, kind: WidgetKind) -> str:
    """The name auto_name would hand out next, without consuming it."""
    if kind is WidgetKind.MENU:
        raise ValidationError("Menu widgets are not auto-named")
    return f"{kind.value}{doc.name_counters.get(kind.value, 0) + 1}"


def auto_name(doc: DesignDocument, kind: WidgetKind) -> str:
    """Hand out "<Kind><n>" and bump the per-kind counter.

    Counters only ever increase, so deleted names are never reused.
    """
    name = peek_auto_name(doc, kind)
    doc.name_counters[kind.value] = doc.name_counters.get(kind.value, 0) + 1
    return name


def check_placement(
    doc: DesignDocument,
    rect: Rect,
    name: str = "<pending>",
    ignore: frozenset[str] = frozenset(),
) -> None:
    """Raise if rect leaves the canvas or overlaps a widget not in ignore."""
    if not rect_inside_window(rect, doc.window):
        raise OutOfBoundsError(
            f"{name} at ({rect.x0}, {rect.y0}) size {rect.width}x{rect.height} "
            f"does not fit the {doc.window.width}x{doc.window.height} window"
        )
    for other in doc.widgets:
        if other.name in ignore:
            continue
        if rects_overlap(rect, other.rect):
            raise OverlapError(other.name, name)


def add_widget(doc: DesignDocument, widget: Widget) -> Widget:
    """Append a widget, enforcing unique names, bounds, non-overlap, and
    capability-matrix conformance of its properties and events."""
    from .properties import validate_widget_content  # import cycle otherwise

    if doc.has(widget.name):
        raise DuplicateNameError(widget.name)
    check_placement(doc, widget.rect, widget.name)
    _check_container(doc, widget.container)
    validate_widget_content(widget)
    doc.widgets.append(widget)
    return widget


def _check_container(doc: DesignDocument, container: str) -> None:
    if container == "self":
        return
    for w in doc.widgets:
        if w.name == container:
            if w.kind not in CONTAINER_KINDS:
                raise ValidationError(
                    f"{container!r} ({w.kind.value}) cannot act as a container"
                )
            return
    raise UnknownNameError(container)


def set_container(doc: DesignDocument, name: str, container: str) -> None:
    """Point a widget at a new carrier: "self" or an earlier-created
    container-kind widget (so generated code references names in order)."""
    widget = doc.find(name)
    if container != "self":
        validate_identifier(container)
        _check_container(doc, container)
        if doc.widgets.index(doc.find(container)) > doc.widgets.index(widget):
            raise ValidationError(
                f"container {container!r} was created after {name!r}; "
                "generated code would reference it before its definition"
            )
    widget.container = container


def remove_widget(doc: DesignDocument, name: str) -> Widget:
    """Remove a widget (and its bindings with it); order of the rest is kept.

    Widgets that named the removed one as their container fall back to
    "self" so generated code never references an undefined name.
    """
    widget = doc.find(name)
    doc.widgets.remove(widget)
    for other in doc.widgets:
        if other.container == name:
            other.container = "self"
    return widget


def rename_widget(doc: DesignDocument, old: str, new: str) -> None:
    """Rename in place, rewriting the widget's bindings and any container
    references other widgets hold."""
    widget = doc.find(old)
    if new == old:
        return
    validate_identifier(new)
    if is_reserved_name(new):
        raise DuplicateNameError(new, "is reserved by the code generator")
    if doc.has(new):
        raise DuplicateNameError(new)
    widget.name = new
    widget.events = [EventBinding(new, b.trigger, b.handler) for b in widget.events]
    for other in doc.widgets:
        if other.container == old:
            other.container = new
