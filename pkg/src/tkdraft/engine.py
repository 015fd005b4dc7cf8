"""Four-phase interaction engine: draw, commit, select, modify/move.

Live UIs and headless replay drive the same EngineSession.apply() path,
one command at a time. Mid-gesture previews never touch the document;
the commit on mouse release is the sole mutation point.
"""

from __future__ import annotations

import copy
from dataclasses import dataclass, field, replace
from typing import Iterable, Optional

from . import menu as menu_ops
from . import properties as props
from . import trace as tr
from .errors import (
    DesignError,
    DuplicateNameError,
    EmptySelection,
    InteractionStateError,
    MoveCollisionError,
    MoveOutOfBoundsError,
    OutOfBoundsError,
    PointOutsideCanvas,
    TraceReplayError,
    TypeMismatch,
    UnknownProperty,
    ValidationError,
)
from .menu import MenuModel
from .model import (
    DesignDocument,
    Rect,
    Widget,
    WidgetKind,
    WindowSettings,
    auto_name,
    check_placement,
    peek_auto_name,
    rect_inside_window,
    rects_overlap,
    remove_widget,
    validate_color,
)

# Size a bare click (no drag) commits, per kind. Boxy container-ish kinds
# get the larger prototype.
_LARGE_PROTOTYPE = {
    WidgetKind.CANVAS,
    WidgetKind.FRAME,
    WidgetKind.LABELFRAME,
    WidgetKind.PANEDWINDOW,
    WidgetKind.LISTBOX,
    WidgetKind.TEXT,
}

DEFAULT_PROTOTYPE_SIZE = (80, 24)
LARGE_PROTOTYPE_SIZE = (120, 80)


def prototype_size(kind: WidgetKind) -> tuple[int, int]:
    return LARGE_PROTOTYPE_SIZE if kind in _LARGE_PROTOTYPE else DEFAULT_PROTOTYPE_SIZE


@dataclass(frozen=True)
class Point:
    x: int
    y: int


@dataclass
class GestureState:
    """A draw gesture in flight: anchor is the press point, current the
    latest drag point."""

    kind: WidgetKind
    anchor: Point
    current: Point


@dataclass
class SelectionRect:
    """A rubber-band selection in flight."""

    anchor: Point
    current: Point

    def normalized(self) -> tuple[int, int, int, int]:
        x0 = min(self.anchor.x, self.current.x)
        y0 = min(self.anchor.y, self.current.y)
        return (x0, y0, abs(self.current.x - self.anchor.x),
                abs(self.current.y - self.anchor.y))


@dataclass
class Selection:
    names: list[str]
    marked: bool = True


@dataclass
class GridSettings:
    enabled: bool = False
    size: int = 10


def _point_in_canvas(p: Point, window: WindowSettings) -> bool:
    return 0 <= p.x <= window.width and 0 <= p.y <= window.height


def begin_draw(doc: DesignDocument, kind: WidgetKind, p0: Point) -> GestureState:
    """Start drawing: the press point becomes both anchor and current."""
    if kind is WidgetKind.MENU:
        raise ValidationError("Menu cannot be drawn; it is edited via MENU commands")
    if not _point_in_canvas(p0, doc.window):
        raise PointOutsideCanvas(p0.x, p0.y)
    return GestureState(kind, p0, p0)


def update_draw(state: GestureState, p: Point) -> Rect:
    """Advance the drag and return the live preview rect.

    width/height are the absolute deltas; zero extents render as 1 px.
    The preview may stick out of the canvas; clamping waits for commit.
    """
    state.current = p
    x0 = min(state.anchor.x, p.x)
    y0 = min(state.anchor.y, p.y)
    width = abs(p.x - state.anchor.x)
    height = abs(p.y - state.anchor.y)
    return Rect(max(x0, 0), max(y0, 0), max(width, 1), max(height, 1))


def _commit_rect(doc: DesignDocument, state: GestureState,
                 grid: Optional[GridSettings]) -> Rect:
    x0 = min(state.anchor.x, state.current.x)
    y0 = min(state.anchor.y, state.current.y)
    width = abs(state.current.x - state.anchor.x)
    height = abs(state.current.y - state.anchor.y)
    if width == 0 or height == 0:
        width, height = prototype_size(state.kind)
    if grid is not None and grid.enabled:
        x0 = round(x0 / grid.size) * grid.size
        y0 = round(y0 / grid.size) * grid.size
    # Clamp to the canvas: keep the intersection of the drawn box and the
    # simulated window.
    cx0 = max(x0, 0)
    cy0 = max(y0, 0)
    cx1 = min(x0 + width, doc.window.width)
    cy1 = min(y0 + height, doc.window.height)
    if cx1 - cx0 < 1 or cy1 - cy0 < 1:
        raise OutOfBoundsError(
            f"gesture at ({x0}, {y0}) size {width}x{height} leaves no drawable "
            "area inside the window"
        )
    return Rect(cx0, cy0, cx1 - cx0, cy1 - cy0)


def commit_draw(doc: DesignDocument, state: GestureState,
                grid: Optional[GridSettings] = None) -> Widget:
    """Release the mouse: normalize, clamp, name, and store the widget.

    Everything is validated before a name is consumed, so a rejected
    gesture leaves the document (counters included) untouched.
    """
    rect = _commit_rect(doc, state, grid)
    name = peek_auto_name(doc, state.kind)
    if doc.has(name):
        # A widget was manually renamed onto the next auto name.
        raise DuplicateNameError(name)
    check_placement(doc, rect, name)
    widget = Widget(kind=state.kind, name=auto_name(doc, state.kind), rect=rect)
    doc.widgets.append(widget)
    return widget


def commit_select(doc: DesignDocument, sel: SelectionRect) -> Selection:
    """Box selection: exactly the widgets fully contained in the normalized
    rect, boundary contact included; document order is kept."""
    x0, y0, width, height = sel.normalized()
    names = [
        w.name for w in doc.widgets
        if x0 <= w.rect.x0 and y0 <= w.rect.y0
        and w.rect.x1 <= x0 + width and w.rect.y1 <= y0 + height
    ]
    if not names:
        raise EmptySelection("selection box contains no widgets")
    return Selection(names=names)


def apply_move(doc: DesignDocument, selection: Selection | Iterable[str],
               delta: tuple[int, int]) -> None:
    """Translate every selected rect atomically; reject the whole move if
    any moved widget would leave the canvas or hit a non-selected one."""
    names = list(selection.names if isinstance(selection, Selection) else selection)
    dx, dy = delta
    moving = [doc.find(name) for name in names]
    selected = set(names)
    moved_rects: dict[str, Rect] = {}
    for widget in moving:
        rect = widget.rect
        new_x0, new_y0 = rect.x0 + dx, rect.y0 + dy
        if new_x0 < 0 or new_y0 < 0:
            raise MoveOutOfBoundsError(widget.name)
        new_rect = rect.translated(dx, dy)
        if not rect_inside_window(new_rect, doc.window):
            raise MoveOutOfBoundsError(widget.name)
        moved_rects[widget.name] = new_rect
    for widget in moving:
        for other in doc.widgets:
            if other.name in selected:
                continue
            if rects_overlap(moved_rects[widget.name], other.rect):
                raise MoveCollisionError(widget.name, other.name)
    for widget in moving:
        widget.rect = moved_rects[widget.name]


@dataclass
class _ActiveSelection:
    selection: Selection
    # Deep copy of the document taken before the first Move applies;
    # Cancel swaps it back in.
    snapshot: Optional[DesignDocument] = None


@dataclass
class EngineSession:
    """Serialized command stream over one document.

    Exactly one gesture or rubber band is in flight at a time. KIND arms
    a single draw gesture; with nothing armed, press/drag/release runs a
    box selection.
    """

    doc: DesignDocument
    armed_kind: Optional[WidgetKind] = None
    gesture: Optional[GestureState] = None
    rubber: Optional[SelectionRect] = None
    active: Optional[_ActiveSelection] = None
    grid: GridSettings = field(default_factory=GridSettings)
    locked: bool = False
    last_source: Optional[str] = None

    # --- queries used by the UI ---

    def preview(self) -> Optional[Rect]:
        if self.gesture is None:
            return None
        return update_draw(self.gesture, self.gesture.current)

    def selected_names(self) -> list[str]:
        return list(self.active.selection.names) if self.active else []

    # --- the single mutation entry point ---

    def apply(self, command: tr.Command) -> None:
        if isinstance(command, tr.SetWindowSize):
            self._resize_window(command.width, command.height)
        elif isinstance(command, tr.SetWindowTitle):
            self.doc.window = replace(self.doc.window, title=command.title)
        elif isinstance(command, tr.SetWindowBackground):
            if not validate_color(command.background):
                raise ValidationError(f"bad window background {command.background!r}")
            self.doc.window = replace(self.doc.window, background=command.background)
        elif isinstance(command, tr.SetWindowResizable):
            self.doc.window = replace(
                self.doc.window, resizable_x=command.x, resizable_y=command.y
            )
        elif isinstance(command, tr.ChooseKind):
            if command.kind is WidgetKind.MENU:
                self._ensure_menu()
            else:
                self.armed_kind = command.kind
        elif isinstance(command, tr.Press):
            self._press(Point(command.x, command.y))
        elif isinstance(command, tr.Drag):
            self._drag(Point(command.x, command.y))
        elif isinstance(command, tr.Release):
            self._release(Point(command.x, command.y))
        elif isinstance(command, tr.Func):
            self._func(command)
        elif isinstance(command, tr.SetProp):
            value = self._coerce_token(command.prop, command.value)
            props.set_property(self.doc, command.widget, command.prop, value)
        elif isinstance(command, tr.Bind):
            props.bind_event(self.doc, command.widget, command.trigger, command.handler)
        elif isinstance(command, tr.MenuAddSubmenu):
            menu_ops.add_submenu(self._ensure_menu(), command.title, command.width)
        elif isinstance(command, tr.MenuDeleteSubmenu):
            menu_ops.delete_submenu(self._ensure_menu(), command.serial)
        elif isinstance(command, tr.MenuAddItem):
            item = (menu_ops.MenuItem.divider() if command.label is None
                    else menu_ops.MenuItem.command(command.label))
            menu_ops.add_item(self._ensure_menu(), command.serial, item, command.index)
        elif isinstance(command, tr.MenuDeleteItem):
            menu_ops.delete_item(self._ensure_menu(), command.serial, command.index)
        elif isinstance(command, tr.SetGridEnabled):
            self.grid.enabled = command.enabled
        elif isinstance(command, tr.SetGridSize):
            self.grid.size = command.size
        elif isinstance(command, tr.SetLock):
            self.locked = command.enabled
        elif isinstance(command, tr.Compile):
            from .codegen import generate

            self.last_source = generate(self.doc)
        else:
            raise InteractionStateError(f"unhandled command {command!r}")

    # --- helpers ---

    def _ensure_menu(self) -> MenuModel:
        if self.doc.menu is None:
            self.doc.menu = MenuModel()
        return self.doc.menu

    def _resize_window(self, width: int, height: int) -> None:
        new_window = replace(self.doc.window, width=width, height=height)
        for w in self.doc.widgets:
            if not rect_inside_window(w.rect, new_window):
                raise OutOfBoundsError(
                    f"cannot resize to {width}x{height}: {w.name} would not fit"
                )
        self.doc.window = new_window

    def _press(self, p: Point) -> None:
        if self.gesture or self.rubber:
            raise InteractionStateError("press while a gesture is already in flight")
        if self.armed_kind is not None:
            self.gesture = begin_draw(self.doc, self.armed_kind, p)
        else:
            if not _point_in_canvas(p, self.doc.window):
                raise PointOutsideCanvas(p.x, p.y)
            self.rubber = SelectionRect(p, p)

    def _drag(self, p: Point) -> None:
        if self.gesture is not None:
            update_draw(self.gesture, p)
        elif self.rubber is not None:
            self.rubber.current = p
        else:
            raise InteractionStateError("drag with no gesture in flight")

    def _release(self, p: Point) -> None:
        if self.gesture is not None:
            gesture = self.gesture
            update_draw(gesture, p)
            self.gesture = None
            self.armed_kind = None
            commit_draw(self.doc, gesture, self.grid)
        elif self.rubber is not None:
            rubber = self.rubber
            rubber.current = p
            self.rubber = None
            try:
                self.active = _ActiveSelection(commit_select(self.doc, rubber))
            except EmptySelection:
                # Live parity: an empty box just never pops the menu.
                self.active = None
        else:
            raise InteractionStateError("release with no gesture in flight")

    def _func(self, command: tr.Func) -> None:
        if self.active is None:
            raise InteractionStateError(f"FUNC {command.op} with no active selection")
        if command.op == "MOVE":
            if self.active.snapshot is None:
                self.active.snapshot = copy.deepcopy(self.doc)
            apply_move(self.doc, self.active.selection, (command.dx, command.dy))
        elif command.op == "OK":
            self.active = None
        elif command.op == "CANCEL":
            if self.active.snapshot is not None:
                self.doc = self.active.snapshot
            self.active = None
        elif command.op == "DELETE":
            for name in self.active.selection.names:
                remove_widget(self.doc, name)
            self.active = None
        elif command.op == "DESIGN":
            pass  # opens the panels in the UI; nothing to do headlessly

    def _coerce_token(self, prop: str, token: str) -> object:
        descriptor = props.DESCRIPTORS.get(prop)
        if descriptor is None:
            raise UnknownProperty(prop)
        if descriptor.value_type == props.INTEGER:
            try:
                return int(token)
            except ValueError:
                raise TypeMismatch(prop, f"expected integer, got {token!r}") from None
        if descriptor.value_type == props.BOOLEAN:
            if token in ("true", "false"):
                return token == "true"
            raise TypeMismatch(prop, f"expected true/false, got {token!r}")
        return token


def replay_trace(doc: DesignDocument, trace: str | list[tuple[int, tr.Command]]) -> DesignDocument:
    """Apply a trace to a copy of doc and return the final document.

    The input document is never mutated. The first engine error aborts the
    replay, wrapped with the index of the offending command.
    """
    commands = tr.parse_trace(trace) if isinstance(trace, str) else list(trace)
    session = EngineSession(copy.deepcopy(doc))
    for index, (line_no, command) in enumerate(commands):
        try:
            session.apply(command)
        except DesignError as exc:
            raise TraceReplayError(index, line_no, command, exc) from exc
    return session.doc
