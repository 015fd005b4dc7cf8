"""Property registry: the kind-vs-property capability matrix, typed
get/set with change notification, and event bindings.

The matrix is parsed once from data/capabilities.txt; x0, y0, and name
are grafted on as universal synthetic rows (container already spans the
whole matrix). Geometry (x0/y0/width/height) and identity (name,
container) properties route to the widget's rect and identity fields;
command routes to the widget's command binding; everything else lives in
the plain property map.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from .errors import (
    BadHandlerName,
    CommandUnsupported,
    TypeMismatch,
    UnknownProperty,
    UnsupportedProperty,
)
from .model import (
    DesignDocument,
    EventBinding,
    IDENTIFIER_RE,
    Rect,
    Widget,
    WidgetKind,
    check_placement,
    is_reserved_name,
    rename_widget,
    set_container,
    validate_color,
)

RELIEF_VALUES = ("flat", "raised", "sunken", "groove", "ridge")
STATE_VALUES = ("normal", "disabled")

TEXT = "text"
INTEGER = "integer"
COLOR = "color"
ENUM = "enum"
BOOLEAN = "boolean"


@dataclass(frozen=True)
class PropertyDescriptor:
    name: str
    value_type: str
    default: object
    choices: tuple[str, ...] = ()


# Registry order follows the capability file's row order; the synthetic
# geometry/identity additions come last.
_DESCRIPTORS = [
    PropertyDescriptor("container", TEXT, "self"),
    PropertyDescriptor("anchor", TEXT, ""),
    PropertyDescriptor("cursor", TEXT, ""),
    PropertyDescriptor("font", TEXT, ""),
    PropertyDescriptor("bitmap", TEXT, ""),
    PropertyDescriptor("justify", TEXT, ""),
    PropertyDescriptor("image", TEXT, ""),
    PropertyDescriptor("width", INTEGER, 1),
    PropertyDescriptor("height", INTEGER, 1),
    PropertyDescriptor("foreground", COLOR, ""),
    PropertyDescriptor("background", COLOR, ""),
    PropertyDescriptor("padx", INTEGER, 0),
    PropertyDescriptor("pady", INTEGER, 0),
    PropertyDescriptor("relief", ENUM, "flat", RELIEF_VALUES),
    PropertyDescriptor("text", TEXT, ""),
    PropertyDescriptor("state", ENUM, "normal", STATE_VALUES),
    PropertyDescriptor("takefocus", BOOLEAN, True),
    PropertyDescriptor("highlightcolor", COLOR, ""),
    PropertyDescriptor("highlightbackground", COLOR, ""),
    PropertyDescriptor("command", TEXT, ""),
    PropertyDescriptor("length", INTEGER, 0),
    PropertyDescriptor("x0", INTEGER, 0),
    PropertyDescriptor("y0", INTEGER, 0),
    PropertyDescriptor("name", TEXT, ""),
]

DESCRIPTORS: dict[str, PropertyDescriptor] = {d.name: d for d in _DESCRIPTORS}

# Properties that never sit in the widget's plain property map.
GEOMETRY_PROPS = frozenset({"x0", "y0", "width", "height"})
IDENTITY_PROPS = frozenset({"name", "container"})
SPECIAL_PROPS = GEOMETRY_PROPS | IDENTITY_PROPS | {"command"}

# Rows added on top of the capability file; true for every kind.
_SYNTHETIC_ROWS = ("x0", "y0", "name")


def _load_matrix() -> dict[str, dict[str, bool]]:
    text = (
        resources.files("tkdraft").joinpath("data/capabilities.txt").read_text("utf-8")
    )
    kinds: list[str] = []
    matrix: dict[str, dict[str, bool]] = {}
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if fields[0] == "kinds":
            kinds = fields[1:]
            continue
        if not kinds:
            raise ValueError("capability file: property row before the kinds header")
        prop, cells = fields[0], fields[1:]
        if len(cells) != len(kinds):
            raise ValueError(f"capability file: row {prop!r} has {len(cells)} cells")
        matrix[prop] = {k: c == "1" for k, c in zip(kinds, cells)}
    for prop in _SYNTHETIC_ROWS:
        matrix[prop] = {k: True for k in kinds}
    return matrix


_MATRIX = _load_matrix()


def supports(kind: WidgetKind, prop: str) -> bool:
    """Capability-matrix cell for (kind, prop); Menu supports nothing here."""
    if prop not in DESCRIPTORS:
        raise UnknownProperty(prop)
    row = _MATRIX[prop]
    return row.get(kind.value, False)


def list_properties(kind: WidgetKind) -> list[PropertyDescriptor]:
    """Descriptors of every property the kind supports, in registry order."""
    return [d for d in _DESCRIPTORS if supports(kind, d.name)]


def capability_matrix() -> dict[str, dict[str, bool]]:
    """A copy of the full matrix (property -> kind -> supported)."""
    return {prop: dict(row) for prop, row in _MATRIX.items()}


@dataclass(frozen=True)
class ChangeEvent:
    widget: str
    prop: str
    old: object
    new: object


def _coerce(descriptor: PropertyDescriptor, value: object) -> object:
    prop = descriptor.name
    if descriptor.value_type == INTEGER:
        if isinstance(value, bool) or not isinstance(value, int):
            raise TypeMismatch(prop, f"expected integer, got {value!r}")
        if prop in ("width", "height") and value < 1:
            raise TypeMismatch(prop, f"must be >= 1, got {value}")
        if prop in ("x0", "y0") and value < 0:
            raise TypeMismatch(prop, f"must be >= 0, got {value}")
        return value
    if descriptor.value_type == BOOLEAN:
        if not isinstance(value, bool):
            raise TypeMismatch(prop, f"expected boolean, got {value!r}")
        return value
    if not isinstance(value, str):
        raise TypeMismatch(prop, f"expected {descriptor.value_type}, got {value!r}")
    if descriptor.value_type == COLOR and not validate_color(value):
        raise TypeMismatch(prop, f"{value!r} is not a #rgb/#rrggbb/name color")
    if descriptor.value_type == ENUM and value not in descriptor.choices:
        raise TypeMismatch(prop, f"{value!r} not one of {descriptor.choices}")
    if prop in ("command", "name") and value and not IDENTIFIER_RE.match(value):
        raise TypeMismatch(prop, f"{value!r} is not a valid identifier")
    return value


def _require(doc: DesignDocument, name: str, prop: str) -> Widget:
    widget = doc.find(name)
    if not supports(widget.kind, prop):
        raise UnsupportedProperty(widget.kind.value, prop)
    return widget


def get_property(doc: DesignDocument, name: str, prop: str) -> object:
    """Current value, falling back to the descriptor default when unset."""
    widget = _require(doc, name, prop)
    if prop in GEOMETRY_PROPS:
        return getattr(widget.rect, prop)
    if prop == "name":
        return widget.name
    if prop == "container":
        return widget.container
    if prop == "command":
        binding = widget.command_binding()
        return binding.handler if binding else ""
    return widget.properties.get(prop, DESCRIPTORS[prop].default)


def set_property(doc: DesignDocument, name: str, prop: str, value: object) -> ChangeEvent:
    """Store a value and notify observers; geometry edits re-validate the
    non-overlap and bounds laws before anything changes."""
    widget = _require(doc, name, prop)
    descriptor = DESCRIPTORS[prop]
    value = _coerce(descriptor, value)
    old = get_property(doc, name, prop)
    if prop in GEOMETRY_PROPS:
        rect = widget.rect
        geometry = {
            "x0": rect.x0, "y0": rect.y0, "width": rect.width, "height": rect.height,
        }
        geometry[prop] = value
        new_rect = Rect(**geometry)
        check_placement(doc, new_rect, name, ignore=frozenset({name}))
        widget.rect = new_rect
    elif prop == "name":
        if not value:
            raise TypeMismatch(prop, "name cannot be empty")
        rename_widget(doc, name, str(value))
        name = str(value)
    elif prop == "container":
        set_container(doc, name, str(value))
    elif prop == "command":
        widget.events = [b for b in widget.events if b.trigger != "command"]
        if value:
            widget.events.append(EventBinding(name, "command", str(value)))
    else:
        widget.properties[prop] = value
    event = ChangeEvent(name, prop, old, value)
    for observer in doc.observers:
        observer(event)
    return event


def validate_widget_content(widget: Widget) -> None:
    """Enforce the capability matrix on a widget's property map and events
    (add_widget and document loading both funnel through this)."""
    for prop, value in widget.properties.items():
        if prop not in DESCRIPTORS:
            raise UnknownProperty(prop)
        if prop in SPECIAL_PROPS:
            raise TypeMismatch(prop, "belongs to the rect/identity, not the property map")
        if not supports(widget.kind, prop):
            raise UnsupportedProperty(widget.kind.value, prop)
        _coerce(DESCRIPTORS[prop], value)
    for binding in widget.events:
        if binding.widget != widget.name:
            raise TypeMismatch("events", f"binding names {binding.widget!r}")
        if not IDENTIFIER_RE.match(binding.handler) or is_reserved_name(binding.handler):
            raise BadHandlerName(binding.handler)
        if binding.trigger == "command" and not supports(widget.kind, "command"):
            raise CommandUnsupported(widget.kind.value)


def bind_event(doc: DesignDocument, name: str, trigger: str, handler: str) -> EventBinding:
    """Attach a handler; last write wins per (widget, trigger) pair."""
    widget = doc.find(name)
    if not IDENTIFIER_RE.match(handler) or is_reserved_name(handler):
        raise BadHandlerName(handler)
    if trigger == "command" and not supports(widget.kind, "command"):
        raise CommandUnsupported(widget.kind.value)
    binding = EventBinding(name, trigger, handler)
    widget.events = [b for b in widget.events if b.trigger != trigger]
    widget.events.append(binding)
    return binding
