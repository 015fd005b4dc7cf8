"""tkdraft: a headless canvas GUI designer.

Draw widgets on a simulated window with click-drag gestures (live or via
recorded traces), keep the design in a validated document, and compile it
to runnable Tk-dialect source text.
"""

__version__ = "0.1.0"

from .codegen import generate, generate_widget, parse_generated, round_trip_equal
from .engine import (
    EngineSession,
    GestureState,
    Point,
    Selection,
    SelectionRect,
    apply_move,
    begin_draw,
    commit_draw,
    commit_select,
    prototype_size,
    replay_trace,
    update_draw,
)
from .menu import (
    MenuItem,
    MenuModel,
    SubmenuButton,
    add_item,
    add_submenu,
    delete_item,
    delete_submenu,
    submenu_origin,
    visible_submenus,
)
from .model import (
    DesignDocument,
    EventBinding,
    Rect,
    Widget,
    WidgetKind,
    WindowSettings,
    add_widget,
    auto_name,
    new_document,
    rects_overlap,
    remove_widget,
)
from .persistence import document_to_bytes, load, loads, save
from .properties import (
    ChangeEvent,
    PropertyDescriptor,
    bind_event,
    capability_matrix,
    get_property,
    list_properties,
    set_property,
    supports,
)
