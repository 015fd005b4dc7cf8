"""Menu-bar model: submenu buttons in a row, per-submenu item lists.

Submenu buttons get strictly increasing serial numbers that are never
reused. Deleting a button retires its serial into the deleted list; the
layout offset of every live button is the sum of the widths of the live
buttons with smaller serials. Offsets are kept as an eagerly recomputed
cache so lookups stay O(1).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .errors import (
    AlreadyDeleted,
    DeletedSubmenu,
    IndexOutOfRange,
    InvalidWidth,
    UnknownSerial,
)


@dataclass(frozen=True)
class SubmenuButton:
    serial: int
    title: str
    width: int


@dataclass(frozen=True)
class MenuItem:
    """One entry of a submenu list: a labelled command or a separator."""

    label: Optional[str] = None
    separator: bool = False

    def __post_init__(self) -> None:
        if self.separator and self.label is not None:
            raise ValueError("separator items carry no label")
        if not self.separator and self.label is None:
            raise ValueError("non-separator items need a label")

    @classmethod
    def command(cls, label: str) -> MenuItem:
        return cls(label=label)

    @classmethod
    def divider(cls) -> MenuItem:
        return cls(separator=True)


@dataclass
class MenuModel:
    buttons: dict[int, SubmenuButton] = field(default_factory=dict)
    items: dict[int, list[MenuItem]] = field(default_factory=dict)
    deleted: list[int] = field(default_factory=list)
    offsets: dict[int, int] = field(default_factory=dict)
    y0: int = 0

    def live_serials(self) -> list[int]:
        return sorted(self.buttons)

    def _require_live(self, serial: int) -> None:
        if serial in self.buttons:
            return
        if serial in self.deleted:
            raise DeletedSubmenu(serial)
        raise UnknownSerial(serial)


def recompute_offsets(menu: MenuModel) -> None:
    offsets: dict[int, int] = {}
    total = 0
    for serial in menu.live_serials():
        offsets[serial] = total
        total += menu.buttons[serial].width
    menu.offsets = offsets


def add_submenu(menu: MenuModel, title: str, width: int) -> int:
    """Append a submenu button; serials are assigned in order and only grow."""
    if not isinstance(width, int) or width < 1:
        raise InvalidWidth(width)
    assigned = set(menu.buttons) | set(menu.deleted)
    serial = max(assigned, default=0) + 1
    menu.buttons[serial] = SubmenuButton(serial, title, width)
    menu.items[serial] = []
    recompute_offsets(menu)
    return serial


def delete_submenu(menu: MenuModel, serial: int) -> None:
    """Retire a serial: drop the button and its items, keep the serial burnt."""
    if serial in menu.deleted:
        raise AlreadyDeleted(serial)
    if serial not in menu.buttons:
        raise UnknownSerial(serial)
    menu.deleted.append(serial)
    del menu.buttons[serial]
    del menu.items[serial]
    recompute_offsets(menu)


def add_item(
    menu: MenuModel, serial: int, item: MenuItem, position: Optional[int] = None
) -> None:
    """Insert an item; position None appends, otherwise items at and above
    the index shift up by one."""
    menu._require_live(serial)
    entries = menu.items[serial]
    if position is None:
        entries.append(item)
        return
    if position < 0 or position > len(entries):
        raise IndexOutOfRange(serial, position, len(entries))
    entries.insert(position, item)


def delete_item(menu: MenuModel, serial: int, index: int) -> None:
    """Remove the item at index; items above it shift down by one."""
    menu._require_live(serial)
    entries = menu.items[serial]
    if index < 0 or index >= len(entries):
        raise IndexOutOfRange(serial, index, len(entries))
    del entries[index]


def submenu_origin(menu: MenuModel, serial: int) -> tuple[int, int]:
    """Top-left corner of the submenu list: the summed widths of live
    lower-serial buttons, on the menu-bar baseline."""
    menu._require_live(serial)
    return (menu.offsets[serial], menu.y0)


def visible_submenus(menu: MenuModel) -> list[tuple[int, str, tuple[int, int]]]:
    """Live submenus in serial order with their computed origins."""
    return [
        (serial, menu.buttons[serial].title, submenu_origin(menu, serial))
        for serial in menu.live_serials()
    ]
