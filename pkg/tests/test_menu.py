"""Menu model: serial assignment, offset formula, item list edits."""

from __future__ import annotations

import pytest

from tkdraft.errors import (
    AlreadyDeleted,
    DeletedSubmenu,
    IndexOutOfRange,
    InvalidWidth,
    UnknownSerial,
)
from tkdraft.menu import (
    MenuItem,
    MenuModel,
    add_item,
    add_submenu,
    delete_item,
    delete_submenu,
    submenu_origin,
    visible_submenus,
)


def brute_force_offset(widths: dict[int, int], deleted: set[int], serial: int) -> int:
    """Independent oracle: sum widths of live lower serials."""
    return sum(w for s, w in widths.items() if s < serial and s not in deleted)


def test_first_submenu_at_zero():
    menu = MenuModel()
    serial = add_submenu(menu, "File", 40)
    assert serial == 1
    assert submenu_origin(menu, 1) == (0, 0)


def test_second_submenu_offset_is_first_width():
    menu = MenuModel()
    add_submenu(menu, "File", 40)
    serial = add_submenu(menu, "Edit", 50)
    assert serial == 2
    assert submenu_origin(menu, 2) == (40, 0)


def test_serial_skips_deleted_and_offset_ignores_it():
    menu = MenuModel()
    for title, width in [("File", 40), ("Edit", 50), ("View", 60)]:
        add_submenu(menu, title, width)
    delete_submenu(menu, 2)
    serial = add_submenu(menu, "Help", 30)
    assert serial == 4
    assert submenu_origin(menu, 4) == (40 + 60, 0)


def test_direct_sum_without_deletions():
    menu = MenuModel()
    for title, width in [("a", 40), ("b", 50), ("c", 60)]:
        add_submenu(menu, title, width)
    assert submenu_origin(menu, 3) == (90, 0)


def test_invalid_width():
    menu = MenuModel()
    with pytest.raises(InvalidWidth):
        add_submenu(menu, "File", 0)


def test_delete_semantics():
    menu = MenuModel()
    for title in ("a", "b", "c"):
        add_submenu(menu, title, 10)
    delete_submenu(menu, 2)
    assert [s for s, _, _ in visible_submenus(menu)] == [1, 3]
    with pytest.raises(AlreadyDeleted):
        delete_submenu(menu, 2)
    with pytest.raises(UnknownSerial):
        delete_submenu(menu, 9)
    with pytest.raises(DeletedSubmenu):
        submenu_origin(menu, 2)


def test_delete_shrinks_higher_offsets():
    menu = MenuModel()
    for width in (40, 50, 60):
        add_submenu(menu, "m", width)
    before = {s: submenu_origin(menu, s)[0] for s in (2, 3)}
    delete_submenu(menu, 1)
    assert submenu_origin(menu, 2)[0] == before[2] - 40
    assert submenu_origin(menu, 3)[0] == before[3] - 40


def test_delete_never_touches_other_item_lists():
    menu = MenuModel()
    add_submenu(menu, "a", 10)
    add_submenu(menu, "b", 10)
    add_item(menu, 1, MenuItem.command("keep"))
    add_item(menu, 2, MenuItem.command("drop"))
    delete_submenu(menu, 2)
    assert [i.label for i in menu.items[1]] == ["keep"]


class TestItems:
    def test_append(self):
        menu = MenuModel()
        add_submenu(menu, "File", 40)
        add_item(menu, 1, MenuItem.command("Open"))
        assert len(menu.items[1]) == 1

    def test_insert_shifts_up(self):
        menu = MenuModel()
        add_submenu(menu, "File", 40)
        for label in ("A", "B"):
            add_item(menu, 1, MenuItem.command(label))
        add_item(menu, 1, MenuItem.command("X"), position=0)
        assert [i.label for i in menu.items[1]] == ["X", "A", "B"]

    def test_delete_last_truncates(self):
        menu = MenuModel()
        add_submenu(menu, "File", 40)
        for label in ("A", "B", "C"):
            add_item(menu, 1, MenuItem.command(label))
        delete_item(menu, 1, 2)
        assert [i.label for i in menu.items[1]] == ["A", "B"]

    def test_delete_first_shifts_down(self):
        menu = MenuModel()
        add_submenu(menu, "File", 40)
        for label in ("A", "B", "C"):
            add_item(menu, 1, MenuItem.command(label))
        delete_item(menu, 1, 0)
        assert [i.label for i in menu.items[1]] == ["B", "C"]

    def test_separator_has_no_label(self):
        item = MenuItem.divider()
        assert item.separator and item.label is None
        with pytest.raises(ValueError):
            MenuItem(label="x", separator=True)

    def test_index_errors(self):
        menu = MenuModel()
        add_submenu(menu, "File", 40)
        with pytest.raises(IndexOutOfRange):
            delete_item(menu, 1, 0)
        with pytest.raises(IndexOutOfRange):
            add_item(menu, 1, MenuItem.command("A"), position=1)
        with pytest.raises(UnknownSerial):
            add_item(menu, 5, MenuItem.command("A"))
        delete_submenu(menu, 1)
        with pytest.raises(DeletedSubmenu):
            add_item(menu, 1, MenuItem.command("A"))


def test_random_sequences_match_naive_model(rng):
    """Offsets equal the brute-force sum and item lists equal plain-list
    edits after every operation, over 1000 random op sequences."""
    for _ in range(1000):
        menu = MenuModel()
        widths: dict[int, int] = {}
        deleted: set[int] = set()
        naive_items: dict[int, list] = {}
        for _ in range(rng.randint(1, 25)):
            live = sorted(widths.keys() - deleted)
            op = rng.random()
            if op < 0.4 or not live:
                width = rng.randint(1, 60)
                serial = add_submenu(menu, f"m{len(widths)}", width)
                widths[serial] = width
                naive_items[serial] = []
            elif op < 0.55:
                serial = rng.choice(live)
                delete_submenu(menu, serial)
                deleted.add(serial)
                del naive_items[serial]
            elif op < 0.85:
                serial = rng.choice(live)
                label = f"i{rng.randint(0, 99)}"
                item = MenuItem.command(label)
                if rng.random() < 0.4 and naive_items[serial]:
                    position = rng.randint(0, len(naive_items[serial]))
                    add_item(menu, serial, item, position)
                    naive_items[serial].insert(position, label)
                else:
                    add_item(menu, serial, item)
                    naive_items[serial].append(label)
            else:
                serial = rng.choice(live)
                if not naive_items[serial]:
                    continue
                index = rng.randrange(len(naive_items[serial]))
                delete_item(menu, serial, index)
                del naive_items[serial][index]
            live_now = sorted(widths.keys() - deleted)
            for serial in live_now:
                expected = brute_force_offset(widths, deleted, serial)
                assert submenu_origin(menu, serial) == (expected, menu.y0)
            assert {s: [i.label for i in menu.items[s]] for s in live_now} == naive_items
            offsets = [submenu_origin(menu, s)[0] for s in live_now]
            assert offsets == sorted(offsets)
            assert len(set(offsets)) == len(offsets)


def _snapshot(menu: MenuModel):
    return (
        dict(menu.buttons),
        {s: list(items) for s, items in menu.items.items()},
        sorted(menu.deleted),
        dict(menu.offsets),
    )


def test_ops_on_distinct_serials_commute(rng):
    """After a fixed +X prefix, -X/+Y/-Y operations aimed at different
    submenus can run in either order with the same result."""
    def fresh() -> MenuModel:
        menu = MenuModel()
        for i in range(4):
            serial = add_submenu(menu, f"m{i}", 10 * (i + 1))
            for j in range(3):
                add_item(menu, serial, MenuItem.command(f"i{j}"))
        return menu

    operations = {
        "del_sub_2": lambda m: delete_submenu(m, 2),
        "del_sub_3": lambda m: delete_submenu(m, 3),
        "add_item_1": lambda m: add_item(m, 1, MenuItem.command("new"), 1),
        "del_item_4": lambda m: delete_item(m, 4, 0),
        "sep_end_1": lambda m: add_item(m, 1, MenuItem.divider()),
    }
    pairs = [("del_sub_2", "add_item_1"), ("del_sub_3", "del_item_4"),
             ("add_item_1", "del_item_4"), ("sep_end_1", "del_sub_2"),
             ("del_sub_2", "del_sub_3")]
    for first, second in pairs:
        menu_a, menu_b = fresh(), fresh()
        operations[first](menu_a)
        operations[second](menu_a)
        operations[second](menu_b)
        operations[first](menu_b)
        assert _snapshot(menu_a) == _snapshot(menu_b)
