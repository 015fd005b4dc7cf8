// DOM panels: control panel, converter text box, properties, events,
// menu editor, function-menu popup, and toasts. Everything re-renders
// from the session's state; the panels own no document data.

import type { DesignerSession } from "./interaction.js";
import { submenuOffsets } from "./geometry.js";
import { supportedDescriptors } from "./registry.js";
import type { PropertyDescriptorPayload, WidgetPayload } from "./types.js";

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  attrs: Record<string, string> = {},
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  for (const [key, value] of Object.entries(attrs)) node.setAttribute(key, value);
  if (text !== undefined) node.textContent = text;
  return node;
}

function measureTitleWidth(title: string): number {
  const canvas = document.createElement("canvas");
  const ctx = canvas.getContext("2d");
  if (!ctx) return 8 * title.length + 16;
  ctx.font = "11px system-ui, sans-serif";
  return Math.max(24, Math.ceil(ctx.measureText(title).width) + 16);
}

export function mountControlPanel(root: HTMLElement, session: DesignerSession): void {
  const render = () => {
    root.innerHTML = "";
    root.append(el("h2", {}, "Control Panel"));

    const kinds = el("div", { class: "kind-grid" });
    for (const kind of session.registry.kinds) {
      const button = el("button", { class: "kind" }, kind);
      if (session.engineState.armed === kind) button.classList.add("armed");
      button.onclick = () => void session.chooseKind(kind);
      kinds.append(button);
    }
    const menuButton = el("button", { class: "kind" }, "Menu");
    menuButton.onclick = () => {
      void session.ensureMenuModel();
      session.togglePanel("properties");
    };
    kinds.append(menuButton);
    root.append(kinds);

    const toggles = el("div", { class: "row" });
    const grid = el("button", {}, session.engineState.grid.enabled ? "Grid: on" : "Grid");
    grid.onclick = () => void session.toggleGrid();
    const lock = el("button", {}, session.engineState.locked ? "Lock: on" : "Lock");
    lock.onclick = () => void session.toggleLock();
    const compi = el("button", { class: "primary" }, "Compi");
    compi.onclick = () => void session.compileNow();
    toggles.append(grid, lock, compi);
    root.append(toggles);

    if (session.doc) {
      const w = session.doc.window;
      const form = el("div", { class: "window-form" });
      form.append(el("h3", {}, "Window Setting"));
      const title = el("input", { value: w.title, placeholder: "title" });
      title.onchange = () => void session.setWindow({ title: title.value });
      const size = el("div", { class: "row" });
      const widthInput = el("input", { type: "number", value: String(w.width) });
      const heightInput = el("input", { type: "number", value: String(w.height) });
      const apply = el("button", {}, "To Win");
      apply.onclick = () =>
        void session.setWindow({
          width: Number(widthInput.value),
          height: Number(heightInput.value),
        });
      size.append(widthInput, el("span", {}, "x"), heightInput, apply);
      const bg = el("input", { value: w.background });
      bg.onchange = () => void session.setWindow({ background: bg.value });
      form.append(title, size, bg);
      root.append(form);
    }

    const layout = el("div", { class: "row" });
    for (const [label, key] of [
      ["B", "converter"],
      ["D", "properties"],
      ["E", "events"],
    ] as const) {
      const toggle = el("button", {}, session.panels[key] ? `Hide ${label}` : `Show ${label}`);
      toggle.onclick = () => session.togglePanel(key);
      layout.append(toggle);
    }
    root.append(layout);

    const io = el("div", { class: "row" });
    const save = el("button", {}, "Save .doc");
    save.onclick = () =>
      void session.saveDocument().then((bytes) => download("design.doc.json", bytes));
    const exportTrace = el("button", {}, "Export trace");
    exportTrace.onclick = () =>
      void session.exportTrace().then((text) => download("session.trace", text));
    io.append(save, exportTrace);
    root.append(io);
  };
  session.subscribe(render);
  render();
}

function download(filename: string, text: string): void {
  const blob = new Blob([text], { type: "application/octet-stream" });
  const url = URL.createObjectURL(blob);
  const anchor = el("a", { href: url, download: filename });
  anchor.click();
  URL.revokeObjectURL(url);
}

export function mountConverter(root: HTMLElement, session: DesignerSession): void {
  const render = () => {
    root.innerHTML = "";
    if (!session.panels.converter) {
      root.classList.add("hidden");
      return;
    }
    root.classList.remove("hidden");
    root.append(el("h2", {}, "Converter Text Box"));
    const box = el("textarea", { readonly: "readonly", rows: "18" });
    box.value = session.sourceText;
    const copy = el("button", {}, "Copy code");
    copy.onclick = () => void navigator.clipboard.writeText(box.value);
    root.append(box, copy);
  };
  session.subscribe(render);
  render();
}

function editorFor(
  session: DesignerSession,
  widget: WidgetPayload,
  descriptor: PropertyDescriptorPayload,
): HTMLElement {
  const current = currentValue(widget, descriptor);
  const row = el("label", { class: "prop-row" });
  row.append(el("span", { class: "prop-name" }, descriptor.name));
  let input: HTMLInputElement | HTMLSelectElement;
  if (descriptor.type === "enum") {
    input = el("select");
    for (const choice of descriptor.choices) {
      const option = el("option", { value: choice }, choice);
      if (choice === current) option.setAttribute("selected", "selected");
      input.append(option);
    }
  } else if (descriptor.type === "boolean") {
    input = el("select");
    for (const choice of ["true", "false"]) {
      const option = el("option", { value: choice }, choice);
      if (choice === current) option.setAttribute("selected", "selected");
      input.append(option);
    }
  } else {
    input = el("input", {
      value: current,
      ...(descriptor.type === "integer" ? { type: "number" } : {}),
      ...(descriptor.type === "color" ? { placeholder: "#rrggbb or name" } : {}),
    });
  }
  input.onchange = () =>
    void session.setProperty(widget.name, descriptor.name, input.value);
  row.append(input);
  const error = session.inlineErrors[descriptor.name];
  if (error) row.append(el("span", { class: "inline-error" }, error));
  return row;
}

function currentValue(
  widget: WidgetPayload,
  descriptor: PropertyDescriptorPayload,
): string {
  switch (descriptor.name) {
    case "x0": return String(widget.rect.x0);
    case "y0": return String(widget.rect.y0);
    case "width": return String(widget.rect.width);
    case "height": return String(widget.rect.height);
    case "name": return widget.name;
    case "container": return widget.container;
    case "command":
      return widget.events.find((e) => e.trigger === "command")?.handler ?? "";
    default: {
      const value = widget.properties[descriptor.name];
      return value === undefined ? String(descriptor.default) : String(value);
    }
  }
}

export function mountProperties(root: HTMLElement, session: DesignerSession): void {
  const render = () => {
    root.innerHTML = "";
    if (!session.panels.properties) {
      root.classList.add("hidden");
      return;
    }
    root.classList.remove("hidden");
    root.append(el("h2", {}, "Properties Setting"));
    const target = pickTarget(session);
    if (!target) {
      root.append(el("p", { class: "hint" }, "Select a widget, then Design."));
      renderMenuEditor(root, session);
      return;
    }
    root.append(el("p", { class: "target" }, `${target.kind} ${target.name}`));
    for (const descriptor of supportedDescriptors(session.registry, target.kind)) {
      root.append(editorFor(session, target, descriptor));
    }
    renderMenuEditor(root, session);
  };
  session.subscribe(render);
  render();
}

function pickTarget(session: DesignerSession): WidgetPayload | null {
  if (!session.doc) return null;
  const name = session.designTarget ?? session.engineState.selection[0] ?? null;
  if (name === null) return null;
  return session.doc.widgets.find((w) => w.name === name) ?? null;
}

export function mountEvents(root: HTMLElement, session: DesignerSession): void {
  const render = () => {
    root.innerHTML = "";
    if (!session.panels.events) {
      root.classList.add("hidden");
      return;
    }
    root.classList.remove("hidden");
    root.append(el("h2", {}, "Events Setting"));
    const target = pickTarget(session);
    if (!target) {
      root.append(el("p", { class: "hint" }, "Select a widget, then Design."));
      return;
    }
    const list = el("ul", { class: "event-list" });
    for (const binding of target.events) {
      list.append(el("li", {}, `${binding.trigger} -> ${binding.handler}`));
    }
    root.append(list);
    const trigger = el("input", { value: "command", placeholder: "command or <Return>" });
    const handler = el("input", { placeholder: "handler name" });
    const add = el("button", {}, "Add");
    add.onclick = () => {
      if (handler.value) {
        void session.addBinding(target.name, trigger.value, handler.value);
      }
    };
    const row = el("div", { class: "row" });
    row.append(trigger, handler, add);
    root.append(row);
  };
  session.subscribe(render);
  render();
}

function renderMenuEditor(root: HTMLElement, session: DesignerSession): void {
  const menu = session.doc?.menu;
  root.append(el("h3", {}, "Menu edit control"));
  if (!menu) {
    const hint = el("p", { class: "hint" }, "No menu yet; pick Menu in the Control Panel.");
    root.append(hint);
    return;
  }
  const offsets = submenuOffsets(menu.buttons);
  const bar = el("div", { class: "menu-bar-preview" });
  let selectedSerial: number | null = menu.buttons[0]?.serial ?? null;
  const itemsBox = el("div", { class: "menu-items" });

  const renderItems = () => {
    itemsBox.innerHTML = "";
    const button = menu.buttons.find((b) => b.serial === selectedSerial);
    if (!button) return;
    itemsBox.append(
      el("p", { class: "target" },
         `#${button.serial} "${button.title}" at x=${offsets.get(button.serial)}`),
    );
    button.items.forEach((item, index) => {
      const row = el("div", { class: "row" });
      row.append(el("span", {}, item.separator ? "----" : item.label ?? ""));
      const minus = el("button", {}, "-Y");
      minus.onclick = () => void session.menuDeleteItem(button.serial, index);
      row.append(minus);
      itemsBox.append(row);
    });
  };

  for (const button of menu.buttons) {
    const chip = el(
      "button",
      { class: "submenu-chip", style: `margin-left:${0}px` },
      `${button.title} @${offsets.get(button.serial)}`,
    );
    chip.onclick = () => {
      selectedSerial = button.serial;
      renderItems();
    };
    bar.append(chip);
  }
  root.append(bar);

  const controls = el("div", { class: "row" });
  const titleInput = el("input", { placeholder: "submenu title" });
  const plusX = el("button", {}, "+X");
  plusX.onclick = () => {
    if (titleInput.value) {
      void session.menuAddSubmenu(titleInput.value, measureTitleWidth(titleInput.value));
    }
  };
  const minusX = el("button", {}, "-X");
  minusX.onclick = () => {
    if (selectedSerial !== null) void session.menuDeleteSubmenu(selectedSerial);
  };
  const itemInput = el("input", { placeholder: "list button label" });
  const plusY = el("button", {}, "+Y");
  plusY.onclick = () => {
    if (selectedSerial !== null && itemInput.value) {
      void session.menuAddItem(selectedSerial, itemInput.value);
    }
  };
  const separator = el("button", {}, "-");
  separator.onclick = () => {
    if (selectedSerial !== null) void session.menuAddItem(selectedSerial, null);
  };
  controls.append(titleInput, plusX, minusX, itemInput, plusY, separator);
  root.append(controls, itemsBox);
  renderItems();
}

export function mountFunctionMenu(root: HTMLElement, session: DesignerSession): void {
  const render = () => {
    root.innerHTML = "";
    if (session.mode.kind !== "menu") {
      root.classList.add("hidden");
      return;
    }
    root.classList.remove("hidden");
    const { at } = session.mode;
    root.style.left = `${at.x + session.camera.x}px`;
    root.style.top = `${at.y + session.camera.y}px`;
    for (const op of ["MOVE", "DESIGN", "DELETE", "OK", "CANCEL"] as const) {
      const button = el("button", {}, op[0] + op.slice(1).toLowerCase());
      button.onclick = () => void session.functionAction(op);
      root.append(button);
    }
  };
  session.subscribe(render);
  render();
}

export function mountToasts(root: HTMLElement, session: DesignerSession): void {
  const render = () => {
    root.innerHTML = "";
    for (const toast of session.toasts) {
      const node = el("div", { class: "toast" }, toast.message);
      node.onclick = () => session.dismissToast(toast.id);
      root.append(node);
      setTimeout(() => session.dismissToast(toast.id), 6000);
    }
  };
  session.subscribe(render);
  render();
}
