// Designer session: turns pointer gestures and panel actions into trace
// lines, keeps the engine's document as the only source of truth, and
// exposes render-ready state. No DOM here; the views subscribe.

import { EngineClient, EngineError } from "./client.js";
import type { Pt } from "./geometry.js";
import { line } from "./protocol.js";
import type {
  DocumentPayload,
  EngineStatePayload,
  RegistryPayload,
} from "./types.js";

export type Mode =
  | { kind: "idle" }
  | { kind: "drawing"; widget: string; anchor: Pt; current: Pt }
  | { kind: "selecting"; anchor: Pt; current: Pt }
  | { kind: "menu"; at: Pt }
  | { kind: "movePending"; at: Pt }
  | { kind: "moving"; start: Pt; current: Pt }
  | { kind: "panning"; start: Pt; cameraStart: Pt };

export interface PanelLayout {
  control: boolean; // A
  converter: boolean; // B
  properties: boolean; // D
  events: boolean; // E
}

export interface Toast {
  id: number;
  message: string;
}

const MAX_TOASTS = 4;

export class DesignerSession {
  doc: DocumentPayload | null = null;
  engineState: EngineStatePayload = {
    selection: [],
    armed: null,
    grid: { enabled: false, size: 10 },
    locked: false,
  };
  mode: Mode = { kind: "idle" };
  panels: PanelLayout = {
    control: true,
    converter: false,
    properties: false,
    events: false,
  };
  camera: Pt = { x: 40, y: 56 };
  sourceText = "";
  toasts: Toast[] = [];
  inlineErrors: Record<string, string> = {};
  designTarget: string | null = null;

  private queue: Promise<void> = Promise.resolve();
  private listeners: (() => void)[] = [];
  private toastCounter = 0;

  constructor(readonly client: EngineClient, readonly registry: RegistryPayload) {}

  static async create(
    baseUrl: string,
    width: number,
    height: number,
  ): Promise<DesignerSession> {
    const registry = await EngineClient.registry(baseUrl);
    const client = await EngineClient.createSession(baseUrl, width, height);
    const session = new DesignerSession(client, registry);
    await session.refresh();
    return session;
  }

  subscribe(listener: () => void): void {
    this.listeners.push(listener);
  }

  private changed(): void {
    for (const listener of this.listeners) listener();
  }

  toast(message: string): void {
    this.toasts = [...this.toasts, { id: ++this.toastCounter, message }].slice(
      -MAX_TOASTS,
    );
    this.changed();
  }

  dismissToast(id: number): void {
    this.toasts = this.toasts.filter((t) => t.id !== id);
    this.changed();
  }

  /** Queue trace lines; engine order is send order (single writer). */
  send(lines: string[], onError?: (error: EngineError) => void): Promise<void> {
    this.queue = this.queue.then(async () => {
      try {
        await this.client.send(lines);
        await this.refresh();
      } catch (error) {
        if (error instanceof EngineError) {
          await this.refresh();
          if (onError) onError(error);
          else this.toast(error.message);
        } else {
          this.toast(String(error));
        }
      }
    });
    return this.queue;
  }

  /** Wait for every queued command to finish (tests and shutdown). */
  flush(): Promise<void> {
    return this.queue;
  }

  async refresh(): Promise<void> {
    const [{ payload }, state] = await Promise.all([
      this.client.document(),
      this.client.state(),
    ]);
    this.doc = payload;
    this.engineState = state;
    this.changed();
  }

  // --- control panel ---

  chooseKind(kind: string): Promise<void> {
    if (kind !== "Menu") {
      this.mode = { kind: "idle" };
      // Optimistic: the engine confirms on the next refresh.
      this.engineState = { ...this.engineState, armed: kind };
    }
    return this.send([line.kind(kind)]);
  }

  setWindow(settings: {
    width?: number;
    height?: number;
    title?: string;
    background?: string;
    resizable?: [boolean, boolean];
  }): Promise<void> {
    const lines: string[] = [];
    if (settings.width !== undefined && settings.height !== undefined) {
      lines.push(line.windowSize(settings.width, settings.height));
    }
    if (settings.title !== undefined) lines.push(line.windowTitle(settings.title));
    if (settings.background !== undefined) {
      lines.push(line.windowBackground(settings.background));
    }
    if (settings.resizable !== undefined) {
      lines.push(line.windowResizable(...settings.resizable));
    }
    return this.send(lines);
  }

  toggleGrid(): Promise<void> {
    return this.send([line.grid(!this.engineState.grid.enabled)]);
  }

  setGridSize(size: number): Promise<void> {
    return this.send([line.gridSize(size)]);
  }

  toggleLock(): Promise<void> {
    return this.send([line.lock(!this.engineState.locked)]);
  }

  togglePanel(panel: keyof PanelLayout): void {
    this.panels = { ...this.panels, [panel]: !this.panels[panel] };
    this.changed();
  }

  // --- pointer gestures (canvas coordinates, already camera-corrected) ---

  pointerDown(p: Pt, button = 0): void {
    if (button === 1) {
      if (!this.engineState.locked) {
        this.mode = {
          kind: "panning",
          start: p,
          cameraStart: { ...this.camera },
        };
        this.changed();
      }
      return;
    }
    if (this.mode.kind === "movePending") {
      this.mode = { kind: "moving", start: p, current: p };
      this.changed();
      return;
    }
    if (this.mode.kind !== "idle" || !this.insideWindow(p)) return;
    if (this.engineState.armed) {
      this.mode = {
        kind: "drawing",
        widget: this.engineState.armed,
        anchor: p,
        current: p,
      };
    } else {
      this.mode = { kind: "selecting", anchor: p, current: p };
    }
    void this.send([line.press(p.x, p.y)]);
    this.changed();
  }

  pointerMove(p: Pt): void {
    switch (this.mode.kind) {
      case "drawing":
      case "selecting":
        this.mode = { ...this.mode, current: p };
        void this.send([line.drag(p.x, p.y)]);
        this.changed();
        break;
      case "moving":
        this.mode = { ...this.mode, current: p };
        this.changed();
        break;
      case "panning": {
        const { start, cameraStart } = this.mode;
        this.camera = {
          x: cameraStart.x + (p.x - start.x),
          y: cameraStart.y + (p.y - start.y),
        };
        this.changed();
        break;
      }
      default:
        break;
    }
  }

  pointerUp(p: Pt): void {
    switch (this.mode.kind) {
      case "drawing":
        this.mode = { kind: "idle" };
        void this.send([line.release(p.x, p.y)]);
        break;
      case "selecting": {
        this.mode = { kind: "idle" };
        // Fold the menu-popup decision into the command queue so flush()
        // observes it.
        this.queue = this.send([line.release(p.x, p.y)]).then(() => {
          if (this.engineState.selection.length > 0) {
            this.mode = { kind: "menu", at: p };
            this.changed();
          }
        });
        break;
      }
      case "moving": {
        const { start } = this.mode;
        const dx = p.x - start.x;
        const dy = p.y - start.y;
        this.mode = { kind: "menu", at: p };
        void this.send([line.funcMove(dx, dy)]);
        break;
      }
      case "panning":
        this.mode = { kind: "idle" };
        break;
      default:
        return;
    }
    this.changed();
  }

  // --- function menu ---

  functionAction(op: "MOVE" | "DESIGN" | "DELETE" | "OK" | "CANCEL"): Promise<void> {
    if (this.mode.kind !== "menu") return Promise.resolve();
    const at = this.mode.at;
    switch (op) {
      case "MOVE":
        this.mode = { kind: "movePending", at };
        this.changed();
        return Promise.resolve();
      case "DESIGN": {
        this.designTarget = this.engineState.selection[0] ?? null;
        this.panels = {
          ...this.panels,
          converter: true,
          properties: true,
          events: true,
        };
        this.mode = { kind: "idle" };
        return this.send([line.func("DESIGN")]);
      }
      default: {
        this.mode = { kind: "idle" };
        return this.send([line.func(op)]);
      }
    }
  }

  // --- properties / events panels ---

  setProperty(widget: string, prop: string, value: string): Promise<void> {
    delete this.inlineErrors[prop];
    return this.send([line.setProp(widget, prop, value)], (error) => {
      this.inlineErrors = { ...this.inlineErrors, [prop]: error.message };
      this.changed();
    });
  }

  addBinding(widget: string, trigger: string, handler: string): Promise<void> {
    return this.send([line.bind(widget, trigger, handler)]);
  }

  // --- menu editor ---

  menuAddSubmenu(title: string, width: number): Promise<void> {
    return this.send([line.menuAddSubmenu(title, width)]);
  }

  menuDeleteSubmenu(serial: number): Promise<void> {
    return this.send([line.menuDeleteSubmenu(serial)]);
  }

  menuAddItem(serial: number, label: string | null, index?: number): Promise<void> {
    return this.send([line.menuAddItem(serial, label, index)]);
  }

  menuDeleteItem(serial: number, index: number): Promise<void> {
    return this.send([line.menuDeleteItem(serial, index)]);
  }

  ensureMenuModel(): Promise<void> {
    return this.send([line.kind("Menu")]);
  }

  // --- converter box ---

  async compileNow(): Promise<string> {
    await this.send([line.compile()]);
    this.sourceText = await this.client.source();
    this.changed();
    return this.sourceText;
  }

  exportTrace(): Promise<string> {
    return this.client.trace();
  }

  async saveDocument(): Promise<string> {
    const { bytes } = await this.client.document();
    return bytes;
  }

  // --- helpers ---

  insideWindow(p: Pt): boolean {
    if (!this.doc) return false;
    return (
      p.x >= 0 &&
      p.y >= 0 &&
      p.x <= this.doc.window.width &&
      p.y <= this.doc.window.height
    );
  }

  selectedWidgets(): string[] {
    return this.engineState.selection;
  }
}
