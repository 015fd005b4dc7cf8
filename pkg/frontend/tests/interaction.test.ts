import { describe, expect, it } from "vitest";

import { EngineClient } from "../src/client.js";
import { DesignerSession } from "../src/interaction.js";
import type {
  DocumentPayload,
  EngineStatePayload,
  RegistryPayload,
} from "../src/types.js";

const emptyDoc: DocumentPayload = {
  format_version: 1,
  window: {
    title: "", width: 400, height: 300, background: "#f0f0f0",
    resizable_x: true, resizable_y: true,
  },
  widgets: [],
  menu: null,
  name_counters: {},
};

const registry: RegistryPayload = {
  kinds: ["Button", "Entry"],
  descriptors: [],
  matrix: {},
  prototypes: { Button: [80, 24], Entry: [80, 24] },
};

/** Minimal scriptable engine stand-in: records lines, tracks armed/selection
 * just enough for the gesture choreography. */
class FakeEngine {
  lines: string[] = [];
  failNext: string | null = null;
  private armed: string | null = null;
  private selection: string[] = [];
  selectionOnRelease: string[] = [];

  async send(lines: string[]): Promise<void> {
    for (const sent of lines) {
      if (this.failNext) {
        const message = this.failNext;
        this.failNext = null;
        const { EngineError } = await import("../src/client.js");
        throw new EngineError({ error: message, index: 0, line: 1 });
      }
      this.lines.push(sent);
      if (sent.startsWith("KIND ")) this.armed = sent.slice(5);
      if (sent.startsWith("RELEASE")) {
        if (this.armed) this.armed = null;
        else this.selection = [...this.selectionOnRelease];
      }
      if (sent === "FUNC OK" || sent === "FUNC CANCEL" || sent === "FUNC DELETE") {
        this.selection = [];
      }
    }
  }

  async document() {
    return { bytes: JSON.stringify(emptyDoc), payload: emptyDoc };
  }

  async state(): Promise<EngineStatePayload> {
    return {
      selection: this.selection,
      armed: this.armed,
      grid: { enabled: false, size: 10 },
      locked: false,
    };
  }

  async source() { return "# source\n"; }
  async trace() { return this.lines.join("\n") + "\n"; }
}

function makeSession(): { session: DesignerSession; engine: FakeEngine } {
  const engine = new FakeEngine();
  const session = new DesignerSession(engine as unknown as EngineClient, registry);
  session.doc = emptyDoc;
  return { session, engine };
}

describe("draw gesture", () => {
  it("maps press/drag/release to trace lines one to one", async () => {
    const { session, engine } = makeSession();
    await session.chooseKind("Button");
    session.pointerDown({ x: 10, y: 10 });
    session.pointerMove({ x: 30, y: 20 });
    session.pointerMove({ x: 60, y: 30 });
    session.pointerUp({ x: 60, y: 30 });
    await session.flush();
    expect(engine.lines).toEqual([
      "KIND Button", "PRESS 10 10", "DRAG 30 20", "DRAG 60 30", "RELEASE 60 30",
    ]);
  });

  it("tracks a live preview while drawing", async () => {
    const { session } = makeSession();
    await session.chooseKind("Button");
    session.pointerDown({ x: 30, y: 40 });
    session.pointerMove({ x: 10, y: 90 });
    expect(session.mode).toEqual({
      kind: "drawing", widget: "Button",
      anchor: { x: 30, y: 40 }, current: { x: 10, y: 90 },
    });
    session.pointerUp({ x: 10, y: 90 });
    await session.flush();
    expect(session.mode).toEqual({ kind: "idle" });
  });

  it("ignores presses outside the simulated window", async () => {
    const { session, engine } = makeSession();
    session.pointerDown({ x: -5, y: 10 });
    session.pointerDown({ x: 500, y: 10 });
    await session.flush();
    expect(engine.lines).toEqual([]);
  });
});

describe("selection and the function menu", () => {
  it("opens the menu when the box selects something", async () => {
    const { session, engine } = makeSession();
    engine.selectionOnRelease = ["Button1"];
    session.pointerDown({ x: 0, y: 0 });
    session.pointerMove({ x: 100, y: 80 });
    session.pointerUp({ x: 100, y: 80 });
    await session.flush();
    expect(session.mode).toEqual({ kind: "menu", at: { x: 100, y: 80 } });
  });

  it("skips the menu on an empty selection", async () => {
    const { session, engine } = makeSession();
    engine.selectionOnRelease = [];
    session.pointerDown({ x: 0, y: 0 });
    session.pointerUp({ x: 5, y: 5 });
    await session.flush();
    expect(session.mode).toEqual({ kind: "idle" });
  });

  it("move drags emit one FUNC MOVE with the net delta", async () => {
    const { session, engine } = makeSession();
    engine.selectionOnRelease = ["Button1"];
    session.pointerDown({ x: 0, y: 0 });
    session.pointerUp({ x: 100, y: 80 });
    await session.flush();
    await session.functionAction("MOVE");
    session.pointerDown({ x: 50, y: 50 });
    session.pointerMove({ x: 60, y: 50 });
    session.pointerMove({ x: 55, y: 56 });
    session.pointerUp({ x: 55, y: 56 });
    await session.flush();
    expect(engine.lines.filter((l) => l.startsWith("FUNC"))).toEqual([
      "FUNC MOVE 5 6",
    ]);
    expect(session.mode.kind).toBe("menu");
    await session.functionAction("OK");
    await session.flush();
    expect(engine.lines.at(-1)).toBe("FUNC OK");
    expect(session.mode).toEqual({ kind: "idle" });
  });

  it("design opens the hidden panels", async () => {
    const { session, engine } = makeSession();
    engine.selectionOnRelease = ["Button1"];
    expect(session.panels).toEqual({
      control: true, converter: false, properties: false, events: false,
    });
    session.pointerDown({ x: 0, y: 0 });
    session.pointerUp({ x: 100, y: 80 });
    await session.flush();
    await session.functionAction("DESIGN");
    expect(session.panels.converter).toBe(true);
    expect(session.panels.properties).toBe(true);
    expect(session.panels.events).toBe(true);
    expect(session.designTarget).toBe("Button1");
  });
});

describe("panning and lock", () => {
  it("middle button pans when unlocked", () => {
    const { session } = makeSession();
    const before = { ...session.camera };
    session.pointerDown({ x: 10, y: 10 }, 1);
    session.pointerMove({ x: 40, y: 25 });
    session.pointerUp({ x: 40, y: 25 });
    expect(session.camera).toEqual({ x: before.x + 30, y: before.y + 15 });
  });

  it("lock freezes panning", async () => {
    const { session } = makeSession();
    session.engineState = { ...session.engineState, locked: true };
    const before = { ...session.camera };
    session.pointerDown({ x: 10, y: 10 }, 1);
    session.pointerMove({ x: 40, y: 25 });
    expect(session.camera).toEqual(before);
  });
});

describe("errors", () => {
  it("engine errors surface as toasts and leave the session alive", async () => {
    const { session, engine } = makeSession();
    engine.failNext = "widgets overlap";
    await session.chooseKind("Button");
    await session.flush();
    expect(session.toasts.map((t) => t.message)).toContain("widgets overlap");
    engine.failNext = null;
    await session.chooseKind("Entry");
    await session.flush();
    expect(engine.lines).toContain("KIND Entry");
  });

  it("property errors render inline, not as toasts", async () => {
    const { session, engine } = makeSession();
    engine.failNext = "bad value for 'width'";
    await session.setProperty("Button1", "width", "-5");
    expect(session.inlineErrors["width"]).toBe("bad value for 'width'");
    expect(session.toasts).toEqual([]);
  });
});

describe("panel layout", () => {
  it("starts with converter, properties, and events hidden", () => {
    const { session } = makeSession();
    expect(session.panels.converter).toBe(false);
    expect(session.panels.properties).toBe(false);
    expect(session.panels.events).toBe(false);
    expect(session.panels.control).toBe(true);
  });

  it("panels toggle independently", () => {
    const { session } = makeSession();
    session.togglePanel("converter");
    session.togglePanel("events");
    expect(session.panels.converter).toBe(true);
    expect(session.panels.properties).toBe(false);
    expect(session.panels.events).toBe(true);
    session.togglePanel("converter");
    expect(session.panels.converter).toBe(false);
  });
});
