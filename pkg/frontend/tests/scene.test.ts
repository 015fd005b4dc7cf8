import { describe, expect, it } from "vitest";

import { buildScene, type Primitive } from "../src/scene.js";
import type { DocumentPayload, EngineStatePayload } from "../src/types.js";

const baseDoc: DocumentPayload = {
  format_version: 1,
  window: {
    title: "Demo", width: 400, height: 300, background: "#f0f0f0",
    resizable_x: true, resizable_y: true,
  },
  widgets: [
    {
      kind: "Button", name: "Button1", container: "self",
      rect: { x0: 20, y0: 26, width: 80, height: 32 },
      properties: { text: "Run" }, events: [],
    },
  ],
  menu: {
    y0: 0,
    buttons: [
      { serial: 1, title: "File", width: 40, items: [{ label: "Open" }] },
      { serial: 3, title: "Help", width: 44, items: [] },
    ],
    deleted: [2],
  },
  name_counters: { Button: 1 },
};

const idleState: EngineStatePayload = {
  selection: [], armed: null, grid: { enabled: false, size: 10 }, locked: false,
};

const texts = (prims: Primitive[]) =>
  prims.filter((p): p is Extract<Primitive, { t: "text" }> => p.t === "text");

describe("buildScene", () => {
  it("draws window chrome, widget faces, and menu buttons at offsets", () => {
    const prims = buildScene(baseDoc, idleState, { kind: "idle" });
    expect(texts(prims).some((p) => p.text === "Demo")).toBe(true);
    expect(texts(prims).some((p) => p.text === "Run")).toBe(true);
    expect(texts(prims).some((p) => p.text === "Button")).toBe(true);
    const fileButton = prims.find(
      (p) => p.t === "rect" && p.x === 0 && p.w === 40 && p.h === 22,
    );
    const helpButton = prims.find(
      (p) => p.t === "rect" && p.x === 40 && p.w === 44 && p.h === 22,
    );
    expect(fileButton).toBeTruthy();
    expect(helpButton).toBeTruthy();
  });

  it("marks selected widgets", () => {
    const state = { ...idleState, selection: ["Button1"] };
    const prims = buildScene(baseDoc, state, { kind: "idle" });
    const marker = prims.find((p) => p.t === "rect" && p.dashed && p.w === 84);
    expect(marker).toBeTruthy();
  });

  it("renders the live preview while drawing", () => {
    const prims = buildScene(baseDoc, idleState, {
      kind: "drawing", widget: "Entry",
      anchor: { x: 30, y: 40 }, current: { x: 10, y: 90 },
    });
    const preview = prims.find(
      (p) => p.t === "rect" && p.dashed && p.x === 10 && p.y === 40
        && p.w === 20 && p.h === 50,
    );
    expect(preview).toBeTruthy();
  });

  it("renders a trajectory line while moving", () => {
    const prims = buildScene(baseDoc, idleState, {
      kind: "moving", start: { x: 5, y: 5 }, current: { x: 50, y: 60 },
    });
    const trajectory = prims.find(
      (p) => p.t === "line" && p.dashed && p.x2 === 50 && p.y2 === 60,
    );
    expect(trajectory).toBeTruthy();
  });

  it("draws grid lines only when enabled", () => {
    const off = buildScene(baseDoc, idleState, { kind: "idle" });
    const on = buildScene(
      baseDoc,
      { ...idleState, grid: { enabled: true, size: 100 } },
      { kind: "idle" },
    );
    const gridLines = (prims: Primitive[]) =>
      prims.filter((p) => p.t === "line" && p.color === "#dee2e6").length;
    expect(gridLines(off)).toBe(0);
    expect(gridLines(on)).toBe(3 + 2); // x at 100,200,300; y at 100,200
  });
});
