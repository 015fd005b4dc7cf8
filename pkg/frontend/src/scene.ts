// Pure scene construction: document + session state in, a flat list of
// drawing primitives out. Keeping this DOM-free makes the renderer
// trivially testable.

import { normalizedBox, previewBox, submenuOffsets } from "./geometry.js";
import type { Mode } from "./interaction.js";
import type { DocumentPayload, EngineStatePayload, WidgetPayload } from "./types.js";

export type Primitive =
  | { t: "rect"; x: number; y: number; w: number; h: number;
      fill?: string; stroke?: string; dashed?: boolean }
  | { t: "text"; x: number; y: number; text: string; color?: string; size?: number }
  | { t: "line"; x1: number; y1: number; x2: number; y2: number;
      color?: string; dashed?: boolean };

const TITLE_BAR_HEIGHT = 26;
const MENU_ROW_HEIGHT = 22;

// Schematic widget faces: a bordered box, a kind tag, and the text that
// matters most for that kind.
function widgetFace(widget: WidgetPayload, selected: boolean): Primitive[] {
  const { x0, y0, width, height } = widget.rect;
  const text = widget.properties["text"];
  const label = typeof text === "string" && text !== "" ? text : widget.name;
  const face: Primitive[] = [
    {
      t: "rect", x: x0, y: y0, w: width, h: height,
      fill: "#ffffff", stroke: selected ? "#d9480f" : "#495057",
    },
    { t: "text", x: x0 + 4, y: y0 + 12, text: label, size: 11 },
    {
      t: "text", x: x0 + 4, y: y0 + height - 4,
      text: widget.kind, color: "#868e96", size: 9,
    },
  ];
  if (selected) {
    face.push({
      t: "rect", x: x0 - 2, y: y0 - 2, w: width + 4, h: height + 4,
      stroke: "#d9480f", dashed: true,
    });
  }
  return face;
}

export function buildScene(
  doc: DocumentPayload,
  engineState: EngineStatePayload,
  mode: Mode,
): Primitive[] {
  const prims: Primitive[] = [];
  const { width, height, title, background } = doc.window;

  // Decorative window chrome above the simulated canvas.
  prims.push({
    t: "rect", x: 0, y: -TITLE_BAR_HEIGHT, w: width, h: TITLE_BAR_HEIGHT,
    fill: "#343a40", stroke: "#212529",
  });
  prims.push({
    t: "text", x: 8, y: -TITLE_BAR_HEIGHT + 17,
    text: title === "" ? "(untitled window)" : title, color: "#f8f9fa", size: 12,
  });
  for (const [offset, glyph] of [[44, "x"], [28, "+"], [12, "-"]] as const) {
    prims.push({
      t: "text", x: width - offset, y: -TITLE_BAR_HEIGHT + 17,
      text: glyph, color: "#f8f9fa", size: 12,
    });
  }

  // The simulated window itself.
  prims.push({ t: "rect", x: 0, y: 0, w: width, h: height,
               fill: background, stroke: "#212529" });

  if (engineState.grid.enabled) {
    const step = engineState.grid.size;
    for (let gx = step; gx < width; gx += step) {
      prims.push({ t: "line", x1: gx, y1: 0, x2: gx, y2: height,
                   color: "#dee2e6" });
    }
    for (let gy = step; gy < height; gy += step) {
      prims.push({ t: "line", x1: 0, y1: gy, x2: width, y2: gy,
                   color: "#dee2e6" });
    }
  }

  // Menu bar row with live submenu buttons at their computed offsets.
  if (doc.menu !== null && doc.menu.buttons.length > 0) {
    const offsets = submenuOffsets(doc.menu.buttons);
    for (const button of doc.menu.buttons) {
      const x = offsets.get(button.serial) ?? 0;
      prims.push({
        t: "rect", x, y: doc.menu.y0, w: button.width, h: MENU_ROW_HEIGHT,
        fill: "#e9ecef", stroke: "#adb5bd",
      });
      prims.push({ t: "text", x: x + 4, y: doc.menu.y0 + 15,
                   text: button.title, size: 11 });
    }
  }

  const selected = new Set(engineState.selection);
  for (const widget of doc.widgets) {
    prims.push(...widgetFace(widget, selected.has(widget.name)));
  }

  if (mode.kind === "drawing") {
    const preview = previewBox(mode.anchor, mode.current);
    prims.push({ t: "rect", x: preview.x0, y: preview.y0,
                 w: preview.width, h: preview.height,
                 stroke: "#1c7ed6", dashed: true });
  } else if (mode.kind === "selecting") {
    const band = normalizedBox(mode.anchor, mode.current);
    prims.push({ t: "rect", x: band.x0, y: band.y0,
                 w: band.width, h: band.height,
                 stroke: "#7048e8", dashed: true });
  } else if (mode.kind === "moving") {
    prims.push({
      t: "line", x1: mode.start.x, y1: mode.start.y,
      x2: mode.current.x, y2: mode.current.y,
      color: "#d9480f", dashed: true,
    });
  }

  return prims;
}
