// Pixel geometry shared by the canvas renderer and the gesture logic.
// The preview law mirrors the engine: |dx| by |dy| anchored at the
// componentwise minimum, degenerate extents shown one pixel wide.

export interface Pt {
  x: number;
  y: number;
}

export interface Box {
  x0: number;
  y0: number;
  width: number;
  height: number;
}

export function previewBox(anchor: Pt, current: Pt): Box {
  return {
    x0: Math.max(Math.min(anchor.x, current.x), 0),
    y0: Math.max(Math.min(anchor.y, current.y), 0),
    width: Math.max(Math.abs(current.x - anchor.x), 1),
    height: Math.max(Math.abs(current.y - anchor.y), 1),
  };
}

export function normalizedBox(anchor: Pt, current: Pt): Box {
  return {
    x0: Math.min(anchor.x, current.x),
    y0: Math.min(anchor.y, current.y),
    width: Math.abs(current.x - anchor.x),
    height: Math.abs(current.y - anchor.y),
  };
}

export function boxContains(outer: Box, inner: Box): boolean {
  return (
    outer.x0 <= inner.x0 &&
    outer.y0 <= inner.y0 &&
    inner.x0 + inner.width <= outer.x0 + outer.width &&
    inner.y0 + inner.height <= outer.y0 + outer.height
  );
}

export function pointInBox(p: Pt, box: Box): boolean {
  return (
    p.x >= box.x0 &&
    p.y >= box.y0 &&
    p.x < box.x0 + box.width &&
    p.y < box.y0 + box.height
  );
}

// Menu-bar layout: offset of each live submenu is the width sum of the
// live buttons with smaller serials.
export function submenuOffsets(
  buttons: { serial: number; width: number }[],
): Map<number, number> {
  const sorted = [...buttons].sort((a, b) => a.serial - b.serial);
  const offsets = new Map<number, number>();
  let total = 0;
  for (const button of sorted) {
    offsets.set(button.serial, total);
    total += button.width;
  }
  return offsets;
}
