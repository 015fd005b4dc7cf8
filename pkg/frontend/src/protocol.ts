// Trace-line builders. Every engine mutation the UI can perform is one
// of these lines; the engine's grammar (docs/trace-grammar.md) is the
// only contract shared with the backend.

export function quoteValue(value: string): string {
  if (value.includes("\n") || value.includes("\r")) {
    throw new Error("trace values cannot contain newlines");
  }
  if (value.length > 0 && !/[ \t"'#\\]/.test(value)) {
    return value;
  }
  return '"' + value.replace(/\\/g, "\\\\").replace(/"/g, '\\"') + '"';
}

export const line = {
  windowSize: (w: number, h: number) => `WINDOW SIZE ${w} ${h}`,
  windowTitle: (title: string) => `WINDOW TITLE ${quoteValue(title)}`,
  windowBackground: (color: string) => `WINDOW BG ${quoteValue(color)}`,
  windowResizable: (x: boolean, y: boolean) =>
    `WINDOW RESIZABLE ${x ? 1 : 0} ${y ? 1 : 0}`,
  kind: (kind: string) => `KIND ${kind}`,
  press: (x: number, y: number) => `PRESS ${x} ${y}`,
  drag: (x: number, y: number) => `DRAG ${x} ${y}`,
  release: (x: number, y: number) => `RELEASE ${x} ${y}`,
  funcMove: (dx: number, dy: number) => `FUNC MOVE ${dx} ${dy}`,
  func: (op: "DESIGN" | "DELETE" | "OK" | "CANCEL") => `FUNC ${op}`,
  setProp: (widget: string, prop: string, value: string) =>
    `SETPROP ${widget} ${prop} ${quoteValue(value)}`,
  bind: (widget: string, trigger: string, handler: string) =>
    `BIND ${widget} ${quoteValue(trigger)} ${handler}`,
  menuAddSubmenu: (title: string, width: number) =>
    `MENU +X ${quoteValue(title)} ${width}`,
  menuDeleteSubmenu: (serial: number) => `MENU -X ${serial}`,
  menuAddItem: (serial: number, label: string | null, index?: number) => {
    const token = label === null ? "-" : quoteValue(label);
    return index === undefined
      ? `MENU +Y ${serial} ${token}`
      : `MENU +Y ${serial} ${token} ${index}`;
  },
  menuDeleteItem: (serial: number, index: number) => `MENU -Y ${serial} ${index}`,
  grid: (on: boolean) => `GRID ${on ? "ON" : "OFF"}`,
  gridSize: (size: number) => `GRID SIZE ${size}`,
  lock: (on: boolean) => `LOCK ${on ? "ON" : "OFF"}`,
  compile: () => "COMPILE",
};
