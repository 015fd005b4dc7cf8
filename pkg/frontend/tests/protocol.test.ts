import { describe, expect, it } from "vitest";

import { line, quoteValue } from "../src/protocol.js";

describe("quoteValue", () => {
  it("passes simple tokens through bare", () => {
    expect(quoteValue("Run")).toBe("Run");
    expect(quoteValue("#a0b1c2")).toBe('"#a0b1c2"');
    expect(quoteValue("<Return>")).toBe("<Return>");
  });

  it("quotes spaces, quotes, hashes, and empties", () => {
    expect(quoteValue("Open file")).toBe('"Open file"');
    expect(quoteValue('He said "hi"')).toBe('"He said \\"hi\\""');
    expect(quoteValue("a\\b")).toBe('"a\\\\b"');
    expect(quoteValue("")).toBe('""');
  });

  it("rejects newlines (the line is the framing unit)", () => {
    expect(() => quoteValue("a\nb")).toThrow();
  });
});

describe("line builders", () => {
  it("matches the engine grammar shapes", () => {
    expect(line.windowSize(400, 300)).toBe("WINDOW SIZE 400 300");
    expect(line.windowTitle("Demo App")).toBe('WINDOW TITLE "Demo App"');
    expect(line.windowResizable(true, false)).toBe("WINDOW RESIZABLE 1 0");
    expect(line.kind("Button")).toBe("KIND Button");
    expect(line.press(10, 10)).toBe("PRESS 10 10");
    expect(line.funcMove(-5, 6)).toBe("FUNC MOVE -5 6");
    expect(line.func("CANCEL")).toBe("FUNC CANCEL");
    expect(line.setProp("Button1", "text", "Run")).toBe("SETPROP Button1 text Run");
    expect(line.bind("Entry1", "<Return>", "submit")).toBe(
      "BIND Entry1 <Return> submit",
    );
    expect(line.menuAddSubmenu("Page Setup", 88)).toBe('MENU +X "Page Setup" 88');
    expect(line.menuAddItem(1, null)).toBe("MENU +Y 1 -");
    expect(line.menuAddItem(1, "Open", 0)).toBe("MENU +Y 1 Open 0");
    expect(line.menuDeleteItem(2, 3)).toBe("MENU -Y 2 3");
    expect(line.grid(true)).toBe("GRID ON");
    expect(line.gridSize(25)).toBe("GRID SIZE 25");
    expect(line.lock(false)).toBe("LOCK OFF");
    expect(line.compile()).toBe("COMPILE");
  });
});
