import { DesignerSession } from "./interaction.js";
import { mountCanvas } from "./canvasView.js";
import {
  mountControlPanel,
  mountConverter,
  mountEvents,
  mountFunctionMenu,
  mountProperties,
  mountToasts,
} from "./panels.js";

function require<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node as T;
}

async function boot(): Promise<void> {
  const session = await DesignerSession.create(window.location.origin, 400, 300);
  mountCanvas(require<HTMLCanvasElement>("design-canvas"), session);
  mountControlPanel(require("control-panel"), session);
  mountConverter(require("converter"), session);
  mountProperties(require("properties"), session);
  mountEvents(require("events"), session);
  mountFunctionMenu(require("function-menu"), session);
  mountToasts(require("toasts"), session);
}

boot().catch((error) => {
  const node = document.getElementById("toasts");
  if (node) node.textContent = `failed to reach the engine: ${error}`;
});
