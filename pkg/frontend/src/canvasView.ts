// Paints scene primitives onto the drawing board and forwards pointer
// events (camera-corrected) to the session.

import { buildScene, type Primitive } from "./scene.js";
import type { DesignerSession } from "./interaction.js";

function paint(ctx: CanvasRenderingContext2D, prims: Primitive[]): void {
  for (const p of prims) {
    ctx.setLineDash("dashed" in p && p.dashed ? [4, 3] : []);
    if (p.t === "rect") {
      if (p.fill) {
        ctx.fillStyle = p.fill;
        try {
          ctx.fillRect(p.x, p.y, p.w, p.h);
        } catch {
          ctx.fillStyle = "#ffffff"; // unknown color name: fall back
          ctx.fillRect(p.x, p.y, p.w, p.h);
        }
      }
      if (p.stroke) {
        ctx.strokeStyle = p.stroke;
        ctx.strokeRect(p.x + 0.5, p.y + 0.5, p.w, p.h);
      }
    } else if (p.t === "text") {
      ctx.fillStyle = p.color ?? "#212529";
      ctx.font = `${p.size ?? 11}px system-ui, sans-serif`;
      ctx.fillText(p.text, p.x, p.y);
    } else {
      ctx.strokeStyle = p.color ?? "#212529";
      ctx.beginPath();
      ctx.moveTo(p.x1 + 0.5, p.y1 + 0.5);
      ctx.lineTo(p.x2 + 0.5, p.y2 + 0.5);
      ctx.stroke();
    }
  }
  ctx.setLineDash([]);
}

export function mountCanvas(
  canvas: HTMLCanvasElement,
  session: DesignerSession,
): void {
  const ctx = canvas.getContext("2d");
  if (!ctx) throw new Error("2d canvas unsupported");

  const toCanvasPoint = (event: PointerEvent) => {
    const bounds = canvas.getBoundingClientRect();
    return {
      x: Math.round(event.clientX - bounds.left - session.camera.x),
      y: Math.round(event.clientY - bounds.top - session.camera.y),
    };
  };

  canvas.addEventListener("pointerdown", (event) => {
    event.preventDefault();
    canvas.setPointerCapture(event.pointerId);
    session.pointerDown(toCanvasPoint(event), event.button);
  });
  canvas.addEventListener("pointermove", (event) => {
    session.pointerMove(toCanvasPoint(event));
  });
  canvas.addEventListener("pointerup", (event) => {
    canvas.releasePointerCapture(event.pointerId);
    session.pointerUp(toCanvasPoint(event));
  });
  canvas.addEventListener("contextmenu", (event) => event.preventDefault());

  let dirty = true;
  session.subscribe(() => {
    dirty = true;
  });

  const frame = () => {
    if (dirty && session.doc) {
      dirty = false;
      const parent = canvas.parentElement;
      if (parent) {
        const w = parent.clientWidth;
        const h = parent.clientHeight;
        if (canvas.width !== w || canvas.height !== h) {
          canvas.width = w;
          canvas.height = h;
        }
      }
      ctx.fillStyle = "#f1f3f5";
      ctx.fillRect(0, 0, canvas.width, canvas.height);
      ctx.save();
      ctx.translate(session.camera.x, session.camera.y);
      paint(ctx, buildScene(session.doc, session.engineState, session.mode));
      ctx.restore();
    }
    requestAnimationFrame(frame);
  };
  requestAnimationFrame(frame);
}
