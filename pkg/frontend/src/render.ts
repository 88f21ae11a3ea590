/** Rendering helpers: all geometry arrives from the server; this module
 * only projects it onto the canvas and assembles overlay text.
 */

import type { DiagramJson, ScoreJson } from "./types.js";
import { parseRational } from "./rational.js";

export interface Viewport {
  width: number;   // canvas pixels
  height: number;
  rectWidth: number;  // world units
  rectHeight: number;
}

export function worldToCanvas(vp: Viewport, x: number, y: number): [number, number] {
  const sx = vp.width / vp.rectWidth;
  const sy = vp.height / vp.rectHeight;
  // y grows upward in world coordinates, downward on canvas
  return [x * sx, vp.height - y * sy];
}

export function canvasToWorld(vp: Viewport, px: number, py: number): [number, number] {
  const sx = vp.width / vp.rectWidth;
  const sy = vp.height / vp.rectHeight;
  return [px / sx, (vp.height - py) / sy];
}

const CELL_FILL_WHITE = "#f4f1e8";
const CELL_FILL_BLACK = "#b9b9c5";
const NEUTRAL_FILL = "#d98a8a";

export function drawDiagram(
  ctx: CanvasRenderingContext2D,
  vp: Viewport,
  diagram: DiagramJson,
  whiteCount: number,
): void {
  ctx.clearRect(0, 0, vp.width, vp.height);
  diagram.cells.forEach((cell, i) => {
    ctx.fillStyle = i < whiteCount ? CELL_FILL_WHITE : CELL_FILL_BLACK;
    for (const ring of cell.vertices_decimal) {
      tracePath(ctx, vp, ring);
      ctx.fill();
      ctx.strokeStyle = "#444";
      ctx.lineWidth = 1;
      ctx.stroke();
    }
  });
  ctx.fillStyle = NEUTRAL_FILL;
  for (const ring of diagram.neutral) {
    tracePath(ctx, vp, ring);
    ctx.fill();
  }
  diagram.cells.forEach((cell, i) => {
    const [wx, wy] = cell.site_decimal;
    const [cx, cy] = worldToCanvas(vp, wx, wy);
    ctx.beginPath();
    ctx.arc(cx, cy, 5, 0, 2 * Math.PI);
    ctx.fillStyle = i < whiteCount ? "#fff" : "#111";
    ctx.fill();
    ctx.strokeStyle = "#111";
    ctx.stroke();
  });
}

function tracePath(
  ctx: CanvasRenderingContext2D,
  vp: Viewport,
  ring: [number, number][],
): void {
  ctx.beginPath();
  ring.forEach(([x, y], k) => {
    const [px, py] = worldToCanvas(vp, x, y);
    if (k === 0) {
      ctx.moveTo(px, py);
    } else {
      ctx.lineTo(px, py);
    }
  });
  ctx.closePath();
}

/** Fractions of the rectangle owned by each side, for the score bar. */
export function scoreFractions(score: ScoreJson, rectArea: number): {
  white: number;
  black: number;
  neutral: number;
} {
  return {
    white: parseRational(score.white) / rectArea,
    black: parseRational(score.black) / rectArea,
    neutral: parseRational(score.neutral) / rectArea,
  };
}

export function verdictBanner(score: ScoreJson): string {
  switch (score.winner) {
    case "white":
      return "White wins";
    case "black":
      return "Black wins";
    default:
      return "Tie";
  }
}
