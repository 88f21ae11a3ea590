/** Client-side shoelace, used only to audit server-reported areas. */

import { parseRational } from "./rational.js";
import type { CellJson, DiagramJson, PointPair } from "./types.js";

export function shoelace(vertices: [number, number][]): number {
  let twice = 0;
  const n = vertices.length;
  for (let i = 0; i < n; i++) {
    const [x1, y1] = vertices[i];
    const [x2, y2] = vertices[(i + 1) % n];
    twice += x1 * y2 - x2 * y1;
  }
  return Math.abs(twice) / 2;
}

export function exactVerticesToFloat(ring: PointPair[]): [number, number][] {
  return ring.map(([x, y]) => [parseRational(x), parseRational(y)]);
}

/** Recompute a cell's area from its exact vertex rings. */
export function cellArea(cell: CellJson): number {
  let total = 0;
  for (const ring of cell.vertices) {
    total += shoelace(exactVerticesToFloat(ring));
  }
  return total;
}

/** Sum of all recomputed cell areas plus neutral regions. */
export function diagramArea(diagram: DiagramJson): number {
  let total = 0;
  for (const cell of diagram.cells) {
    total += cellArea(cell);
  }
  for (const ring of diagram.neutral) {
    total += shoelace(ring);
  }
  return total;
}

/** Relative mismatch between a recomputed and a reported value. */
export function relativeError(recomputed: number, reported: number): number {
  const scale = Math.max(Math.abs(reported), 1e-30);
  return Math.abs(recomputed - reported) / scale;
}
