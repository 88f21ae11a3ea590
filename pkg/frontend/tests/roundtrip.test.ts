/** End-to-end audit against a live engine: the 2x2 grid round-trip.
 *
 * Starts the Python HTTP service, requests Black's best response, and
 * recomputes every received polygon area client-side (shoelace). The
 * recomputed areas must match the server's exact areas within 1e-9
 * relative, and the session must survive a URL round-trip.
 */

import { spawn, type ChildProcess } from "node:child_process";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { Client, STALE } from "../src/api.js";
import { parseRational } from "../src/rational.js";
import { cellArea, relativeError, shoelace } from "../src/shoelace.js";
import { decodeDocument, encodeDocument } from "../src/state.js";
import type { ConfigDocument } from "../src/types.js";

const PORT = 8765 + (process.pid % 500);
const BASE = `http://127.0.0.1:${PORT}`;

let server: ChildProcess;

async function waitForServer(timeoutMs = 30_000): Promise<void> {
  const deadline = Date.now() + timeoutMs;
  while (Date.now() < deadline) {
    try {
      const res = await fetch(`${BASE}/api/verdict?n=1&rho=1`);
      if (res.ok) {
        return;
      }
    } catch {
      // not up yet
    }
    await new Promise((r) => setTimeout(r, 200));
  }
  throw new Error("engine did not come up in time");
}

beforeAll(async () => {
  server = spawn(
    "python3",
    ["-m", "uvicorn", "manhattan_voronoi.api:app", "--port", String(PORT), "--log-level", "error"],
    { cwd: "..", stdio: "ignore" },
  );
  await waitForServer();
}, 40_000);

afterAll(() => {
  server?.kill();
});

const grid2x2: ConfigDocument = {
  rect: { width: "1", height: "1" },
  white: [
    ["1/4", "1/4"],
    ["3/4", "1/4"],
    ["1/4", "3/4"],
    ["3/4", "3/4"],
  ],
};

describe("2x2 grid round-trip", () => {
  it("black responds with a winning set and the client audit agrees", async () => {
    const client = new Client(BASE);
    const res = await client.respond(grid2x2);
    expect(res).not.toBe(STALE);
    if (res === STALE) {
      return;
    }
    expect(res.score.winner).toBe("black");
    expect(res.black.exact).toHaveLength(4);

    // every received cell area, recomputed by shoelace, matches the exact
    // server value within 1e-9 relative
    for (const cell of res.diagram.cells) {
      const audit = relativeError(cellArea(cell), parseRational(cell.area.exact));
      expect(audit).toBeLessThanOrEqual(1e-9);
    }

    // the recomputed totals match the reported score within 1e-9 relative
    const whiteSum = res.diagram.cells
      .slice(0, grid2x2.white.length)
      .reduce((acc, cell) => acc + cellArea(cell), 0);
    const blackSum = res.diagram.cells
      .slice(grid2x2.white.length)
      .reduce((acc, cell) => acc + cellArea(cell), 0);
    const neutralSum = res.diagram.neutral.reduce((acc, ring) => acc + shoelace(ring), 0);
    expect(relativeError(whiteSum, parseRational(res.score.white))).toBeLessThanOrEqual(1e-9);
    expect(relativeError(blackSum, parseRational(res.score.black))).toBeLessThanOrEqual(1e-9);
    expect(whiteSum + blackSum + neutralSum).toBeCloseTo(1, 9);
    expect(parseRational(res.score.black)).toBeGreaterThan(0.5);
  }, 60_000);

  it("the session is reconstructible from the shareable URL", async () => {
    const fragment = encodeDocument(grid2x2);
    const restored = decodeDocument(fragment);
    expect(restored).toEqual(grid2x2);

    // the restored document drives the same engine call
    const client = new Client(BASE);
    const res = await client.respond(restored!);
    expect(res).not.toBe(STALE);
    if (res === STALE) {
      return;
    }
    expect(res.score.winner).toBe("black");
  }, 60_000);
});
