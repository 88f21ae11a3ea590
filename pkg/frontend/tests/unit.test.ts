import { describe, expect, it, vi } from "vitest";

import { Client, STALE } from "../src/api.js";
import { formatCoordinate, parseRational } from "../src/rational.js";
import { relativeError, shoelace } from "../src/shoelace.js";
import {
  decodeDocument,
  encodeDocument,
  initialState,
  placementError,
  stateFromDocument,
  toDocument,
} from "../src/state.js";
import { canvasToWorld, scoreFractions, verdictBanner, worldToCanvas } from "../src/render.js";
import type { ScoreJson } from "../src/types.js";

describe("rational parsing", () => {
  it("parses p/q strings", () => {
    expect(parseRational("9/64")).toBeCloseTo(0.140625, 12);
    expect(parseRational("-3/8")).toBeCloseTo(-0.375, 12);
  });

  it("parses plain decimals", () => {
    expect(parseRational("0.25")).toBe(0.25);
    expect(parseRational("2")).toBe(2);
  });

  it("rejects junk", () => {
    expect(() => parseRational("a/b")).toThrow();
    expect(() => parseRational("1/0")).toThrow();
  });

  it("formats snapped coordinates losslessly", () => {
    expect(formatCoordinate(0.5000001)).toBe("0.5");
    // snapping moves the value by at most half a lattice step
    const snapped = parseRational(formatCoordinate(0.3330078125));
    expect(Math.abs(snapped - 0.3330078125)).toBeLessThanOrEqual(1 / 512);
    expect(snapped * 256).toBe(Math.round(snapped * 256));
  });
});

describe("shoelace", () => {
  it("measures the unit square", () => {
    expect(shoelace([[0, 0], [1, 0], [1, 1], [0, 1]])).toBe(1);
  });

  it("is orientation independent", () => {
    expect(shoelace([[0, 0], [0, 1], [1, 1], [1, 0]])).toBe(1);
  });

  it("handles staircase polygons", () => {
    // an L-shape: 3 unit squares
    const ring: [number, number][] = [
      [0, 0], [2, 0], [2, 1], [1, 1], [1, 2], [0, 2],
    ];
    expect(shoelace(ring)).toBe(3);
  });

  it("relative error is scale-aware", () => {
    expect(relativeError(1 + 1e-12, 1)).toBeLessThan(1e-9);
    expect(relativeError(2, 1)).toBe(1);
  });
});

describe("session state", () => {
  it("rejects out-of-rect and duplicate placements", () => {
    const state = initialState();
    expect(placementError(state, 1.5, 0.5, 1, 1)).toMatch(/inside/);
    state.white.push(["0.5", "0.5"]);
    expect(placementError(state, 0.5, 0.5, 1, 1)).toMatch(/duplicate/);
    expect(placementError(state, 0.25, 0.75, 1, 1)).toBeNull();
  });

  it("round-trips through the URL fragment", () => {
    const state = initialState();
    state.rect.width = "3/2";
    state.white.push(["1/2", "1/4"], ["1", "3/4"]);
    const doc = toDocument(state);
    const restored = decodeDocument(encodeDocument(doc));
    expect(restored).toEqual({ rect: doc.rect, white: doc.white });
    expect(stateFromDocument(restored!).white).toEqual(doc.white);
  });

  it("decodes garbage to null", () => {
    expect(decodeDocument("%%%not-base64%%%")).toBeNull();
    expect(decodeDocument("")).toBeNull();
  });
});

describe("viewport projection", () => {
  const vp = { width: 800, height: 400, rectWidth: 2, rectHeight: 1 };

  it("flips the y axis", () => {
    expect(worldToCanvas(vp, 0, 0)).toEqual([0, 400]);
    expect(worldToCanvas(vp, 2, 1)).toEqual([800, 0]);
  });

  it("is inverse of canvasToWorld", () => {
    const [px, py] = worldToCanvas(vp, 0.75, 0.25);
    const [x, y] = canvasToWorld(vp, px, py);
    expect(x).toBeCloseTo(0.75, 12);
    expect(y).toBeCloseTo(0.25, 12);
  });
});

describe("score presentation", () => {
  const score: ScoreJson = {
    white: "7/16",
    black: "7/16",
    neutral: "1/8",
    white_decimal: 0.4375,
    black_decimal: 0.4375,
    neutral_decimal: 0.125,
    winner: "tie",
  };

  it("turns exact areas into fractions of the rect", () => {
    const fr = scoreFractions(score, 1);
    expect(fr.white + fr.black + fr.neutral).toBeCloseTo(1, 12);
  });

  it("banners the winner", () => {
    expect(verdictBanner(score)).toBe("Tie");
    expect(verdictBanner({ ...score, winner: "black" })).toBe("Black wins");
  });
});

describe("api client sequencing", () => {
  it("discards responses that arrive after a newer request", async () => {
    let release: (() => void) | null = null;
    const slow = new Promise<void>((resolve) => {
      release = resolve;
    });
    const payload = { n: 1, rho: "1", winner: "white" };
    const fetchImpl = vi
      .fn()
      .mockImplementationOnce(async () => {
        await slow;
        return new Response(JSON.stringify(payload), { status: 200 });
      })
      .mockImplementationOnce(async () =>
        new Response(JSON.stringify(payload), { status: 200 }),
      );
    const client = new Client("http://irrelevant", fetchImpl as unknown as typeof fetch);
    const first = client.verdict(1, "1");
    const second = client.verdict(1, "1");
    await expect(second).resolves.toEqual(payload);
    release!();
    await expect(first).resolves.toBe(STALE);
  });

  it("maps error bodies to typed errors", async () => {
    const fetchImpl = vi.fn(async () =>
      new Response(JSON.stringify({ code: "bad-block", message: "no such block" }), {
        status: 422,
      }),
    );
    const client = new Client("http://irrelevant", fetchImpl as unknown as typeof fetch);
    await expect(client.atomic("R9")).rejects.toMatchObject({
      code: "bad-block",
      status: 422,
    });
  });
});
