/** Entry point: wires the canvas, controls, and API client together.
 *
 * The human places White's points; the engine answers with the exact
 * diagram, Black's best reply, and the score. All geometry comes from
 * the server; this file is view/controller only.
 */

import { ApiRequestError, Client, STALE } from "./api.js";
import { formatCoordinate, parseRational } from "./rational.js";
import { cellArea, relativeError } from "./shoelace.js";
import {
  SessionState,
  decodeDocument,
  encodeDocument,
  initialState,
  placementError,
  stateFromDocument,
  toDocument,
} from "./state.js";
import { Viewport, canvasToWorld, drawDiagram, scoreFractions, verdictBanner } from "./render.js";
import type { PointPair } from "./types.js";

const AUDIT_TOLERANCE = 1e-9;

function byId<T extends HTMLElement>(id: string): T {
  const el = document.getElementById(id);
  if (!el) {
    throw new Error(`missing element #${id}`);
  }
  return el as T;
}

function setup(): void {
  const canvas = byId<HTMLCanvasElement>("board");
  const ctx = canvas.getContext("2d");
  if (!ctx) {
    throw new Error("canvas 2d context unavailable");
  }
  const status = byId<HTMLDivElement>("status");
  const banner = byId<HTMLDivElement>("banner");
  const scoreBar = byId<HTMLDivElement>("score-bar");
  const widthInput = byId<HTMLInputElement>("rect-width");
  const respondBtn = byId<HTMLButtonElement>("respond");
  const optimalBtn = byId<HTMLButtonElement>("optimal");
  const balanceBtn = byId<HTMLButtonElement>("balance");
  const clearBtn = byId<HTMLButtonElement>("clear");
  const nInput = byId<HTMLInputElement>("n-points");

  const client = new Client("");
  let state: SessionState = initialState();

  const restored = decodeDocument(window.location.hash.slice(1));
  if (restored) {
    state = stateFromDocument(restored);
    widthInput.value = restored.rect.width;
  }

  function viewport(): Viewport {
    return {
      width: canvas.width,
      height: canvas.height,
      rectWidth: parseRational(state.rect.width),
      rectHeight: parseRational(state.rect.height),
    };
  }

  function syncUrl(): void {
    window.location.hash = encodeDocument(toDocument(state));
  }

  function note(text: string, isError = false): void {
    status.textContent = text;
    status.classList.toggle("error", isError);
  }

  async function refreshDiagram(): Promise<void> {
    respondBtn.disabled = state.white.length === 0;
    syncUrl();
    if (state.white.length === 0) {
      ctx!.clearRect(0, 0, canvas.width, canvas.height);
      return;
    }
    try {
      const dia = await client.diagram(toDocument(state));
      if (dia === STALE) {
        return;
      }
      drawDiagram(ctx!, viewport(), dia, state.white.length);
    } catch (err) {
      note(err instanceof ApiRequestError ? `${err.code}: ${err.message}` : String(err), true);
    }
  }

  canvas.addEventListener("click", (ev) => {
    const rect = canvas.getBoundingClientRect();
    const [wx, wy] = canvasToWorld(
      viewport(),
      ((ev.clientX - rect.left) / rect.width) * canvas.width,
      ((ev.clientY - rect.top) / rect.height) * canvas.height,
    );
    const vp = viewport();
    const problem = placementError(state, wx, wy, vp.rectWidth, vp.rectHeight);
    if (problem) {
      note(problem, true);
      return;
    }
    state.white.push([formatCoordinate(wx), formatCoordinate(wy)] as PointPair);
    state.lastResponse = null;
    note(`${state.white.length} white point(s) placed`);
    void refreshDiagram();
  });

  respondBtn.addEventListener("click", async () => {
    note("thinking…");
    try {
      const res = await client.respond(toDocument(state));
      if (res === STALE) {
        return;
      }
      state.lastResponse = res;
      state.history.push({
        document: toDocument(state),
        certificate: res.certificate,
        score: res.score,
      });
      drawDiagram(ctx!, viewport(), res.diagram, state.white.length);
      banner.textContent = `${verdictBanner(res.score)} — ${res.certificate}`;
      const vp = viewport();
      const fr = scoreFractions(res.score, vp.rectWidth * vp.rectHeight);
      scoreBar.style.setProperty("--white", String(fr.white));
      scoreBar.style.setProperty("--black", String(fr.black));
      scoreBar.title =
        `white ${fr.white.toFixed(4)} / black ${fr.black.toFixed(4)} / ` +
        `neutral ${fr.neutral.toFixed(4)}`;
      // audit: recompute received polygon areas client-side
      const worst = Math.max(
        ...res.diagram.cells.map((cell) =>
          relativeError(cellArea(cell), parseRational(cell.area.exact)),
        ),
      );
      note(
        worst <= AUDIT_TOLERANCE
          ? `ok — area audit within ${AUDIT_TOLERANCE}`
          : `area audit mismatch: ${worst}`,
        worst > AUDIT_TOLERANCE,
      );
    } catch (err) {
      note(err instanceof ApiRequestError ? `${err.code}: ${err.message}` : String(err), true);
    }
  });

  optimalBtn.addEventListener("click", async () => {
    const n = Math.max(1, Number(nInput.value) || 1);
    try {
      const res = await client.atomic("grid", {
        rows: "1",
        cols: String(n),
        rho: state.rect.width,
      });
      if (res === STALE) {
        return;
      }
      state.white = res.white.exact.map((p) => [...p] as PointPair);
      state.lastResponse = null;
      note(`loaded the 1×${n} grid`);
      void refreshDiagram();
    } catch (err) {
      note(err instanceof ApiRequestError ? `${err.code}: ${err.message}` : String(err), true);
    }
  });

  balanceBtn.addEventListener("click", async () => {
    try {
      const res = await client.balance(toDocument(state));
      if (res === STALE) {
        return;
      }
      note(
        res.balanced
          ? `balanced — every half cell is ${res.target.exact}`
          : `not balanced — worst half-cell deviation ${res.worst_deviation.exact}`,
      );
    } catch (err) {
      note(err instanceof ApiRequestError ? `${err.code}: ${err.message}` : String(err), true);
    }
  });

  clearBtn.addEventListener("click", () => {
    state = initialState();
    state.rect.width = widthInput.value || "1";
    banner.textContent = "";
    note("cleared");
    void refreshDiagram();
  });

  widthInput.addEventListener("change", () => {
    state.rect.width = widthInput.value || "1";
    state.white = [];
    state.lastResponse = null;
    void refreshDiagram();
  });

  void refreshDiagram();
}

if (typeof document !== "undefined" && document.readyState !== "loading") {
  setup();
} else if (typeof document !== "undefined") {
  document.addEventListener("DOMContentLoaded", setup);
}
