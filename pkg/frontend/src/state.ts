/** Session state: the document being edited, the last engine response,
 * and a history of attempts. Serialisable to/from the URL hash so
 * sessions are shareable links.
 */

import type { ConfigDocument, PointPair, RespondJson, ScoreJson } from "./types.js";

export interface Attempt {
  document: ConfigDocument;
  certificate: string;
  score: ScoreJson;
}

export interface SessionState {
  rect: { width: string; height: string };
  white: PointPair[];
  lastResponse: RespondJson | null;
  history: Attempt[];
}

export function initialState(): SessionState {
  return {
    rect: { width: "1", height: "1" },
    white: [],
    lastResponse: null,
    history: [],
  };
}

export function toDocument(state: SessionState): ConfigDocument {
  return { rect: { ...state.rect }, white: state.white.map((p) => [...p] as PointPair) };
}

/** Client-side placement validation mirroring the server's rules. */
export function placementError(
  state: SessionState,
  x: number,
  y: number,
  width: number,
  height: number,
): string | null {
  if (!(x > 0 && x < width && y > 0 && y < height)) {
    return "point must lie strictly inside the rectangle";
  }
  for (const [px, py] of state.white) {
    if (Number(px) === x && Number(py) === y) {
      return "duplicate point";
    }
  }
  return null;
}

/** URL-safe encoding of the ConfigDocument (hash fragment). */
export function encodeDocument(doc: ConfigDocument): string {
  const compact = JSON.stringify({ rect: doc.rect, white: doc.white });
  // base64url keeps the fragment free of '#'/'&' hazards
  const bytes = new TextEncoder().encode(compact);
  let binary = "";
  for (const b of bytes) {
    binary += String.fromCharCode(b);
  }
  return btoa(binary).replace(/\+/g, "-").replace(/\//g, "_").replace(/=+$/, "");
}

export function decodeDocument(fragment: string): ConfigDocument | null {
  if (!fragment) {
    return null;
  }
  try {
    const b64 = fragment.replace(/-/g, "+").replace(/_/g, "/");
    const padded = b64 + "=".repeat((4 - (b64.length % 4)) % 4);
    const binary = atob(padded);
    const bytes = Uint8Array.from(binary, (c) => c.charCodeAt(0));
    const parsed = JSON.parse(new TextDecoder().decode(bytes));
    if (!parsed || typeof parsed !== "object" || !parsed.rect || !Array.isArray(parsed.white)) {
      return null;
    }
    return { rect: parsed.rect, white: parsed.white };
  } catch {
    return null;
  }
}

export function stateFromDocument(doc: ConfigDocument): SessionState {
  return {
    rect: { width: doc.rect.width, height: doc.rect.height },
    white: doc.white.map((p) => [...p] as PointPair),
    lastResponse: null,
    history: [],
  };
}
