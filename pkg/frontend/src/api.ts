/** HTTP client. One in-flight request per session; responses arriving
 * out of order are discarded by sequence number.
 */

import type {
  ApiError,
  BalanceJson,
  ConfigDocument,
  DiagramJson,
  PointsJson,
  RespondJson,
  ScoreJson,
} from "./types.js";

export class ApiRequestError extends Error {
  readonly code: string;
  readonly status: number;

  constructor(status: number, body: ApiError) {
    super(body.message);
    this.code = body.code;
    this.status = status;
  }
}

/** Returned when a response is superseded by a newer request. */
export const STALE = Symbol("stale-response");

export class Client {
  private readonly base: string;
  private readonly fetchImpl: typeof fetch;
  private sequence = 0;

  constructor(base = "", fetchImpl: typeof fetch = fetch) {
    this.base = base.replace(/\/$/, "");
    this.fetchImpl = fetchImpl;
  }

  private async request<T>(path: string, init?: RequestInit): Promise<T | typeof STALE> {
    const seq = ++this.sequence;
    const res = await this.fetchImpl(`${this.base}${path}`, {
      headers: { "content-type": "application/json" },
      ...init,
    });
    if (seq !== this.sequence) {
      return STALE;
    }
    if (!res.ok) {
      const body = (await res.json().catch(() => ({ code: "unknown", message: res.statusText })));
      throw new ApiRequestError(res.status, body as ApiError);
    }
    return (await res.json()) as T;
  }

  diagram(doc: ConfigDocument, tie = "neutral"): Promise<DiagramJson & { svg: string } | typeof STALE> {
    return this.request(`/api/diagram?tie=${tie}`, {
      method: "POST",
      body: JSON.stringify(doc),
    });
  }

  score(doc: ConfigDocument): Promise<ScoreJson | typeof STALE> {
    return this.request("/api/score", { method: "POST", body: JSON.stringify(doc) });
  }

  respond(doc: ConfigDocument, resolution = 16): Promise<RespondJson | typeof STALE> {
    return this.request(`/api/respond?resolution=${resolution}`, {
      method: "POST",
      body: JSON.stringify(doc),
    });
  }

  balance(doc: ConfigDocument): Promise<BalanceJson | typeof STALE> {
    return this.request("/api/balance", { method: "POST", body: JSON.stringify(doc) });
  }

  atomic(name: string, params: Record<string, string> = {}): Promise<
    { name: string; rect: { width: string; height: string }; white: PointsJson } | typeof STALE
  > {
    const query = new URLSearchParams(params).toString();
    return this.request(`/api/atomic/${name}${query ? `?${query}` : ""}`);
  }

  verdict(n: number, rho: string): Promise<{ n: number; rho: string; winner: string } | typeof STALE> {
    return this.request(`/api/verdict?n=${n}&rho=${encodeURIComponent(rho)}`);
  }
}
