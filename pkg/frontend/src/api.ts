// Typed fetch client for the service endpoints.

import type { AnalysisRecord, SessionState, WireMove } from "./types.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    message: string,
  ) {
    super(message);
  }
}

async function request<T>(url: string, init?: RequestInit): Promise<T> {
  const response = await fetch(url, {
    headers: { "content-type": "application/json" },
    ...init,
  });
  const body = await response.json().catch(() => ({}));
  if (!response.ok) {
    const message =
      typeof body === "object" && body !== null && "error" in body
        ? String((body as { error: unknown }).error)
        : `request failed with status ${response.status}`;
    throw new ApiError(response.status, message);
  }
  return body as T;
}

export class ApiClient {
  constructor(private readonly base: string = "") {}

  health(): Promise<{ status: string }> {
    return request(`${this.base}/health`);
  }

  analyze(heaps: number[]): Promise<AnalysisRecord> {
    return request(`${this.base}/analyze`, {
      method: "POST",
      body: JSON.stringify({ k: heaps.length, heaps }),
    });
  }

  createSession(
    heaps: number[],
    engineSide: "first" | "second",
  ): Promise<SessionState> {
    return request(`${this.base}/sessions`, {
      method: "POST",
      body: JSON.stringify({ k: heaps.length, heaps, engine_side: engineSide }),
    });
  }

  getSession(id: string): Promise<SessionState> {
    return request(`${this.base}/sessions/${id}`);
  }

  submitMove(id: string, move: WireMove, turn: number): Promise<SessionState> {
    return request(`${this.base}/sessions/${id}/move`, {
      method: "POST",
      body: JSON.stringify({ move, turn }),
    });
  }
}
