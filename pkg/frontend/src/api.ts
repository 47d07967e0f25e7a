/** Thin fetch wrappers over the search service HTTP contract. */

import type { DocumentPayload, HealthPayload, TreePayload } from "./types.js";

/** A response the service answered with a JSON error body. */
export class ApiError extends Error {
  readonly status: number;

  constructor(status: number, message: string) {
    super(message);
    this.name = "ApiError";
    this.status = status;
  }
}

async function errorMessage(response: Response): Promise<string> {
  try {
    const body = (await response.json()) as { error?: unknown };
    if (typeof body.error === "string" && body.error) return body.error;
  } catch {
    // fall through to the generic message
  }
  return `service error (HTTP ${response.status})`;
}

async function readJson<T>(response: Response): Promise<T> {
  if (!response.ok) {
    throw new ApiError(response.status, await errorMessage(response));
  }
  return (await response.json()) as T;
}

export interface ApiClient {
  search(query: string, maxResults?: number): Promise<TreePayload>;
  getDocument(docId: string): Promise<DocumentPayload>;
  health(): Promise<HealthPayload>;
}

/**
 * Build a client bound to *baseUrl* (empty string = same origin). The
 * fetch implementation is injectable so tests can run without a server.
 */
export function createClient(
  baseUrl = "",
  fetchImpl: typeof fetch = fetch,
): ApiClient {
  const base = baseUrl.replace(/\/$/, "");
  return {
    async search(query, maxResults) {
      const payload: { query: string; max_results?: number } = { query };
      if (maxResults !== undefined) payload.max_results = maxResults;
      const response = await fetchImpl(`${base}/search`, {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify(payload),
      });
      return readJson<TreePayload>(response);
    },

    async getDocument(docId) {
      const response = await fetchImpl(
        `${base}/documents/${encodeURIComponent(docId)}`,
      );
      return readJson<DocumentPayload>(response);
    },

    async health() {
      const response = await fetchImpl(`${base}/health`);
      return readJson<HealthPayload>(response);
    },
  };
}
