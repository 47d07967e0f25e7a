/** Wire types for the search service JSON contract. */

export type TermClass = "keyword" | "terminology";

export interface QueryTermPayload {
  phrase: string;
  class: TermClass;
}

/** One document row inside a cluster, exactly as serialized. */
export interface DocRowPayload {
  id: string;
  title: string;
  rank: number;
  ds: number;
  cl: number;
  d: number;
  id_pct: number;
}

export interface ClusterPayload {
  level: number;
  band: [number, number];
  documents: DocRowPayload[];
}

export interface TreePayload {
  query: { terms: QueryTermPayload[] };
  clusters: ClusterPayload[];
}

/** GET /documents/{id} response body. */
export interface DocumentPayload {
  id: string;
  title: string;
  abstract: string;
  source: string;
}

export interface HealthPayload {
  status: string;
  docs: number;
}
