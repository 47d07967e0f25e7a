/** Wire payloads captured verbatim from the running service against the
 * bundled 4-document corpus, so UI tests assert against real shapes. */

import type { DocumentPayload, TreePayload } from "../src/types.js";

export const FIXTURE_QUERY = "aspirin treatment of heart attack";

export const FIXTURE_TREE: TreePayload = {
  query: {
    terms: [
      { phrase: "aspirin", class: "keyword" },
      { phrase: "treatment", class: "keyword" },
      { phrase: "heart attack", class: "terminology" },
    ],
  },
  clusters: [
    {
      level: 1,
      band: [85.71428571428571, 100.0],
      documents: [
        {
          id: "2",
          title: "Aspirin treatment of heart attack",
          rank: 1,
          ds: 4.2,
          cl: 100.0,
          d: 100.0,
          id_pct: 0.0,
        },
      ],
    },
    {
      level: 2,
      band: [71.42857142857143, 85.71428571428571],
      documents: [
        {
          id: "1",
          title: "Aspirin in myocardial infarction therapy",
          rank: 1,
          ds: 5.766666666666667,
          cl: 76.66666666666666,
          d: 33.33333333333333,
          id_pct: 43.333333333333336,
        },
      ],
    },
    {
      level: 6,
      band: [14.285714285714286, 28.571428571428573],
      documents: [
        {
          id: "3",
          title: "Acetylsalicylic acid and platelet aggregation",
          rank: 1,
          ds: 1.1666666666666667,
          cl: 16.666666666666664,
          d: 0.0,
          id_pct: 16.666666666666664,
        },
      ],
    },
  ],
};

export const FIXTURE_DOC_2: DocumentPayload = {
  id: "2",
  title: "Aspirin treatment of heart attack",
  abstract: "Early antiplatelet use improves outcomes in cardiac emergencies.",
  source: "medline",
};

/** A second, unrelated tree for latest-wins tests. */
export const OTHER_TREE: TreePayload = {
  query: { terms: [{ phrase: "zebrafish", class: "keyword" }] },
  clusters: [
    {
      level: 4,
      band: [42.857142857142854, 57.142857142857146],
      documents: [
        {
          id: "4",
          title: "Zebrafish models of cardiac regeneration",
          rank: 1,
          ds: 2.5,
          cl: 50.0,
          d: 50.0,
          id_pct: 0.0,
        },
      ],
    },
  ],
};

export function jsonResponse(body: unknown, status = 200): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "Content-Type": "application/json" },
  });
}
