/** Pure HTML renderers for the three panes.
 *
 * Renderers are string -> string functions over ViewState so tests can
 * assert on markup without a browser. Server-provided order is preserved
 * exactly; the only client-side transformation is 4-decimal formatting.
 */

import type { ViewState } from "./state.js";
import { findDocRow } from "./state.js";
import type { ClusterPayload, DocRowPayload } from "./types.js";

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;")
    .replace(/'/g, "&#39;");
}

/** Fixed 4-decimal rendering for scores and percentages. */
export function fmt4(value: number): string {
  return value.toFixed(4);
}

function renderDocRow(level: number, row: DocRowPayload, selected: boolean): string {
  const cls = selected ? "doc-row selected" : "doc-row";
  return (
    `<li><button type="button" class="${cls}" data-action="select"` +
    ` data-doc="${escapeHtml(row.id)}" data-level="${level}"` +
    ` data-rank="${row.rank}" data-ds="${row.ds}" data-cl="${row.cl}">` +
    `<span class="rank">#${row.rank}</span>` +
    `<span class="title">${escapeHtml(row.title)}</span>` +
    `<span class="scores">DS=${fmt4(row.ds)} CL=${fmt4(row.cl)}</span>` +
    `</button></li>`
  );
}

function renderCluster(cluster: ClusterPayload, state: ViewState): string {
  const open = state.expanded[cluster.level] === true;
  const [low, high] = cluster.band;
  const count = cluster.documents.length;
  const header =
    `<button type="button" class="cluster-header" data-action="toggle"` +
    ` data-level="${cluster.level}" aria-expanded="${open}">` +
    `<span class="caret">${open ? "▾" : "▸"}</span>` +
    `<span class="level">[L${cluster.level}]</span>` +
    `<span class="band">${fmt4(low)}–${fmt4(high)}%</span>` +
    `<span class="count">${count} doc${count === 1 ? "" : "s"}</span>` +
    `</button>`;
  const rows = open
    ? `<ul class="doc-list">` +
      cluster.documents
        .map((row) => renderDocRow(cluster.level, row, row.id === state.selectedId))
        .join("") +
      `</ul>`
    : "";
  return `<section class="cluster" data-level="${cluster.level}">${header}${rows}</section>`;
}

export function renderTree(state: ViewState): string {
  if (state.tree === null) {
    return `<p class="placeholder">Run a search to build the rank tree.</p>`;
  }
  if (state.tree.clusters.length === 0) {
    return `<p class="placeholder">No results.</p>`;
  }
  const terms = state.tree.query.terms
    .map(
      (t) =>
        `<span class="term ${t.class}">${escapeHtml(t.phrase)}</span>`,
    )
    .join("");
  const clusters = state.tree.clusters
    .map((cluster) => renderCluster(cluster, state))
    .join("");
  return `<div class="query-echo">${terms}</div>${clusters}`;
}

export function renderViewer(state: ViewState): string {
  if (state.viewerNote !== null) {
    return `<p class="viewer-note">${escapeHtml(state.viewerNote)}</p>`;
  }
  if (state.selectedId === null) {
    return `<p class="placeholder">Click a document to open it.</p>`;
  }
  const found = findDocRow(state.tree, state.selectedId);
  if (found === null) {
    return `<p class="viewer-note">Document ${escapeHtml(state.selectedId)} unavailable.</p>`;
  }
  const scores =
    `<dl class="score-grid">` +
    `<dt>DS</dt><dd>DS=${fmt4(found.row.ds)}</dd>` +
    `<dt>CL</dt><dd>CL=${fmt4(found.row.cl)}%</dd>` +
    `<dt>direct</dt><dd>${fmt4(found.row.d)}%</dd>` +
    `<dt>indirect</dt><dd>${fmt4(found.row.id_pct)}%</dd>` +
    `<dt>level</dt><dd>L${found.level}</dd>` +
    `<dt>rank</dt><dd>#${found.row.rank}</dd>` +
    `</dl>`;
  if (state.docPending || state.selectedDoc === null) {
    return (
      `<h2 class="doc-title">${escapeHtml(found.row.title)}</h2>` +
      scores +
      `<p class="placeholder">Loading document…</p>`
    );
  }
  const doc = state.selectedDoc;
  return (
    `<h2 class="doc-title">${escapeHtml(doc.title)}</h2>` +
    `<p class="doc-meta">id ${escapeHtml(doc.id)} · ${escapeHtml(doc.source)}</p>` +
    scores +
    `<p class="doc-abstract">${escapeHtml(doc.abstract)}</p>`
  );
}

export function renderBanner(state: ViewState): string {
  if (state.banner === null) return "";
  return `<div class="banner" role="alert">${escapeHtml(state.banner)}</div>`;
}

export function renderValidation(state: ViewState): string {
  if (state.validation === null) return "";
  return `<p class="validation">${escapeHtml(state.validation)}</p>`;
}
