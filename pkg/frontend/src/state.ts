/** Pure view-state transitions.
 *
 * Every function returns a new state; nothing here touches the DOM or the
 * network, so each transition is directly unit-testable. Two rules shape
 * the design: server data is never reordered or recomputed client-side,
 * and a failed request must not destroy what the user already sees.
 */

import type { DocRowPayload, DocumentPayload, TreePayload } from "./types.js";

export interface ViewState {
  queryText: string;
  /** Last successful search result; survives later failures. */
  tree: TreePayload | null;
  /** Expansion flags keyed only by levels present in the tree. */
  expanded: Record<number, boolean>;
  selectedId: string | null;
  /** Fetched body for the selected document, once it arrives. */
  selectedDoc: DocumentPayload | null;
  searchPending: boolean;
  docPending: boolean;
  /** Service or network failure text for the banner; null hides it. */
  banner: string | null;
  /** Inline note in the viewer pane ("document unavailable"). */
  viewerNote: string | null;
  /** Inline note under the query box (empty input, no request sent). */
  validation: string | null;
}

export function initialState(): ViewState {
  return {
    queryText: "",
    tree: null,
    expanded: {},
    selectedId: null,
    selectedDoc: null,
    searchPending: false,
    docPending: false,
    banner: null,
    viewerNote: null,
    validation: null,
  };
}

export function queryEdited(state: ViewState, text: string): ViewState {
  return { ...state, queryText: text, validation: null };
}

/** An empty or blank submission is reported inline; no request is made. */
export function searchRejectedEmpty(state: ViewState): ViewState {
  return { ...state, validation: "Enter a query before searching." };
}

export function searchStarted(state: ViewState): ViewState {
  return { ...state, searchPending: true, banner: null, validation: null };
}

/** Replace the tree, drop any selection, and expand level 1 only. */
export function searchSucceeded(state: ViewState, tree: TreePayload): ViewState {
  const expanded: Record<number, boolean> = {};
  for (const cluster of tree.clusters) {
    expanded[cluster.level] = cluster.level === 1;
  }
  return {
    ...state,
    tree,
    expanded,
    selectedId: null,
    selectedDoc: null,
    searchPending: false,
    banner: null,
    viewerNote: null,
  };
}

/** Show the failure but keep the previous tree and selection intact. */
export function searchFailed(state: ViewState, message: string): ViewState {
  return { ...state, searchPending: false, banner: message };
}

/** Find a document row anywhere in the tree; null when absent. */
export function findDocRow(
  tree: TreePayload | null,
  docId: string,
): { row: DocRowPayload; level: number } | null {
  if (tree === null) return null;
  for (const cluster of tree.clusters) {
    for (const row of cluster.documents) {
      if (row.id === docId) return { row, level: cluster.level };
    }
  }
  return null;
}

/** Begin fetching a clicked document; a stale id gets the inline note. */
export function documentRequested(state: ViewState, docId: string): ViewState {
  if (findDocRow(state.tree, docId) === null) {
    return { ...state, viewerNote: `Document ${docId} unavailable.` };
  }
  return {
    ...state,
    selectedId: docId,
    selectedDoc: null,
    docPending: true,
    viewerNote: null,
  };
}

/** Apply a fetched body only if it is still the selected document. */
export function documentLoaded(state: ViewState, doc: DocumentPayload): ViewState {
  if (state.selectedId !== doc.id) return state;
  return { ...state, selectedDoc: doc, docPending: false };
}

export function documentUnavailable(
  state: ViewState,
  docId: string,
  message: string,
): ViewState {
  if (state.selectedId !== docId) return state;
  return { ...state, docPending: false, viewerNote: message };
}

/** Flip one level's expansion; an absent level is a no-op. */
export function toggleCluster(state: ViewState, level: number): ViewState {
  if (!(level in state.expanded)) return state;
  return {
    ...state,
    expanded: { ...state.expanded, [level]: !state.expanded[level] },
  };
}
