/** DOM wiring: events in, state transitions, re-render.
 *
 * At most one search and one document fetch are outstanding; a stamped
 * sequence number makes responses latest-wins, so a slow reply can never
 * overwrite a newer one.
 */

import type { ApiClient } from "./api.js";
import type { ViewState } from "./state.js";
import {
  documentLoaded,
  documentRequested,
  documentUnavailable,
  initialState,
  queryEdited,
  searchFailed,
  searchRejectedEmpty,
  searchStarted,
  searchSucceeded,
  toggleCluster,
} from "./state.js";
import {
  renderBanner,
  renderTree,
  renderValidation,
  renderViewer,
} from "./view.js";

export interface AppHandles {
  getState(): ViewState;
  /** Submit a query; blank text is rejected inline without a request. */
  submit(text: string): Promise<void>;
  /** Open a document from the tree (latest click wins). */
  selectDocument(docId: string): Promise<void>;
  toggle(level: number): void;
}

function messageOf(error: unknown): string {
  if (error instanceof Error && error.message) return error.message;
  return "search service unreachable";
}

/**
 * Mount the explorer. *root* must contain the pane elements created by
 * index.html: #query-form, #query-input, #validation, #banner, #tree,
 * and #viewer.
 */
export function createApp(root: ParentNode, client: ApiClient): AppHandles {
  const form = root.querySelector<HTMLFormElement>("#query-form");
  const input = root.querySelector<HTMLInputElement>("#query-input");
  const panes = {
    validation: root.querySelector<HTMLElement>("#validation"),
    banner: root.querySelector<HTMLElement>("#banner"),
    tree: root.querySelector<HTMLElement>("#tree"),
    viewer: root.querySelector<HTMLElement>("#viewer"),
  };
  if (!form || !input || !panes.validation || !panes.banner || !panes.tree || !panes.viewer) {
    throw new Error("explorer markup is incomplete");
  }

  let state = initialState();
  let searchSeq = 0;
  let docSeq = 0;

  function render(): void {
    panes.validation!.innerHTML = renderValidation(state);
    panes.banner!.innerHTML = renderBanner(state);
    panes.tree!.innerHTML = renderTree(state);
    panes.viewer!.innerHTML = renderViewer(state);
  }

  function apply(next: ViewState): void {
    state = next;
    render();
  }

  async function submit(text: string): Promise<void> {
    apply(queryEdited(state, text));
    if (text.trim() === "") {
      apply(searchRejectedEmpty(state));
      return;
    }
    const seq = ++searchSeq;
    apply(searchStarted(state));
    try {
      const tree = await client.search(text.trim());
      if (seq !== searchSeq) return;
      apply(searchSucceeded(state, tree));
    } catch (error) {
      if (seq !== searchSeq) return;
      apply(searchFailed(state, messageOf(error)));
    }
  }

  async function selectDocument(docId: string): Promise<void> {
    apply(documentRequested(state, docId));
    if (state.selectedId !== docId) return;
    const seq = ++docSeq;
    try {
      const doc = await client.getDocument(docId);
      if (seq !== docSeq) return;
      apply(documentLoaded(state, doc));
    } catch {
      if (seq !== docSeq) return;
      apply(documentUnavailable(state, docId, `Document ${docId} unavailable.`));
    }
  }

  function toggle(level: number): void {
    apply(toggleCluster(state, level));
  }

  form.addEventListener("submit", (event) => {
    event.preventDefault();
    void submit(input.value);
  });
  input.addEventListener("input", () => {
    state = queryEdited(state, input.value);
    panes.validation!.innerHTML = renderValidation(state);
  });
  panes.tree.addEventListener("click", (event) => {
    const target = (event.target as Element | null)?.closest("[data-action]");
    if (!target) return;
    const action = target.getAttribute("data-action");
    if (action === "toggle") {
      toggle(Number(target.getAttribute("data-level")));
    } else if (action === "select") {
      void selectDocument(target.getAttribute("data-doc") ?? "");
    }
  });

  render();
  return { getState: () => state, submit, selectDocument, toggle };
}
