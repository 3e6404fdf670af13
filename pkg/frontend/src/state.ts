// UI state: a pure function of the last server response plus the local
// move draft.  All transitions return fresh objects so rendering can be
// driven by simple replacement.

import { violatedRule } from "./rules.js";
import type { AnalysisRecord, SessionState, WireMove } from "./types.js";

export type DraftMode = "subset" | "diagonal";

export interface Draft {
  mode: DraftMode;
  /** Per-heap removal amounts (subset mode), client heap order. */
  amounts: number[];
  /** Diagonal removal amount. */
  t: number;
}

export interface UiState {
  session: SessionState | null;
  draft: Draft;
  overlayOn: boolean;
  analysis: AnalysisRecord | null;
  error: string | null;
  busy: boolean;
}

export function emptyDraft(k: number): Draft {
  return { mode: "subset", amounts: new Array(k).fill(0), t: 1 };
}

export function initialState(): UiState {
  return {
    session: null,
    draft: emptyDraft(0),
    overlayOn: false,
    analysis: null,
    error: null,
    busy: false,
  };
}

export function draftToMove(draft: Draft): WireMove {
  return draft.mode === "diagonal"
    ? { type: "diagonal", t: draft.t }
    : { type: "subset", amounts: [...draft.amounts] };
}

/** Why the current draft cannot be submitted, or null if it can. */
export function draftRule(state: UiState): string | null {
  const session = state.session;
  if (session === null) {
    return "no game in progress";
  }
  if (session.status === "finished") {
    return "the game is finished";
  }
  if (session.to_move !== "human") {
    return "waiting for the engine";
  }
  return violatedRule(session.heaps, draftToMove(state.draft));
}

export function withSession(state: UiState, session: SessionState): UiState {
  return {
    ...state,
    session,
    draft: emptyDraft(session.k),
    analysis: null, // stale for the new position; refetched when overlay is on
    error: null,
    busy: false,
  };
}

export function withDraft(state: UiState, draft: Draft): UiState {
  return { ...state, draft, error: null };
}

export function withError(state: UiState, error: string): UiState {
  return { ...state, error, busy: false };
}

export function setAmount(draft: Draft, heap: number, amount: number): Draft {
  const amounts = [...draft.amounts];
  amounts[heap] = amount;
  return { ...draft, mode: "subset", amounts };
}

export function setDiagonal(draft: Draft, t: number): Draft {
  return { ...draft, mode: "diagonal", t };
}
