import { describe, expect, it } from "vitest";

import {
  draftRule,
  draftToMove,
  emptyDraft,
  initialState,
  setAmount,
  setDiagonal,
  withError,
  withSession,
} from "../src/state.js";
import type { SessionState } from "../src/types.js";

function session(overrides: Partial<SessionState> = {}): SessionState {
  return {
    id: "s1",
    k: 4,
    heaps: [7, 7, 7, 8],
    canonical: [7, 7, 7, 8],
    engine_side: "second",
    status: "in-progress",
    winner: null,
    to_move: "human",
    turn: 0,
    history: [],
    ...overrides,
  };
}

describe("draft editing", () => {
  it("starts as an empty subset draft", () => {
    const draft = emptyDraft(4);
    expect(draft.mode).toBe("subset");
    expect(draft.amounts).toEqual([0, 0, 0, 0]);
  });

  it("setAmount switches to subset mode and keeps other heaps", () => {
    let draft = setDiagonal(emptyDraft(3), 2);
    draft = setAmount(draft, 1, 4);
    expect(draft.mode).toBe("subset");
    expect(draft.amounts).toEqual([0, 4, 0]);
  });

  it("draftToMove emits wire moves", () => {
    expect(draftToMove(setDiagonal(emptyDraft(3), 2))).toEqual({
      type: "diagonal",
      t: 2,
    });
    expect(draftToMove(setAmount(emptyDraft(3), 2, 1))).toEqual({
      type: "subset",
      amounts: [0, 0, 1],
    });
  });
});

describe("draftRule", () => {
  it("requires a game", () => {
    expect(draftRule(initialState())).toBe("no game in progress");
  });

  it("blocks empty drafts with the rule text", () => {
    const state = withSession(initialState(), session());
    expect(draftRule(state)).toMatch(/at least one token/);
  });

  it("passes a legal draft through", () => {
    let state = withSession(initialState(), session());
    state = { ...state, draft: setDiagonal(state.draft, 6) };
    expect(draftRule(state)).toBeNull();
  });

  it("blocks out-of-turn and finished games", () => {
    const engineTurn = withSession(
      initialState(),
      session({ to_move: "engine" }),
    );
    expect(draftRule(engineTurn)).toMatch(/waiting/);
    const done = withSession(
      initialState(),
      session({
        status: "finished",
        winner: "human",
        to_move: null,
        heaps: [0, 0, 0, 0],
      }),
    );
    expect(draftRule(done)).toMatch(/finished/);
  });
});

describe("state transitions", () => {
  it("withSession resets draft, error and stale analysis", () => {
    let state = withError(initialState(), "boom");
    state = {
      ...state,
      analysis: {
        verdict: "N",
        k: 4,
        heaps: [1, 1, 1, 1],
        canonical: [1, 1, 1, 1],
        class_index: null,
        winning_move: { type: "diagonal", t: 1 },
        derivation: null,
        result: [0, 0, 0, 0],
      },
    };
    const next = withSession(state, session());
    expect(next.error).toBeNull();
    expect(next.analysis).toBeNull();
    expect(next.draft.amounts).toHaveLength(4);
    expect(next.busy).toBe(false);
  });

  it("withError clears busy but keeps the draft", () => {
    let state = withSession(initialState(), session());
    state = { ...state, draft: setDiagonal(state.draft, 3), busy: true };
    const next = withError(state, "stale turn");
    expect(next.error).toBe("stale turn");
    expect(next.busy).toBe(false);
    expect(next.draft.t).toBe(3);
  });
});
