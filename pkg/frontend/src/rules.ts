// Client-side mirror of the server's move legality rules.
//
// The server stays authoritative; this exists so the UI can disable the
// submit button and explain why before a request is made.  The fuzz
// test in tests/e2e.session.test.ts checks verdict agreement against
// the live service.

import type { WireMove } from "./types.js";

function isCount(value: unknown): value is number {
  return typeof value === "number" && Number.isInteger(value) && value >= 0;
}

/** Returns the violated rule's description, or null for a legal move. */
export function violatedRule(heaps: number[], move: WireMove): string | null {
  const k = heaps.length;
  if (move.type === "diagonal") {
    if (!Number.isInteger(move.t) || move.t < 1) {
      return "a diagonal move must remove at least one token";
    }
    if (move.t > Math.min(...heaps)) {
      return "a diagonal move cannot remove more than the smallest heap";
    }
    return null;
  }
  if (move.type === "subset") {
    if (move.amounts.length !== k) {
      return "a subset move needs one amount per heap";
    }
    let positive = 0;
    for (let i = 0; i < k; i++) {
      const amount = move.amounts[i]!;
      if (!isCount(amount)) {
        return "removal amounts must be nonnegative";
      }
      if (amount > heaps[i]!) {
        return "cannot remove more tokens than a heap holds";
      }
      if (amount > 0) {
        positive += 1;
      }
    }
    if (positive === 0) {
      return "a move must remove at least one token";
    }
    if (positive > k - 1) {
      return `a subset move may touch at most k-1 heaps (k-1=${k - 1})`;
    }
    return null;
  }
  return "unknown move type";
}

export function isLegal(heaps: number[], move: WireMove): boolean {
  return violatedRule(heaps, move) === null;
}

/** Result of applying a legal move, in the same heap order. */
export function applyMove(heaps: number[], move: WireMove): number[] {
  if (move.type === "diagonal") {
    return heaps.map((h) => h - move.t);
  }
  return heaps.map((h, i) => h - (move.amounts[i] ?? 0));
}
