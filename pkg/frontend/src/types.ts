// Wire types mirroring the service's JSON schema (see the repo README).

export interface WireSubsetMove {
  type: "subset";
  /** Tokens removed per heap, in the client's heap order. */
  amounts: number[];
}

export interface WireDiagonalMove {
  type: "diagonal";
  /** Tokens removed from every heap. */
  t: number;
}

export type WireMove = WireSubsetMove | WireDiagonalMove;

export type Mover = "human" | "engine";

export interface HistoryEntry {
  mover: Mover;
  move: WireMove;
  heaps: number[];
}

export interface SessionState {
  id: string;
  k: number;
  heaps: number[];
  canonical: number[];
  engine_side: "first" | "second";
  status: "in-progress" | "finished";
  winner: Mover | null;
  to_move: Mover | null;
  turn: number;
  history: HistoryEntry[];
}

export interface Derivation {
  n: number;
  j: number;
  L: number;
  case: string;
  m: number | null;
  t: number | null;
}

export interface AnalysisRecord {
  verdict: "P" | "N";
  k: number;
  heaps: number[];
  canonical: number[];
  class_index: number | null;
  winning_move: WireMove | null;
  derivation: Derivation | null;
  result: number[] | null;
}
