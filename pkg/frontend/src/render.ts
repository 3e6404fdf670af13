// DOM rendering.  The whole view is rebuilt from state on every change;
// positions are tiny, so diffing would be noise.

import { applyMove } from "./rules.js";
import { draftRule, type UiState } from "./state.js";
import type { WireMove } from "./types.js";

export interface Handlers {
  onNewGame(heaps: number[], engineSide: "first" | "second"): void;
  onMode(mode: "subset" | "diagonal"): void;
  onAmount(heap: number, amount: number): void;
  onDiagonal(t: number): void;
  onSubmit(): void;
  onToggleOverlay(): void;
}

const MAX_DRAWN_TOKENS = 30;

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

export function describeMove(move: WireMove): string {
  if (move.type === "diagonal") {
    return `diagonal -${move.t}`;
  }
  const clauses = move.amounts
    .map((a, i) => (a > 0 ? `-${a} from heap ${i}` : null))
    .filter((c): c is string => c !== null);
  return clauses.join(", ");
}

function renderNewGameForm(handlers: Handlers): HTMLElement {
  const form = el("form", "new-game");
  const heapsInput = el("input");
  heapsInput.name = "heaps";
  heapsInput.value = "7,7,7,8";
  heapsInput.setAttribute("aria-label", "starting heaps");
  const sideSelect = el("select");
  sideSelect.name = "engine-side";
  for (const side of ["second", "first"]) {
    const option = el("option", undefined, `engine moves ${side}`);
    option.value = side;
    sideSelect.appendChild(option);
  }
  const start = el("button", "start", "new game");
  start.type = "submit";
  form.append(heapsInput, sideSelect, start);
  form.addEventListener("submit", (event) => {
    event.preventDefault();
    const heaps = heapsInput.value
      .split(/[\s,]+/)
      .filter((s) => s.length > 0)
      .map((s) => Number.parseInt(s, 10));
    handlers.onNewGame(
      heaps,
      sideSelect.value === "first" ? "first" : "second",
    );
  });
  return form;
}

function renderHeaps(state: UiState, handlers: Handlers): HTMLElement {
  const session = state.session!;
  const board = el("div", "board");
  const minHeap = Math.min(...session.heaps);
  const preview =
    draftRule(state) === null
      ? applyMove(session.heaps, draftFromState(state))
      : null;
  session.heaps.forEach((count, index) => {
    const isAnchor = state.overlayOn && count === minHeap;
    const column = el("div", "heap" + (isAnchor ? " heap-anchor" : ""));
    column.dataset["heap"] = String(index);
    const stack = el("div", "stack");
    const drawn = Math.min(count, MAX_DRAWN_TOKENS);
    for (let i = 0; i < drawn; i++) {
      const keep = preview === null || i < preview[index]!;
      stack.appendChild(el("span", "token" + (keep ? "" : " token-leaving")));
    }
    if (count > MAX_DRAWN_TOKENS) {
      stack.appendChild(el("span", "token-more", `+${count - MAX_DRAWN_TOKENS}`));
    }
    const label = el("div", "heap-label", `heap ${index}: ${count}`);
    column.append(stack, label);
    board.appendChild(column);
  });
  return board;
}

function draftFromState(state: UiState): WireMove {
  return state.draft.mode === "diagonal"
    ? { type: "diagonal", t: state.draft.t }
    : { type: "subset", amounts: state.draft.amounts };
}

function renderMoveEntry(state: UiState, handlers: Handlers): HTMLElement {
  const session = state.session!;
  const entry = el("div", "move-entry");

  const modeRow = el("div", "mode-row");
  for (const mode of ["subset", "diagonal"] as const) {
    const label = el("label", "mode-option");
    const radio = el("input");
    radio.type = "radio";
    radio.name = "mode";
    radio.value = mode;
    radio.checked = state.draft.mode === mode;
    radio.addEventListener("change", () => handlers.onMode(mode));
    label.append(
      radio,
      document.createTextNode(
        mode === "subset" ? " pick heaps & amounts" : " diagonal (all heaps)",
      ),
    );
    modeRow.appendChild(label);
  }
  entry.appendChild(modeRow);

  if (state.draft.mode === "subset") {
    const grid = el("div", "amounts");
    session.heaps.forEach((count, index) => {
      const cell = el("label", "amount-cell", `heap ${index} `);
      const input = el("input");
      input.type = "number";
      input.min = "0";
      input.max = String(count);
      input.value = String(state.draft.amounts[index] ?? 0);
      input.dataset["amountFor"] = String(index);
      input.addEventListener("input", () => {
        handlers.onAmount(index, Number.parseInt(input.value || "0", 10));
      });
      cell.appendChild(input);
      grid.appendChild(cell);
    });
    entry.appendChild(grid);
  } else {
    const minHeap = Math.min(...session.heaps);
    const row = el("label", "diagonal-row", `remove from every heap: `);
    const slider = el("input");
    slider.type = "range";
    slider.min = "1";
    slider.max = String(Math.max(minHeap, 1));
    slider.value = String(state.draft.t);
    slider.dataset["diagonal"] = "true";
    slider.addEventListener("input", () => {
      handlers.onDiagonal(Number.parseInt(slider.value, 10));
    });
    const amount = el("span", "diagonal-amount", String(state.draft.t));
    row.append(slider, amount);
    entry.appendChild(row);
  }

  const rule = draftRule(state);
  const submitRow = el("div", "submit-row");
  const submit = el("button", "submit", "make move");
  submit.type = "button";
  submit.disabled = rule !== null || state.busy;
  if (rule !== null) {
    submit.title = rule;
  }
  submit.addEventListener("click", () => handlers.onSubmit());
  submitRow.appendChild(submit);
  if (rule !== null && state.session?.to_move === "human") {
    submitRow.appendChild(el("span", "rule-tooltip", rule));
  }
  entry.appendChild(submitRow);
  return entry;
}

function renderOverlay(state: UiState): HTMLElement {
  const overlay = el("div", "overlay");
  const analysis = state.analysis;
  if (analysis === null) {
    overlay.appendChild(el("span", "badge badge-pending", "analyzing..."));
    return overlay;
  }
  if (analysis.verdict === "P") {
    overlay.appendChild(
      el("span", "badge badge-p", `P-position (n=${analysis.class_index})`),
    );
    overlay.appendChild(
      el(
        "span",
        "overlay-note",
        "whoever moves here loses against perfect play; the smallest heap is the anchor",
      ),
    );
  } else {
    overlay.appendChild(el("span", "badge badge-n", "N-position"));
    if (analysis.winning_move !== null) {
      overlay.appendChild(
        el(
          "span",
          "overlay-note",
          `engine would play: ${describeMove(analysis.winning_move)}`,
        ),
      );
    }
  }
  return overlay;
}

function renderHistory(state: UiState): HTMLElement {
  const session = state.session!;
  const log = el("ol", "history");
  for (const entry of session.history) {
    log.appendChild(
      el(
        "li",
        `history-${entry.mover}`,
        `${entry.mover}: ${describeMove(entry.move)} -> [${entry.heaps.join(", ")}]`,
      ),
    );
  }
  return log;
}

export function render(root: HTMLElement, state: UiState, handlers: Handlers): void {
  root.textContent = "";
  root.appendChild(el("h1", "title", "triheap"));
  root.appendChild(renderNewGameForm(handlers));

  const session = state.session;
  if (session === null) {
    if (state.error !== null) {
      root.appendChild(el("div", "error", state.error));
    }
    root.appendChild(
      el(
        "p",
        "hint",
        "start a game: take from up to k-1 heaps, or the same amount from all; last token wins",
      ),
    );
    return;
  }

  const status = el("div", "status");
  if (session.status === "finished") {
    status.appendChild(
      el(
        "div",
        "winner-banner",
        session.winner === "human" ? "you win!" : "the engine wins",
      ),
    );
  } else {
    status.appendChild(
      el(
        "div",
        "turn",
        session.to_move === "human" ? "your move" : "engine is thinking",
      ),
    );
  }
  root.appendChild(status);

  const overlayToggle = el("label", "overlay-toggle");
  const checkbox = el("input");
  checkbox.type = "checkbox";
  checkbox.checked = state.overlayOn;
  checkbox.addEventListener("change", () => handlers.onToggleOverlay());
  overlayToggle.append(checkbox, document.createTextNode(" show analysis"));
  root.appendChild(overlayToggle);
  if (state.overlayOn) {
    root.appendChild(renderOverlay(state));
  }

  root.appendChild(renderHeaps(state, handlers));
  if (session.status !== "finished") {
    root.appendChild(renderMoveEntry(state, handlers));
  }
  if (state.error !== null) {
    root.appendChild(el("div", "error", state.error));
  }
  root.appendChild(renderHistory(state));
}
