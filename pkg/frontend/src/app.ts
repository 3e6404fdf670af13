// Application shell: owns the state, talks to the API, re-renders.
// At most one move request is in flight per session (`busy`).

import { ApiClient, ApiError } from "./api.js";
import { render, type Handlers } from "./render.js";
import {
  draftRule,
  draftToMove,
  initialState,
  setAmount,
  setDiagonal,
  withDraft,
  withError,
  withSession,
  type UiState,
} from "./state.js";

export class App {
  state: UiState = initialState();

  readonly handlers: Handlers = {
    onNewGame: (heaps, engineSide) => void this.startGame(heaps, engineSide),
    onMode: (mode) =>
      this.update(withDraft(this.state, { ...this.state.draft, mode })),
    onAmount: (heap, amount) =>
      this.update(
        withDraft(this.state, setAmount(this.state.draft, heap, amount)),
      ),
    onDiagonal: (t) =>
      this.update(withDraft(this.state, setDiagonal(this.state.draft, t))),
    onSubmit: () => void this.submitDraft(),
    onToggleOverlay: () => void this.toggleOverlay(),
  };

  constructor(
    private readonly root: HTMLElement,
    private readonly api: ApiClient,
  ) {
    this.update(this.state);
  }

  private update(next: UiState): void {
    this.state = next;
    render(this.root, this.state, this.handlers);
  }

  async startGame(
    heaps: number[],
    engineSide: "first" | "second",
  ): Promise<void> {
    if (heaps.length < 3 || heaps.some((h) => !Number.isInteger(h) || h < 0)) {
      this.update(
        withError(this.state, "enter at least 3 nonnegative heap sizes"),
      );
      return;
    }
    try {
      const session = await this.api.createSession(heaps, engineSide);
      this.update(withSession(this.state, session));
      await this.refreshOverlay();
    } catch (error) {
      this.update(withError(this.state, describeError(error)));
    }
  }

  async submitDraft(): Promise<void> {
    const session = this.state.session;
    if (session === null || this.state.busy) {
      return;
    }
    const rule = draftRule(this.state);
    if (rule !== null) {
      this.update(withError(this.state, rule));
      return;
    }
    this.update({ ...this.state, busy: true, error: null });
    try {
      const updated = await this.api.submitMove(
        session.id,
        draftToMove(this.state.draft),
        session.turn,
      );
      this.update(withSession(this.state, updated));
      await this.refreshOverlay();
    } catch (error) {
      if (error instanceof ApiError && error.status === 404) {
        // keep the draft; the player can start a new game from the form
        this.update(withError(this.state, "session expired; start a new game"));
      } else {
        this.update(withError(this.state, describeError(error)));
      }
    }
  }

  async toggleOverlay(): Promise<void> {
    this.update({ ...this.state, overlayOn: !this.state.overlayOn });
    await this.refreshOverlay();
  }

  private async refreshOverlay(): Promise<void> {
    const session = this.state.session;
    if (!this.state.overlayOn || session === null) {
      return;
    }
    if (!session.heaps.some((h) => h > 0)) {
      return; // terminal position; the banner already says who won
    }
    try {
      const analysis = await this.api.analyze(session.heaps);
      this.update({ ...this.state, analysis });
    } catch (error) {
      this.update(withError(this.state, describeError(error)));
    }
  }
}

function describeError(error: unknown): string {
  if (error instanceof ApiError) {
    return error.message;
  }
  return error instanceof Error ? error.message : String(error);
}

export function mount(root: HTMLElement, baseUrl = ""): App {
  return new App(root, new ApiClient(baseUrl));
}
