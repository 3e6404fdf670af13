// Fuzz: the client-side legality mirror must agree with the server's
// verdict.  Each draft is tried on a fresh session; "server accepts"
// means HTTP 200 on the move endpoint.

import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { violatedRule } from "../src/rules.js";
import type { WireMove } from "../src/types.js";
import { makeRng, randomInt, startService, type RunningService } from "./helpers.js";

const DRAFTS = 1000;

let service: RunningService;

beforeAll(async () => {
  service = await startService();
}, 30000);

afterAll(() => {
  service?.stop();
});

function randomHeaps(rng: () => number): number[] {
  const k = 3 + randomInt(rng, 3);
  const heaps = Array.from({ length: k }, () => randomInt(rng, 13));
  if (!heaps.some((h) => h > 0)) {
    heaps[randomInt(rng, k)] = 1 + randomInt(rng, 12);
  }
  return heaps;
}

function randomDraft(rng: () => number, heaps: number[]): WireMove {
  const k = heaps.length;
  if (rng() < 0.4) {
    // diagonal, sometimes out of range on either side
    return { type: "diagonal", t: randomInt(rng, Math.max(...heaps) + 2) };
  }
  const amounts = heaps.map((h) => {
    const roll = rng();
    if (roll < 0.45) return 0;
    if (roll < 0.9) return randomInt(rng, h + 1);
    return h + 1 + randomInt(rng, 2); // deliberate overdraw
  });
  if (rng() < 0.05) {
    amounts.push(1); // deliberate arity mismatch
  }
  return { type: "subset", amounts };
}

describe("client/server legality agreement", () => {
  it(
    `agrees on ${DRAFTS} fuzzed drafts`,
    async () => {
      const rng = makeRng(0xdecafbad);
      let accepted = 0;
      for (let i = 0; i < DRAFTS; i++) {
        const heaps = randomHeaps(rng);
        const draft = randomDraft(rng, heaps);
        const clientLegal = violatedRule(heaps, draft) === null;

        const created = await fetch(`${service.base}/sessions`, {
          method: "POST",
          headers: { "content-type": "application/json" },
          body: JSON.stringify({
            k: heaps.length,
            heaps,
            engine_side: "second",
          }),
        });
        expect(created.status).toBe(200);
        const session = (await created.json()) as { id: string };

        const response = await fetch(
          `${service.base}/sessions/${session.id}/move`,
          {
            method: "POST",
            headers: { "content-type": "application/json" },
            body: JSON.stringify({ move: draft, turn: 0 }),
          },
        );
        const serverLegal = response.status === 200;
        expect(
          serverLegal,
          `draft ${JSON.stringify(draft)} on heaps [${heaps.join(",")}]: ` +
            `client says ${clientLegal ? "legal" : "illegal"}, server ${response.status}`,
        ).toBe(clientLegal);
        if (serverLegal) accepted++;
      }
      // the generator must exercise both sides of the boundary
      expect(accepted).toBeGreaterThan(DRAFTS * 0.1);
      expect(accepted).toBeLessThan(DRAFTS * 0.9);
    },
    120000,
  );
});
