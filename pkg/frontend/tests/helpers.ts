// Shared test helpers: spawning the real HTTP service.

import { spawn, type ChildProcess } from "node:child_process";

export interface RunningService {
  base: string;
  stop(): void;
}

const sleep = (ms: number) => new Promise((resolve) => setTimeout(resolve, ms));

export async function startService(fixedPort?: number): Promise<RunningService> {
  const port = fixedPort ?? 20000 + Math.floor(Math.random() * 20000);
  const base = `http://127.0.0.1:${port}`;
  const proc: ChildProcess = spawn(
    "python3",
    ["-m", "triheap.cli", "serve", "--host", "127.0.0.1", "--port", String(port)],
    { stdio: "ignore" },
  );
  const deadline = Date.now() + 20000;
  while (Date.now() < deadline) {
    if (proc.exitCode !== null) {
      throw new Error(`service exited early with code ${proc.exitCode}`);
    }
    try {
      const response = await fetch(`${base}/health`);
      if (response.ok) {
        return { base, stop: () => proc.kill("SIGTERM") };
      }
    } catch {
      // not up yet
    }
    await sleep(150);
  }
  proc.kill("SIGTERM");
  throw new Error("service did not become healthy in time");
}

export function randomInt(rng: () => number, bound: number): number {
  return Math.floor(rng() * bound);
}

/** Deterministic xorshift PRNG so fuzz failures are reproducible. */
export function makeRng(seed: number): () => number {
  let state = seed >>> 0 || 1;
  return () => {
    state ^= state << 13;
    state ^= state >>> 17;
    state ^= state << 5;
    state >>>= 0;
    return state / 0x100000000;
  };
}
