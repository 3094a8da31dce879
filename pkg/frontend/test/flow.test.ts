/**
 * End-to-end flow against a real service instance: spawn the Python
 * server on a scratch port and data directory, then drive the app
 * through New Game -> compose -> submit -> outcome banner exactly as a
 * browser session would. The assertions only ever look at the VNode
 * tree and the snapshots the service returns.
 */

import { spawn, type ChildProcess } from "node:child_process";
import { mkdtempSync, rmSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";
import type { MoveWire } from "../src/api.js";
import { App } from "../src/app.js";
import { allNodes, findByClass, textContent } from "../src/render.js";

const PORT = 8931;
const BASE = `http://127.0.0.1:${PORT}`;

/** The scripted winning sequence for the seed-42 round-1 opponent. */
const WIN_MOVES: MoveWire[] = [
  { kind: "R1Add", site: { arc: 0, side: "L", chirality: -1 } },
  { kind: "R2Add", site: { arc1: 1, arc2: 2, over: true } },
  { kind: "CrossingFlip", site: { crossing: 0 } },
  { kind: "CrossingFlip", site: { crossing: 1 } },
];

let server: ChildProcess | undefined;
let dataDir: string;
let serverLog = "";

async function waitForHealthz(): Promise<void> {
  for (let i = 0; i < 200; i++) {
    try {
      const res = await fetch(`${BASE}/healthz`);
      if (res.ok) return;
    } catch {
      // not up yet
    }
    await new Promise((r) => setTimeout(r, 250));
  }
  throw new Error(`service never came up on ${BASE}\n${serverLog}`);
}

beforeAll(async () => {
  dataDir = mkdtempSync(join(tmpdir(), "kj-ui-flow-"));
  server = spawn(
    "python3",
    [
      "-m",
      "knottyjones.cli",
      "serve",
      "--port",
      String(PORT),
      "--host",
      "127.0.0.1",
      "--data-dir",
      dataDir,
    ],
    { stdio: ["ignore", "pipe", "pipe"] },
  );
  server.stdout?.on("data", (chunk: Buffer) => (serverLog += chunk.toString()));
  server.stderr?.on("data", (chunk: Buffer) => (serverLog += chunk.toString()));
  await waitForHealthz();
}, 120_000);

afterAll(() => {
  server?.kill();
  if (dataDir) rmSync(dataDir, { recursive: true, force: true });
});

describe("browser-equivalent session against the live service", () => {
  it(
    "plays the scripted winning round",
    async () => {
      const app = new App(new ApiClient(BASE));
      await app.newGame({ seed: 42, totalRounds: 2 });
      expect(app.error).toBeNull();
      expect(app.gameId).toBeTruthy();

      // Freshly created game: the player polynomial panel must read 1.
      let tree = app.render();
      const panels = allNodes(tree, (n) =>
        (n.attrs["class"] ?? "").includes("poly-text"),
      );
      expect(panels.length).toBe(2);
      expect(textContent(panels[0]!)).toBe("1");
      // The opponent target is some nontrivial polynomial.
      expect(textContent(panels[1]!)).not.toBe("1");
      // No banner yet.
      expect(findByClass(tree, "banner")).toBeUndefined();

      // The service enumerated moves for the unknot; overlays exist.
      expect(app.sites).not.toBeNull();
      expect(app.sites!.R1Add.length).toBeGreaterThan(0);
      const overlays = allNodes(tree, (n) =>
        (n.attrs["class"] ?? "").startsWith("site"),
      );
      expect(overlays.length).toBeGreaterThan(0);

      // Compose the winning sequence; all four fit the budgets.
      for (const move of WIN_MOVES) {
        expect(app.stage(move).ok).toBe(true);
      }
      tree = app.render();
      expect(
        allNodes(tree, (n) => (n.attrs["class"] ?? "").includes("staged-move"))
          .length,
      ).toBe(4);

      await app.submit();
      expect(app.error).toBeNull();
      expect(app.snapshot?.status).toBe("RoundWon");
      expect(app.snapshot?.score).toBe(600);
      expect(app.snapshot?.round).toBe(2);

      // Outcome banner, and the board already shows round 2: the player
      // keeps their diagram and faces a fresh opponent with a different JP.
      tree = app.render();
      expect(textContent(findByClass(tree, "banner")!)).toMatch(/Round won/);
      const panelsAfter = allNodes(tree, (n) =>
        (n.attrs["class"] ?? "").includes("poly-text"),
      );
      expect(textContent(panelsAfter[0]!)).toBe("t + t³ - t⁴");
      expect(textContent(findByClass(tree, "closeness")!)).toMatch(
        /Closeness: \d+ away/,
      );
    },
    120_000,
  );

  it(
    "blocks the fifth R-move client-side",
    async () => {
      const app = new App(new ApiClient(BASE));
      await app.newGame({ seed: 7 });
      const r1 = app.sites!.R1Add[0]!;
      for (let i = 0; i < 4; i++) {
        expect(app.stage(r1).ok).toBe(true);
      }
      const fifth = app.stage(r1);
      expect(fifth.ok).toBe(false);
      expect(fifth.reason).toMatch(/budget exhausted/);
      expect(app.composer?.staged.length).toBe(4);
    },
    60_000,
  );

  it(
    "keeps staged moves editable after the server rejects a turn",
    async () => {
      const app = new App(new ApiClient(BASE));
      await app.newGame({ seed: 11 });
      // R1Remove on the crossingless unknot is inapplicable; the
      // composer cannot know that, the service rejects it.
      app.stage({ kind: "R1Remove", site: { crossing: 0 } });
      const before = app.snapshot;
      await app.submit();
      expect(app.error).toMatch(/while submitting the turn/);
      expect(app.composer?.staged.length).toBe(1);
      expect(app.snapshot).toEqual(before);
      const tree = app.render();
      expect(findByClass(tree, "error")).toBeDefined();
      // Fix it up and carry on: the staged list is still editable.
      app.unstage(0);
      expect(app.composer?.staged.length).toBe(0);
      const r1 = app.sites!.R1Add[0]!;
      expect(app.stage(r1).ok).toBe(true);
      await app.submit();
      expect(app.error).toBeNull();
      expect(app.snapshot?.turnInRound).toBe(2);
    },
    60_000,
  );
});
