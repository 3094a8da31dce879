/**
 * Application state machine: New Game -> compose -> submit -> outcome.
 *
 * The app owns one mutable state bag and re-renders the whole page
 * VNode after every transition. Rules enforced here rather than in the
 * view: only one submission may be in flight, a rejected submission
 * leaves the staged moves untouched and editable, and the client never
 * derives a polynomial or applies a move itself; every verdict comes
 * back from the service.
 */

import { ApiClient, ApiError } from "./api.js";
import type {
  GameConfigWire,
  MoveSites,
  MoveWire,
  Snapshot,
} from "./api.js";
import type { StageResult } from "./budgets.js";
import { TurnComposer } from "./budgets.js";
import { layoutDiagram, mapFromPdText } from "./layout.js";
import type { VNode } from "./render.js";
import {
  h,
  renderBanner,
  renderComparison,
  renderDiagram,
  renderScoreboard,
} from "./render.js";

function describeSite(move: MoveWire): string {
  const parts = Object.entries(move.site).map(([k, v]) => `${k}=${v}`);
  return parts.join(" ");
}

export class App {
  private readonly client: ApiClient;
  private readonly onChange: () => void;

  gameId: string | null = null;
  snapshot: Snapshot | null = null;
  sites: MoveSites | null = null;
  composer: TurnComposer | null = null;
  submitting = false;
  /** Actionable message from the last failed request, if any. */
  error: string | null = null;
  /** Feedback from the last rejected stage attempt, if any. */
  stageNotice: string | null = null;

  constructor(client: ApiClient, onChange: () => void = () => {}) {
    this.client = client;
    this.onChange = onChange;
  }

  private notify(): void {
    this.onChange();
  }

  async newGame(config: Partial<GameConfigWire> = {}): Promise<void> {
    this.error = null;
    this.stageNotice = null;
    try {
      const created = await this.client.createGame(config);
      this.gameId = created.id;
      this.snapshot = created.snapshot;
      this.composer = new TurnComposer(created.snapshot.config);
      this.sites = await this.client.getMoves(created.id);
    } catch (err) {
      this.fail("starting a game", err);
    }
    this.notify();
  }

  stage(move: MoveWire): StageResult {
    if (!this.composer) return { ok: false, reason: "no game in progress" };
    const verdict = this.composer.stage(move);
    this.stageNotice = verdict.ok ? null : (verdict.reason ?? null);
    this.notify();
    return verdict;
  }

  unstage(index: number): void {
    this.composer?.unstage(index);
    this.stageNotice = null;
    this.notify();
  }

  async submit(): Promise<void> {
    if (!this.gameId || !this.composer || this.submitting) return;
    this.submitting = true;
    this.error = null;
    this.notify();
    try {
      const snap = await this.client.submitTurn(
        this.gameId,
        this.composer.toSubmission(),
      );
      this.snapshot = snap;
      this.composer = new TurnComposer(snap.config);
      this.stageNotice = null;
      if (!["GameWon", "GameLost"].includes(snap.status)) {
        this.sites = await this.client.getMoves(this.gameId);
      } else {
        this.sites = null;
      }
    } catch (err) {
      // The staged list is deliberately left as-is: fix and resubmit.
      this.fail("submitting the turn", err);
    } finally {
      this.submitting = false;
      this.notify();
    }
  }

  private fail(doing: string, err: unknown): void {
    if (err instanceof ApiError) {
      this.error = `${err.type} while ${doing}: ${err.message}`;
    } else {
      const msg = err instanceof Error ? err.message : String(err);
      this.error = `network trouble while ${doing}: ${msg} (is the service up?)`;
    }
  }

  render(): VNode {
    const children: Array<VNode | string> = [
      h("header", {}, [
        h("h1", {}, ["Knotty Jones"]),
        h(
          "button",
          { class: "new-game" },
          ["New game"],
          { click: () => void this.newGame() },
        ),
      ]),
    ];
    if (this.error) {
      children.push(h("div", { class: "error", role: "alert" }, [this.error]));
    }
    const snap = this.snapshot;
    if (!snap) {
      children.push(
        h("p", { class: "intro" }, [
          "Start a game to get a target polynomial.",
        ]),
      );
      return h("main", { class: "app" }, children);
    }
    const banner = renderBanner(snap.status);
    if (banner) children.push(banner);
    children.push(renderScoreboard(snap));
    children.push(renderComparison(snap.playerJp, snap.opponent.jp));
    children.push(this.renderBoard(snap));
    children.push(this.renderComposer());
    return h("main", { class: "app" }, children);
  }

  private renderBoard(snap: Snapshot): VNode {
    const playerMap = mapFromPdText(snap.playerPd);
    const playerLayout = layoutDiagram(playerMap);
    const over = snap.status === "GameWon" || snap.status === "GameLost";
    const diagram = renderDiagram(playerMap, playerLayout, {
      ...(this.sites && !over ? { sites: this.sites } : {}),
      onMove: (move) => void this.stage(move),
    });
    const boards = [
      h("figure", { class: "board board-player" }, [
        diagram,
        h("figcaption", {}, [`Your diagram (${playerMap.n} crossings)`]),
      ]),
    ];
    if (snap.opponent.pd !== undefined) {
      const oppMap = mapFromPdText(snap.opponent.pd);
      boards.push(
        h("figure", { class: "board board-opponent" }, [
          renderDiagram(oppMap, layoutDiagram(oppMap)),
          h("figcaption", {}, [
            `Opponent diagram (${oppMap.n} crossings)`,
          ]),
        ]),
      );
    }
    return h("div", { class: "boards" }, boards);
  }

  private renderComposer(): VNode {
    const composer = this.composer;
    if (!composer) return h("div", { class: "composer" }, []);
    const items = composer.staged.map((move, i) =>
      h("li", { class: "staged-move", "data-kind": move.kind }, [
        `${move.kind} ${describeSite(move)} `,
        h(
          "button",
          { class: "unstage" },
          ["remove"],
          { click: () => this.unstage(i) },
        ),
      ]),
    );
    const counters = h("p", { class: "budgets" }, [
      `R-moves ${composer.rMovesUsed}/${composer.rMovesAllowed}` +
        ` · Inversions ${composer.inversionsUsed}/${composer.inversionsAllowed}`,
    ]);
    const submitAttrs: Record<string, string> = { class: "submit" };
    if (this.submitting) submitAttrs["disabled"] = "disabled";
    const children: Array<VNode | string> = [
      h("h3", {}, ["Staged moves"]),
      counters,
    ];
    if (this.stageNotice) {
      children.push(h("p", { class: "stage-notice" }, [this.stageNotice]));
    }
    children.push(h("ol", { class: "staged" }, items));
    children.push(
      h(
        "button",
        submitAttrs,
        [this.submitting ? "Submitting…" : "End turn"],
        { click: () => void this.submit() },
      ),
    );
    return h("section", { class: "composer" }, children);
  }
}
