/**
 * Typed client for the game service HTTP API.
 *
 * The UI performs no knot math: every diagram, polynomial, and move
 * verdict comes from these endpoints. The fetch implementation is
 * injectable so tests can stub the transport or point at a live server.
 */

import type { PolyWire } from "./poly.js";

export interface GameConfigWire {
  rMovesPerTurn: number;
  inversionsPerTurn: number;
  maxTurnsPerRound: number;
  totalRounds: number;
  crossingCap: number;
  seed: number;
  showOpponentDiagram: boolean;
}

export interface OpponentWire {
  jp: PolyWire;
  attempts: number;
  /** Present only when the config shows the opponent diagram. */
  pd?: string;
  crossings?: number;
}

export type GameStatus = "Ongoing" | "RoundWon" | "GameWon" | "GameLost";

export interface Snapshot {
  config: GameConfigWire;
  playerPd: string;
  playerJp: PolyWire;
  opponent: OpponentWire;
  round: number;
  turnInRound: number;
  status: GameStatus;
  score: number;
}

export interface MoveSite {
  [key: string]: number | string | boolean;
}

export interface MoveWire {
  kind: string;
  site: MoveSite;
}

export interface MoveSites {
  R1Add: MoveWire[];
  R1Remove: MoveWire[];
  R2Add: MoveWire[];
  R2Remove: MoveWire[];
  R3: MoveWire[];
  CrossingFlip: MoveWire[];
}

export interface CreatedGame {
  id: string;
  snapshot: Snapshot;
}

/** Service error body, surfaced with enough context to act on. */
export class ApiError extends Error {
  readonly status: number;
  readonly type: string;

  constructor(status: number, type: string, message: string) {
    super(message);
    this.status = status;
    this.type = type;
  }
}

type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  private readonly base: string;
  private readonly fetchImpl: FetchLike;

  constructor(baseUrl: string, fetchImpl?: FetchLike) {
    this.base = baseUrl.replace(/\/$/, "");
    this.fetchImpl = fetchImpl ?? ((url, init) => fetch(url, init));
  }

  private async request<T>(
    method: string,
    path: string,
    body?: unknown,
  ): Promise<T> {
    const init: RequestInit = { method };
    if (body !== undefined) {
      init.headers = { "content-type": "application/json" };
      init.body = JSON.stringify(body);
    }
    const res = await this.fetchImpl(this.base + path, init);
    const text = await res.text();
    let parsed: unknown = null;
    try {
      parsed = text === "" ? null : JSON.parse(text);
    } catch {
      parsed = null;
    }
    if (!res.ok) {
      const err = (parsed as { error?: { type?: string; message?: string } })
        ?.error;
      throw new ApiError(
        res.status,
        err?.type ?? "Unknown",
        err?.message ?? `request failed with status ${res.status}`,
      );
    }
    return parsed as T;
  }

  healthz(): Promise<{ status: string }> {
    return this.request("GET", "/healthz");
  }

  async createGame(config: Partial<GameConfigWire>): Promise<CreatedGame> {
    return this.request("POST", "/games", { config });
  }

  async getGame(id: string): Promise<Snapshot> {
    const body = await this.request<{ snapshot: Snapshot }>(
      "GET",
      `/games/${id}`,
    );
    return body.snapshot;
  }

  async submitTurn(id: string, moves: MoveWire[]): Promise<Snapshot> {
    const body = await this.request<{ snapshot: Snapshot }>(
      "POST",
      `/games/${id}/turns`,
      { submission: { moves } },
    );
    return body.snapshot;
  }

  getMoves(id: string): Promise<MoveSites> {
    return this.request("GET", `/games/${id}/moves`);
  }

  jones(crossings: number[][]): Promise<PolyWire> {
    return this.request("POST", "/jones", { crossings });
  }
}
