/**
 * Turn composition with client-side budget enforcement.
 *
 * The composer blocks staging beyond the per-turn budgets before
 * anything reaches the network; the server still has the final word on
 * submit. Crossing flips draw from the inversion budget, everything
 * else from the R-move budget.
 */

import type { GameConfigWire, MoveWire } from "./api.js";

export interface Budgets {
  rMovesPerTurn: number;
  inversionsPerTurn: number;
}

export interface StageResult {
  ok: boolean;
  reason?: string;
}

export function isInversion(move: MoveWire): boolean {
  return move.kind === "CrossingFlip";
}

export class TurnComposer {
  private readonly budgets: Budgets;
  private moves: MoveWire[] = [];

  constructor(budgets: Budgets | GameConfigWire) {
    this.budgets = {
      rMovesPerTurn: budgets.rMovesPerTurn,
      inversionsPerTurn: budgets.inversionsPerTurn,
    };
  }

  get staged(): readonly MoveWire[] {
    return this.moves;
  }

  get rMovesUsed(): number {
    return this.moves.filter((m) => !isInversion(m)).length;
  }

  get inversionsUsed(): number {
    return this.moves.filter(isInversion).length;
  }

  get rMovesAllowed(): number {
    return this.budgets.rMovesPerTurn;
  }

  get inversionsAllowed(): number {
    return this.budgets.inversionsPerTurn;
  }

  canStage(move: MoveWire): StageResult {
    if (isInversion(move)) {
      if (this.inversionsUsed >= this.budgets.inversionsPerTurn) {
        return {
          ok: false,
          reason: `inversion budget exhausted (${this.budgets.inversionsPerTurn} per turn)`,
        };
      }
    } else if (this.rMovesUsed >= this.budgets.rMovesPerTurn) {
      return {
        ok: false,
        reason: `R-move budget exhausted (${this.budgets.rMovesPerTurn} per turn)`,
      };
    }
    return { ok: true };
  }

  stage(move: MoveWire): StageResult {
    const verdict = this.canStage(move);
    if (verdict.ok) {
      this.moves.push(move);
    }
    return verdict;
  }

  unstage(index: number): void {
    if (index >= 0 && index < this.moves.length) {
      this.moves.splice(index, 1);
    }
  }

  clear(): void {
    this.moves = [];
  }

  /** Submission payload; the caller owns the network call. */
  toSubmission(): MoveWire[] {
    return [...this.moves];
  }
}
