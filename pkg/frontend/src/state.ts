// Game state for one puzzle instance. The state is the permutation
// mapping vertices to points; moves, undo and redo all reduce to the
// same endpoint swap. Crossing counts come from the ported integer
// predicates only; rendering never feeds back into game logic.

import { segmentsCross } from "./predicates.js";

export interface Metrics {
  rho: number;
  lambda: number;
  delta: number;
}

export interface Meta {
  n: number;
  m: number;
  s: number;
  flips: number;
  removed: number;
  seed: number;
}

export interface InstanceData {
  version: number;
  grid_size: number;
  points: [number, number][];
  edges: [number, number][];
  assignment: number[];
  solution_assignment: number[] | null;
  metrics: Metrics;
  meta: Meta;
}

export interface SavedGame {
  perm: number[];
  undoStack: number[];
  redoStack: number[];
}

export function parseInstance(raw: unknown): InstanceData {
  const data = raw as InstanceData;
  if (!data || data.version !== 1) {
    throw new Error("unsupported instance payload");
  }
  const n = data.points.length;
  if (data.assignment.length !== n) {
    throw new Error("assignment length mismatch");
  }
  if (new Set(data.assignment).size !== n) {
    throw new Error("assignment is not a permutation");
  }
  for (const [u, v] of data.edges) {
    if (u === v || u < 0 || v < 0 || u >= n || v >= n) {
      throw new Error(`bad edge (${u}, ${v})`);
    }
  }
  return data;
}

export class GameState {
  readonly inst: InstanceData;
  perm: number[];
  private undoStack: number[] = [];
  private redoStack: number[] = [];

  constructor(inst: InstanceData, saved?: SavedGame) {
    this.inst = inst;
    this.perm = [...inst.assignment];
    if (saved && saved.perm.length === inst.assignment.length) {
      this.perm = [...saved.perm];
      this.undoStack = [...saved.undoStack];
      this.redoStack = [...saved.redoStack];
    }
  }

  get par(): number {
    return this.inst.meta.s;
  }

  get moveCount(): number {
    return this.undoStack.length;
  }

  private swap(edge: number): void {
    const [u, v] = this.inst.edges[edge];
    const t = this.perm[u];
    this.perm[u] = this.perm[v];
    this.perm[v] = t;
  }

  applyMove(edge: number): void {
    if (edge < 0 || edge >= this.inst.edges.length) {
      throw new Error(`edge index ${edge} out of range`);
    }
    this.swap(edge);
    this.undoStack.push(edge);
    this.redoStack = [];
  }

  canUndo(): boolean {
    return this.undoStack.length > 0;
  }

  canRedo(): boolean {
    return this.redoStack.length > 0;
  }

  undo(): number | null {
    const edge = this.undoStack.pop();
    if (edge === undefined) return null;
    this.swap(edge); // swapping is its own inverse
    this.redoStack.push(edge);
    return edge;
  }

  redo(): number | null {
    const edge = this.redoStack.pop();
    if (edge === undefined) return null;
    this.swap(edge);
    this.undoStack.push(edge);
    return edge;
  }

  /** Drawn endpoints of an edge under the current permutation. */
  segment(edge: number): [number, number, number, number] {
    const [u, v] = this.inst.edges[edge];
    const [ax, ay] = this.inst.points[this.perm[u]];
    const [bx, by] = this.inst.points[this.perm[v]];
    return [ax, ay, bx, by];
  }

  crossingPairs(): [number, number][] {
    const m = this.inst.edges.length;
    const segs: [number, number, number, number][] = [];
    for (let i = 0; i < m; i++) segs.push(this.segment(i));
    const out: [number, number][] = [];
    for (let i = 0; i < m; i++) {
      for (let j = i + 1; j < m; j++) {
        if (segmentsCross(...segs[i], ...segs[j])) out.push([i, j]);
      }
    }
    return out;
  }

  crossingCount(): number {
    return this.crossingPairs().length;
  }

  isWon(): boolean {
    return this.crossingCount() === 0;
  }

  toSaved(): SavedGame {
    return {
      perm: [...this.perm],
      undoStack: [...this.undoStack],
      redoStack: [...this.redoStack],
    };
  }

  storageKey(): string {
    const meta = this.inst.meta;
    return `swaptangle:${meta.seed}:${meta.n}:${meta.m}:${meta.s}`;
  }
}
