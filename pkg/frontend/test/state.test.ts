// Gameplay over the eight-cycle benchmark bundle exported by the server
// test suite: its six-swap solution must win, undo must restore state.

import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";
import { describe, expect, it } from "vitest";

import { GameState, InstanceData, parseInstance } from "../src/state.js";

const here = dirname(fileURLToPath(import.meta.url));
const bundle = JSON.parse(
  readFileSync(join(here, "..", "testdata", "eight_cycle.json"), "utf-8"),
) as { instance: InstanceData; solution: number[] };

function freshState(): GameState {
  return new GameState(parseInstance(bundle.instance));
}

describe("eight-cycle gameplay", () => {
  it("starts with one crossing and par 6", () => {
    const state = freshState();
    expect(state.crossingCount()).toBe(1);
    expect(state.par).toBe(6);
    expect(state.isWon()).toBe(false);
  });

  it("the exported six-swap solution reaches the win state", () => {
    const state = freshState();
    expect(bundle.solution.length).toBe(6);
    for (const edge of bundle.solution) {
      expect(state.isWon()).toBe(false);
      state.applyMove(edge);
    }
    expect(state.crossingCount()).toBe(0);
    expect(state.isWon()).toBe(true);
    expect(state.moveCount).toBe(6);
  });

  it("swapping any edge twice restores the permutation, counting 2 moves", () => {
    const state = freshState();
    const before = [...state.perm];
    state.applyMove(3);
    expect(state.perm).not.toEqual(before);
    state.applyMove(3);
    expect(state.perm).toEqual(before);
    expect(state.moveCount).toBe(2);
  });

  it("undo restores the prior permutation exactly", () => {
    const state = freshState();
    const snapshots: number[][] = [[...state.perm]];
    for (const edge of bundle.solution.slice(0, 4)) {
      state.applyMove(edge);
      snapshots.push([...state.perm]);
    }
    for (let k = snapshots.length - 2; k >= 0; k--) {
      expect(state.undo()).not.toBeNull();
      expect(state.perm).toEqual(snapshots[k]);
    }
    expect(state.canUndo()).toBe(false);
    expect(state.undo()).toBeNull();
  });

  it("redo replays what undo removed; a new move clears the redo stack", () => {
    const state = freshState();
    state.applyMove(bundle.solution[0]);
    state.applyMove(bundle.solution[1]);
    const after = [...state.perm];
    state.undo();
    expect(state.canRedo()).toBe(true);
    state.redo();
    expect(state.perm).toEqual(after);
    state.undo();
    state.applyMove(bundle.solution[2]);
    expect(state.canRedo()).toBe(false);
  });

  it("saved games restore permutation and stacks", () => {
    const state = freshState();
    state.applyMove(1);
    state.applyMove(4);
    state.undo();
    const revived = new GameState(parseInstance(bundle.instance), state.toSaved());
    expect(revived.perm).toEqual(state.perm);
    expect(revived.moveCount).toBe(state.moveCount);
    expect(revived.canRedo()).toBe(true);
  });

  it("rejects out-of-range moves and bad payloads", () => {
    const state = freshState();
    expect(() => state.applyMove(99)).toThrow();
    expect(() =>
      parseInstance({ ...bundle.instance, assignment: [0, 0, 0, 0, 0, 0, 0, 0] }),
    ).toThrow();
    expect(() => parseInstance({ ...bundle.instance, version: 2 })).toThrow();
  });
});
