// Board wiring: fetch levels, click edges to swap, animate, track the
// win state. At most one API request is in flight and the board locks
// while an animation runs.

import { GameState, InstanceData, SavedGame, parseInstance } from "./state.js";
import { ViewTransform, draw, fitTransform, hitTestEdge } from "./render.js";

type Phase = "idle" | "loading" | "animating" | "won" | "revealed";

const canvas = document.getElementById("board") as HTMLCanvasElement;
const ctx = canvas.getContext("2d")!;
const hudCrossings = document.getElementById("crossings")!;
const hudMoves = document.getElementById("moves")!;
const hudPar = document.getElementById("par")!;
const banner = document.getElementById("banner")!;
const warning = document.getElementById("warning")!;
const btnNew = document.getElementById("new") as HTMLButtonElement;
const btnUndo = document.getElementById("undo") as HTMLButtonElement;
const btnRedo = document.getElementById("redo") as HTMLButtonElement;
const btnGiveUp = document.getElementById("giveup") as HTMLButtonElement;
const selSize = document.getElementById("size") as HTMLSelectElement;
const selPar = document.getElementById("difficulty") as HTMLSelectElement;

let state: GameState | null = null;
let view: ViewTransform | null = null;
let phase: Phase = "idle";
let requestInFlight = false;

function setPhase(p: Phase): void {
  phase = p;
  btnUndo.disabled = p !== "idle" && p !== "won" || !state?.canUndo();
  btnRedo.disabled = p !== "idle" && p !== "won" || !state?.canRedo();
  btnGiveUp.disabled = p !== "idle" || !state?.inst.solution_assignment;
  btnNew.disabled = p === "loading" || p === "animating";
}

function updateHud(): void {
  if (!state) return;
  const crossings = state.crossingCount();
  hudCrossings.textContent = String(crossings);
  hudMoves.textContent = String(state.moveCount);
  hudPar.textContent = String(state.par);
  if (phase === "won") {
    banner.textContent =
      state.moveCount <= state.par
        ? `Solved in ${state.moveCount} — par!`
        : `Solved in ${state.moveCount} (par ${state.par})`;
  } else if (phase === "revealed") {
    banner.textContent = "Solution revealed";
  } else {
    banner.textContent = "";
  }
}

function render(override?: Map<number, [number, number]>, highlight?: number | null): void {
  if (!state || !view) return;
  draw(ctx, state, view, {
    positionOverride: override,
    highlightEdge: highlight ?? null,
    revealed: phase === "revealed",
  });
}

function persist(): void {
  if (!state) return;
  try {
    localStorage.setItem(state.storageKey(), JSON.stringify(state.toSaved()));
  } catch {
    /* storage may be unavailable; play on */
  }
}

function restore(inst: InstanceData): SavedGame | undefined {
  try {
    const key = `swaptangle:${inst.meta.seed}:${inst.meta.n}:${inst.meta.m}:${inst.meta.s}`;
    const raw = localStorage.getItem(key);
    return raw ? (JSON.parse(raw) as SavedGame) : undefined;
  } catch {
    return undefined;
  }
}

function animateVertices(
  targets: Map<number, [number, number]>,
  durationMs: number,
  done: () => void,
): void {
  if (!state) return;
  const starts = new Map<number, [number, number]>();
  for (const v of targets.keys()) {
    starts.set(v, state.inst.points[state.perm[v]]);
  }
  const t0 = performance.now();
  setPhase("animating");
  const step = (now: number): void => {
    const u = Math.min(1, (now - t0) / durationMs);
    const ease = u * (2 - u);
    const override = new Map<number, [number, number]>();
    for (const [v, [tx, ty]] of targets) {
      const [sx, sy] = starts.get(v)!;
      override.set(v, [sx + (tx - sx) * ease, sy + (ty - sy) * ease]);
    }
    render(override);
    if (u < 1) {
      requestAnimationFrame(step);
    } else {
      done();
    }
  };
  requestAnimationFrame(step);
}

function animateSwapThen(edge: number, commit: () => void): void {
  if (!state) return;
  const [u, v] = state.inst.edges[edge];
  const targets = new Map<number, [number, number]>([
    [u, state.inst.points[state.perm[v]]],
    [v, state.inst.points[state.perm[u]]],
  ]);
  animateVertices(targets, 260, () => {
    commit();
    persist();
    setPhase(state!.isWon() ? "won" : "idle");
    render();
    updateHud();
  });
}

function onBoardClick(ev: MouseEvent): void {
  if (!state || !view || phase !== "idle") return;
  const rect = canvas.getBoundingClientRect();
  const edge = hitTestEdge(state, view, ev.clientX - rect.left, ev.clientY - rect.top);
  if (edge === null) return;
  render(undefined, edge);
  animateSwapThen(edge, () => state!.applyMove(edge));
}

function onUndo(): void {
  if (!state || !state.canUndo() || phase === "animating" || phase === "loading") {
    return;
  }
  // peek: the edge to un-swap is the last applied one
  const saved = state.toSaved();
  const edge = saved.undoStack[saved.undoStack.length - 1];
  animateSwapThen(edge, () => state!.undo());
}

function onRedo(): void {
  if (!state || !state.canRedo() || phase === "animating" || phase === "loading") {
    return;
  }
  const saved = state.toSaved();
  const edge = saved.redoStack[saved.redoStack.length - 1];
  animateSwapThen(edge, () => state!.redo());
}

function onGiveUp(): void {
  if (!state || phase !== "idle") return;
  const solution = state.inst.solution_assignment;
  if (!solution) return;
  const targets = new Map<number, [number, number]>();
  for (let v = 0; v < solution.length; v++) {
    targets.set(v, state.inst.points[solution[v]]);
  }
  animateVertices(targets, 900, () => {
    state!.perm = [...solution];
    setPhase("revealed");
    render();
    updateHud();
  });
}

async function integrityCheck(inst: InstanceData, localCount: number): Promise<void> {
  // replay-based count must agree with the server's predicates
  try {
    const resp = await fetch("/api/solve?max_depth=0", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(inst),
    });
    if (!resp.ok) return;
    const report = (await resp.json()) as { crossing_count?: number };
    if (
      typeof report.crossing_count === "number" &&
      report.crossing_count !== localCount
    ) {
      warning.textContent =
        `Integrity warning: local crossing count ${localCount} ` +
        `differs from server count ${report.crossing_count}.`;
      warning.hidden = false;
    }
  } catch {
    /* offline play is fine; the check is best-effort */
  }
}

async function newPuzzle(): Promise<void> {
  if (requestInFlight) return;
  requestInFlight = true;
  setPhase("loading");
  banner.textContent = "Generating…";
  warning.hidden = true;
  try {
    const n = Number(selSize.value);
    const s = Number(selPar.value);
    const seed = Math.floor(Math.random() * 2 ** 48);
    const resp = await fetch(
      `/api/puzzle/new?n=${n}&s=${s}&removed=3&delta=655&seed=${seed}`,
    );
    if (!resp.ok) {
      const err = (await resp.json()) as { error?: string };
      banner.textContent = `Generation failed: ${err.error ?? resp.status}`;
      setPhase("idle");
      return;
    }
    const inst = parseInstance(await resp.json());
    state = new GameState(inst, restore(inst));
    view = fitTransform(inst.grid_size, canvas.width, canvas.height);
    setPhase(state.isWon() ? "won" : "idle");
    render();
    updateHud();
    void integrityCheck(inst, state.crossingCount());
  } catch (err) {
    banner.textContent = `Error: ${String(err)}`;
    setPhase("idle");
  } finally {
    requestInFlight = false;
  }
}

export function boot(): void {
  canvas.addEventListener("click", onBoardClick);
  btnNew.addEventListener("click", () => void newPuzzle());
  btnUndo.addEventListener("click", onUndo);
  btnRedo.addEventListener("click", onRedo);
  btnGiveUp.addEventListener("click", onGiveUp);
  void newPuzzle();
}

boot();
