// Canvas rendering: vertices as discs of radius rho, edges as bars of
// width lambda (both in grid units, scaled to the canvas). Purely
// cosmetic; all game decisions live in state.ts.

import { GameState } from "./state.js";

export interface ViewTransform {
  scale: number;
  offsetX: number;
  offsetY: number;
}

export function fitTransform(
  gridSize: number, width: number, height: number, margin = 16,
): ViewTransform {
  const scale = Math.min(width - 2 * margin, height - 2 * margin) / gridSize;
  return { scale, offsetX: margin, offsetY: margin };
}

export function toScreen(
  t: ViewTransform, gridSize: number, x: number, y: number,
): [number, number] {
  // grid y grows upwards, canvas y grows downwards
  return [t.offsetX + x * t.scale, t.offsetY + (gridSize - 1 - y) * t.scale];
}

export interface DrawOptions {
  highlightEdge?: number | null;
  /** vertex index -> [x, y] grid position override, for animations */
  positionOverride?: Map<number, [number, number]>;
  revealed?: boolean;
}

export function draw(
  ctx: CanvasRenderingContext2D,
  state: GameState,
  t: ViewTransform,
  opts: DrawOptions = {},
): void {
  const inst = state.inst;
  const g = inst.grid_size;
  const w = ctx.canvas.width;
  const h = ctx.canvas.height;
  ctx.clearRect(0, 0, w, h);

  const vertexPos = (v: number): [number, number] => {
    const override = opts.positionOverride?.get(v);
    if (override) return override;
    return inst.points[state.perm[v]];
  };

  const crossing = new Set<number>();
  for (const [i, j] of state.crossingPairs()) {
    crossing.add(i);
    crossing.add(j);
  }

  const lamPx = Math.max(2, inst.metrics.lambda * t.scale);
  const rhoPx = Math.max(5, inst.metrics.rho * t.scale);

  ctx.lineCap = "butt";
  inst.edges.forEach(([u, v], idx) => {
    const [ax, ay] = toScreen(t, g, ...vertexPos(u));
    const [bx, by] = toScreen(t, g, ...vertexPos(v));
    ctx.beginPath();
    ctx.moveTo(ax, ay);
    ctx.lineTo(bx, by);
    ctx.lineWidth = idx === opts.highlightEdge ? lamPx * 1.8 : lamPx;
    ctx.strokeStyle =
      idx === opts.highlightEdge
        ? "#f5a623"
        : crossing.has(idx)
          ? "#d0454c"
          : opts.revealed
            ? "#7aa77a"
            : "#4a6fa5";
    ctx.stroke();
  });

  for (let v = 0; v < inst.points.length; v++) {
    const [x, y] = toScreen(t, g, ...vertexPos(v));
    ctx.beginPath();
    ctx.arc(x, y, rhoPx, 0, 2 * Math.PI);
    ctx.fillStyle = "#f2f0e9";
    ctx.fill();
    ctx.lineWidth = 2;
    ctx.strokeStyle = "#333";
    ctx.stroke();
    ctx.fillStyle = "#333";
    ctx.font = `${Math.max(10, rhoPx)}px sans-serif`;
    ctx.textAlign = "center";
    ctx.textBaseline = "middle";
    ctx.fillText(String(v + 1), x, y);
  }
}

/** Squared distance from a point to a segment, in screen coordinates. */
export function distToSegmentSq(
  px: number, py: number,
  ax: number, ay: number,
  bx: number, by: number,
): number {
  const vx = bx - ax;
  const vy = by - ay;
  const len2 = vx * vx + vy * vy;
  let tt = len2 === 0 ? 0 : ((px - ax) * vx + (py - ay) * vy) / len2;
  tt = Math.max(0, Math.min(1, tt));
  const dx = px - (ax + tt * vx);
  const dy = py - (ay + tt * vy);
  return dx * dx + dy * dy;
}

/** Edge index nearest to the click, or null when too far away. */
export function hitTestEdge(
  state: GameState,
  t: ViewTransform,
  px: number,
  py: number,
  slack = 10,
): number | null {
  const g = state.inst.grid_size;
  let best: number | null = null;
  let bestDist = Infinity;
  state.inst.edges.forEach((_, idx) => {
    const [ax, ay, bx, by] = state.segment(idx);
    const [sax, say] = toScreen(t, g, ax, ay);
    const [sbx, sby] = toScreen(t, g, bx, by);
    const d = distToSegmentSq(px, py, sax, say, sbx, sby);
    if (d < bestDist) {
      bestDist = d;
      best = idx;
    }
  });
  const lamPx = Math.max(2, state.inst.metrics.lambda * t.scale);
  const reach = lamPx / 2 + slack;
  return bestDist <= reach * reach ? best : null;
}
