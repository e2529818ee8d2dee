// 1:1 ports of the server's exact integer predicates. Grid coordinates are
// below 2^16, so every intermediate product stays far below 2^53 and the
// arithmetic is exact in doubles. Parity with the server is pinned by the
// shared vector file generated by its test suite; do not "improve" these.

export const LEFT = 1;
export const COLLINEAR = 0;
export const RIGHT = -1;

export function orient(
  ax: number, ay: number,
  bx: number, by: number,
  cx: number, cy: number,
): number {
  const d = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
  if (d > 0) return LEFT;
  if (d < 0) return RIGHT;
  return COLLINEAR;
}

function onSegment(
  ax: number, ay: number,
  bx: number, by: number,
  px: number, py: number,
): boolean {
  return (
    Math.min(ax, bx) <= px && px <= Math.max(ax, bx) &&
    Math.min(ay, by) <= py && py <= Math.max(ay, by)
  );
}

/**
 * True iff the closed segments ab and cd intersect in more than a shared
 * endpoint. A shared endpoint alone does not count; proper crossings,
 * endpoints inside the other segment, and collinear overlap all do.
 */
export function segmentsCross(
  ax: number, ay: number,
  bx: number, by: number,
  cx: number, cy: number,
  dx: number, dy: number,
): boolean {
  const aIsC = ax === cx && ay === cy;
  const aIsD = ax === dx && ay === dy;
  const bIsC = bx === cx && by === cy;
  const bIsD = bx === dx && by === dy;
  if ((aIsC || aIsD) && (bIsC || bIsD)) return true; // identical segments
  if (aIsC || aIsD || bIsC || bIsD) {
    // one shared endpoint: only a collinear overlap reaches past it
    let sx: number, sy: number, qx: number, qy: number, rx: number, ry: number;
    if (aIsC || aIsD) {
      sx = ax; sy = ay; qx = bx; qy = by;
    } else {
      sx = bx; sy = by; qx = ax; qy = ay;
    }
    if ((aIsC || bIsC)) {
      rx = dx; ry = dy;
    } else {
      rx = cx; ry = cy;
    }
    if (orient(sx, sy, qx, qy, rx, ry) !== COLLINEAR) return false;
    return (qx - sx) * (rx - sx) + (qy - sy) * (ry - sy) > 0;
  }

  const o1 = orient(ax, ay, bx, by, cx, cy);
  const o2 = orient(ax, ay, bx, by, dx, dy);
  const o3 = orient(cx, cy, dx, dy, ax, ay);
  const o4 = orient(cx, cy, dx, dy, bx, by);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  if (o1 === COLLINEAR && onSegment(ax, ay, bx, by, cx, cy)) return true;
  if (o2 === COLLINEAR && onSegment(ax, ay, bx, by, dx, dy)) return true;
  if (o3 === COLLINEAR && onSegment(cx, cy, dx, dy, ax, ay)) return true;
  if (o4 === COLLINEAR && onSegment(cx, cy, dx, dy, bx, by)) return true;
  return false;
}
