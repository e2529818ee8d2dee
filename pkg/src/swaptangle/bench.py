"""Desk-scale generation experiments, emitted as CSV.

Seeds follow a fixed schedule (base + cell * stride + repetition) so a
sweep is reproducible row for row. Failed generations are kept as
censored rows rather than dropped.
"""

from __future__ import annotations

import csv
import statistics
from collections import defaultdict

from .geom import GRID_SIZE
from .pointgen import PointGenError, PointGenParams, generate_points

SEED_STRIDE = 1_000_003

THRESHOLD_COLUMNS = [
    "n", "delta", "threshold", "seed", "total_attempts", "restarts", "success",
]
HULL_COLUMNS = ["n", "delta", "mean_interior", "sd_interior", "failures"]


def threshold_sweep(
    n_values,
    delta,
    thresholds,
    seeds_per_cell,
    *,
    base_seed=0,
    grid_size=GRID_SIZE,
    max_restarts=50,
):
    """One row per generation run over the (n, threshold) grid."""
    if not thresholds:
        raise ValueError("thresholds must be nonempty")
    rows = []
    cell = 0
    for n in n_values:
        for threshold in thresholds:
            for rep in range(seeds_per_cell):
                seed = base_seed + cell * SEED_STRIDE + rep
                params = PointGenParams(
                    n=n,
                    delta=delta,
                    grid_size=grid_size,
                    threshold=threshold,
                    seed=seed,
                    max_restarts=max_restarts,
                )
                try:
                    _, stats = generate_points(params)
                    attempts, restarts, success = (
                        stats.total_attempts, stats.restarts, 1,
                    )
                except PointGenError as err:
                    attempts, restarts, success = (
                        err.total_attempts, err.restarts, 0,
                    )
                rows.append(
                    {
                        "n": n,
                        "delta": delta,
                        "threshold": threshold,
                        "seed": seed,
                        "total_attempts": attempts,
                        "restarts": restarts,
                        "success": success,
                    }
                )
            cell += 1
    return rows


def aggregate_threshold(rows):
    """Per (n, threshold): mean/median attempts and restarts of successful
    runs, plus the failure count."""
    cells = defaultdict(list)
    for row in rows:
        cells[(row["n"], row["threshold"])].append(row)
    out = {}
    for key, cell_rows in sorted(cells.items()):
        ok = [r for r in cell_rows if r["success"]]
        out[key] = {
            "runs": len(cell_rows),
            "failures": len(cell_rows) - len(ok),
            "mean_attempts": statistics.fmean(r["total_attempts"] for r in ok)
            if ok
            else None,
            "median_attempts": statistics.median(r["total_attempts"] for r in ok)
            if ok
            else None,
            "mean_restarts": statistics.fmean(r["restarts"] for r in ok)
            if ok
            else None,
        }
    return out


def hull_statistics(
    n_values,
    delta_values,
    instances_per_cell=100,
    *,
    base_seed=0,
    grid_size=GRID_SIZE,
    threshold=2000,
    max_restarts=50,
):
    """Per (n, delta): mean and population sd of the interior point count."""
    rows = []
    cell = 0
    for n in n_values:
        for delta in delta_values:
            interiors = []
            failures = 0
            for rep in range(instances_per_cell):
                seed = base_seed + cell * SEED_STRIDE + rep
                params = PointGenParams(
                    n=n,
                    delta=delta,
                    grid_size=grid_size,
                    threshold=threshold,
                    seed=seed,
                    max_restarts=max_restarts,
                )
                try:
                    _, stats = generate_points(params)
                    interiors.append(stats.interior_count)
                except PointGenError:
                    failures += 1
            rows.append(
                {
                    "n": n,
                    "delta": delta,
                    "mean_interior": round(statistics.fmean(interiors), 6)
                    if interiors
                    else "",
                    "sd_interior": round(statistics.pstdev(interiors), 6)
                    if interiors
                    else "",
                    "failures": failures,
                }
            )
            cell += 1
    return rows


def write_csv(rows, columns, path):
    """Plain CSV: header row, comma separated, '.' decimals, LF endings."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=columns, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow(row)
