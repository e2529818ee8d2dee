"""Generates (and checks) the predicate test vectors shared with the UI.

The frontend ports orient and segments_cross 1:1; these files pin the
two implementations to each other bit for bit. Vectors are regenerated
deterministically on every run, so a drifting port fails its own suite.
"""

import json
import os
import random

from swaptangle.geom import orient, segments_cross
from swaptangle.puzzle import instance_to_payload, make_eight_cycle_fixture
from swaptangle.solve import min_swaps

TESTDATA = os.path.join(os.path.dirname(__file__), "..", "frontend", "testdata")

N_ORIENT = 5000
N_CROSS = 5000


def _orient_vectors(rng):
    out = []
    for i in range(N_ORIENT):
        if i % 5 == 4:  # forced collinear triples, varied spacing
            ax, ay = rng.randrange(0, 60000), rng.randrange(0, 60000)
            dx, dy = rng.randrange(-40, 41), rng.randrange(-40, 41)
            s, t = rng.randrange(1, 60), rng.randrange(1, 60)
            a = (ax, ay)
            b = (ax + s * dx, ay + s * dy)
            c = (ax + t * dx, ay + t * dy)
        else:
            a = (rng.randrange(0, 65536), rng.randrange(0, 65536))
            b = (rng.randrange(0, 65536), rng.randrange(0, 65536))
            c = (rng.randrange(0, 65536), rng.randrange(0, 65536))
        out.append([*a, *b, *c, orient(a, b, c)])
    return out


def _cross_vectors(rng):
    out = []
    i = 0
    while len(out) < N_CROSS:
        mode = i % 6
        i += 1
        if mode == 0:  # generic random
            pts = [(rng.randrange(0, 65536), rng.randrange(0, 65536))
                   for _ in range(4)]
        elif mode == 1:  # small box: touching configurations likely
            pts = [(rng.randrange(0, 12), rng.randrange(0, 12)) for _ in range(4)]
        elif mode == 2:  # shared endpoint
            p = (rng.randrange(0, 65536), rng.randrange(0, 65536))
            pts = [p, (rng.randrange(0, 65536), rng.randrange(0, 65536)),
                   p, (rng.randrange(0, 65536), rng.randrange(0, 65536))]
        elif mode == 3:  # collinear family, overlap or gap
            ax, ay = rng.randrange(0, 50000), rng.randrange(0, 50000)
            dx, dy = rng.randrange(-30, 31), rng.randrange(-30, 31)
            ts = [rng.randrange(0, 80) for _ in range(4)]
            pts = [(ax + t * dx, ay + t * dy) for t in ts]
        elif mode == 4:  # endpoint on interior
            a = (rng.randrange(0, 30000), rng.randrange(0, 30000))
            d = (rng.randrange(1, 20), rng.randrange(1, 20))
            k = rng.randrange(2, 50)
            mid_t = rng.randrange(1, k)
            b = (a[0] + k * d[0], a[1] + k * d[1])
            c = (a[0] + mid_t * d[0], a[1] + mid_t * d[1])
            pts = [a, b, c,
                   (rng.randrange(0, 65536), rng.randrange(0, 65536))]
        else:  # proper X crossings around a center
            cx, cy = rng.randrange(1000, 64000), rng.randrange(1000, 64000)
            r = rng.randrange(10, 900)
            pts = [(cx - r, cy - r), (cx + r, cy + r),
                   (cx - r, cy + r), (cx + r, cy - r)]
        a, b, c, d = pts
        if a == b or c == d:
            continue
        out.append([*a, *b, *c, *d, 1 if segments_cross(a, b, c, d) else 0])
    return out


def test_write_predicate_vectors():
    rng = random.Random(0x5EED)
    payload = {
        "orient": _orient_vectors(rng),
        "cross": _cross_vectors(rng),
    }
    assert len(payload["orient"]) + len(payload["cross"]) == 10_000
    # sanity: all three orientations and both crossing outcomes occur
    assert {v[-1] for v in payload["orient"]} == {-1, 0, 1}
    assert {v[-1] for v in payload["cross"]} == {0, 1}
    os.makedirs(TESTDATA, exist_ok=True)
    path = os.path.join(TESTDATA, "predicate_vectors.json")
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(payload, fh, separators=(",", ":"))
        fh.write("\n")


def test_write_eight_cycle_bundle():
    inst = make_eight_cycle_fixture()
    report = min_swaps(inst, 6)
    assert report.min_swaps == 6
    bundle = {
        "instance": instance_to_payload(inst),
        "solution": report.solutions[0],
    }
    os.makedirs(TESTDATA, exist_ok=True)
    path = os.path.join(TESTDATA, "eight_cycle.json")
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(bundle, fh, separators=(",", ":"))
        fh.write("\n")
