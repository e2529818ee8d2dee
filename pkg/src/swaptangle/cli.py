"""Command line front door and the HTTP bridge for the play client."""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import random
import sys
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from urllib.parse import parse_qs, urlparse

from .bench import (
    HULL_COLUMNS,
    THRESHOLD_COLUMNS,
    hull_statistics,
    threshold_sweep,
    write_csv,
)
from .equiv import EQUIVALENT, INAPPLICABLE, NOT_EQUIVALENT, swap_equivalent
from .generate import GenerationError, GenerationParams, generate_level
from .geom import GRID_SIZE
from .pointgen import PointGenError
from .puzzle import (
    InstanceFormatError,
    crossing_count,
    dumps_instance,
    load_instance,
    make_basic_construction_fixture,
    make_eight_cycle_fixture,
    save_instance,
    validate,
)
from .solve import SearchResourceError, min_swaps

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_INAPPLICABLE = 2
EXIT_BAD_JSON = 3


def _fail(msg, code=EXIT_ERROR):
    print(f"error: {msg}", file=sys.stderr)
    return code


def _load(path):
    try:
        return load_instance(path)
    except FileNotFoundError:
        raise SystemExit(_fail(f"no such file: {path}"))
    except json.JSONDecodeError as exc:
        raise SystemExit(
            _fail(f"{path}: invalid JSON at line {exc.lineno} column {exc.colno}: "
                  f"{exc.msg}", EXIT_BAD_JSON)
        )
    except InstanceFormatError as exc:
        raise SystemExit(_fail(f"{path}: {exc}"))


def _delta_from_args(args):
    if args.delta is not None and args.delta_frac is not None:
        raise SystemExit(_fail("give either --delta or --delta-frac, not both"))
    if args.delta_frac is not None:
        return max(1, round(args.delta_frac * args.grid_size))
    if args.delta is not None:
        return args.delta
    return max(1, round(0.01 * args.grid_size))


def _gen_params(args, seed):
    return GenerationParams(
        n=args.n,
        s=args.swaps,
        delta=_delta_from_args(args),
        m=args.m,
        removed=args.removed,
        rho=args.rho,
        lam=getattr(args, "lambda"),
        flips=args.flips,
        seed=seed,
        grid_size=args.grid_size,
        threshold=args.threshold,
        max_restarts=args.max_restarts,
    )


def cmd_gen(args):
    seed = args.seed if args.seed is not None else random.getrandbits(64)
    try:
        params = _gen_params(args, seed)
        result = generate_level(params)
    except (ValueError, GenerationError, PointGenError, SearchResourceError) as exc:
        return _fail(str(exc))
    inst = result.instance
    if args.out:
        save_instance(inst, args.out)
    else:
        sys.stdout.write(dumps_instance(inst))
    summary = {
        "seed": seed,
        "out": args.out,
        "n": inst.n,
        "m": inst.m,
        "s": inst.meta.s,
        "removed": result.removed,
        "flips_performed": result.flips_performed,
        "pointgen_attempts": result.pointgen_stats.total_attempts,
        "pointgen_restarts": result.pointgen_stats.restarts,
        "min_swaps": result.report.min_swaps,
        "solution_count": result.report.solution_count,
        "independent_pairs": [list(p) for p in result.report.independent_pairs],
    }
    print(json.dumps(summary), file=sys.stderr)
    return EXIT_OK


def cmd_solve(args):
    inst = _load(args.infile)
    try:
        report = min_swaps(inst, args.max_depth, max_states=args.max_states)
    except SearchResourceError as exc:
        return _fail(str(exc))
    payload = report.to_payload(include_solutions=args.all)
    payload["crossing_count"] = crossing_count(inst)
    print(json.dumps(payload, indent=2))
    return EXIT_OK if report.found else EXIT_ERROR


def cmd_verify(args):
    try:
        inst = load_instance(args.infile)
        violations = []
    except FileNotFoundError:
        return _fail(f"no such file: {args.infile}")
    except json.JSONDecodeError as exc:
        return _fail(
            f"{args.infile}: invalid JSON at line {exc.lineno} column {exc.colno}",
            EXIT_BAD_JSON,
        )
    except InstanceFormatError as exc:
        violations = exc.violations
    if violations:
        for v in violations:
            print(f"violation: {v}")
        return min(len(violations), 125)
    # the loaded instance re-validates clean by construction
    assert not validate(inst)
    print("ok: instance is valid and in delta-general position")
    return EXIT_OK


def cmd_equiv(args):
    a = _load(args.a)
    b = _load(args.b)
    cert = swap_equivalent(a, b)
    print(json.dumps(cert.to_payload(), indent=2))
    return {EQUIVALENT: 0, NOT_EQUIVALENT: 1, INAPPLICABLE: 2}[cert.verdict]


def cmd_fixtures(args):
    inst = {
        "eight-cycle": make_eight_cycle_fixture,
        "basic-construction": make_basic_construction_fixture,
    }[args.name]()
    if args.out:
        save_instance(inst, args.out)
        print(f"wrote {args.name} fixture to {args.out}", file=sys.stderr)
    else:
        sys.stdout.write(dumps_instance(inst))
    return EXIT_OK


def cmd_bench(args):
    if args.experiment == "thresholds":
        rows = threshold_sweep(
            n_values=args.n_values,
            delta=_delta_from_args(args),
            thresholds=args.thresholds,
            seeds_per_cell=args.seeds,
            base_seed=args.base_seed,
            grid_size=args.grid_size,
            max_restarts=args.max_restarts,
        )
        write_csv(rows, THRESHOLD_COLUMNS, args.csv)
    else:
        deltas = [max(1, round(f * args.grid_size)) for f in args.delta_fracs]
        rows = hull_statistics(
            n_values=args.n_values,
            delta_values=deltas,
            instances_per_cell=args.per_cell,
            base_seed=args.base_seed,
            grid_size=args.grid_size,
            threshold=args.threshold,
            max_restarts=args.max_restarts,
        )
        write_csv(rows, HULL_COLUMNS, args.csv)
    print(f"wrote {len(rows)} rows to {args.csv}", file=sys.stderr)
    return EXIT_OK


class _ApiHandler(BaseHTTPRequestHandler):
    server_version = "swaptangle/0.1"
    ui_dir = None
    levels_dir = None

    def log_message(self, fmt, *args):  # quiet by default
        pass

    def _send_json(self, payload, status=200):
        body = payload if isinstance(payload, bytes) else json.dumps(payload).encode()
        self.send_response(status)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(body)))
        self.end_headers()
        self.wfile.write(body)

    def _send_file(self, path):
        ctype = {
            ".html": "text/html",
            ".js": "text/javascript",
            ".css": "text/css",
            ".json": "application/json",
        }.get(os.path.splitext(path)[1], "application/octet-stream")
        with open(path, "rb") as fh:
            body = fh.read()
        self.send_response(200)
        self.send_header("Content-Type", ctype)
        self.send_header("Content-Length", str(len(body)))
        self.end_headers()
        self.wfile.write(body)

    def do_GET(self):
        url = urlparse(self.path)
        if url.path == "/api/puzzle/new":
            return self._puzzle_new(parse_qs(url.query))
        if self.ui_dir:
            rel = url.path.lstrip("/") or "index.html"
            full = os.path.realpath(os.path.join(self.ui_dir, rel))
            if full.startswith(os.path.realpath(self.ui_dir)) and os.path.isfile(full):
                return self._send_file(full)
        if url.path == "/":
            return self._send_json(
                {"name": "swaptangle", "endpoints": ["/api/puzzle/new", "/api/solve"]}
            )
        self._send_json({"error": "not found"}, 404)

    def _puzzle_new(self, query):
        def qint(name, default):
            try:
                return int(query[name][0])
            except (KeyError, ValueError, IndexError):
                return default

        n = qint("n", 10)
        s = qint("s", 2)
        seed = qint("seed", random.getrandbits(63))
        grid = GRID_SIZE
        delta = qint("delta", max(1, round(0.01 * grid)))
        m = qint("m", 0) or None
        removed = None if m is not None else qint("removed", 3)
        cache = None
        if self.levels_dir:
            key = hashlib.sha256(
                f"{n}:{m}:{removed}:{s}:{delta}:{seed}".encode()
            ).hexdigest()[:24]
            cache = os.path.join(self.levels_dir, f"level_{key}.json")
            if os.path.isfile(cache):
                with open(cache, "rb") as fh:
                    return self._send_json(fh.read())
        try:
            result = generate_level(
                GenerationParams(
                    n=n, s=s, delta=delta, m=m, removed=removed,
                    seed=seed, grid_size=grid, threshold=2000,
                )
            )
        except (ValueError, GenerationError, PointGenError,
                SearchResourceError) as exc:
            return self._send_json({"error": str(exc)}, 400)
        body = dumps_instance(result.instance).encode()
        if cache:
            os.makedirs(self.levels_dir, exist_ok=True)
            with open(cache, "wb") as fh:
                fh.write(body)
        self._send_json(body)

    def do_POST(self):
        url = urlparse(self.path)
        if url.path != "/api/solve":
            return self._send_json({"error": "not found"}, 404)
        length = int(self.headers.get("Content-Length", 0))
        raw = self.rfile.read(length)
        try:
            from .puzzle import loads_instance

            inst = loads_instance(raw.decode("utf-8"))
        except (json.JSONDecodeError, InstanceFormatError, UnicodeDecodeError) as exc:
            return self._send_json({"error": f"bad instance: {exc}"}, 400)
        query = parse_qs(url.query)
        try:
            depth = int(query.get("max_depth", ["4"])[0])
        except ValueError:
            depth = 4
        try:
            report = min_swaps(inst, min(depth, 8))
        except SearchResourceError as exc:
            return self._send_json({"error": str(exc)}, 400)
        payload = report.to_payload(include_solutions=True)
        payload["crossing_count"] = crossing_count(inst)
        self._send_json(payload)


def make_server(port, ui_dir=None, levels_dir=None):
    handler = type(
        "Handler", (_ApiHandler,), {"ui_dir": ui_dir, "levels_dir": levels_dir}
    )
    return ThreadingHTTPServer(("127.0.0.1", port), handler)


def cmd_serve(args):
    ui_dir = args.ui_dir
    if ui_dir is None:
        guess = os.path.join(os.getcwd(), "frontend", "dist")
        ui_dir = guess if os.path.isdir(guess) else None
    server = make_server(args.port, ui_dir=ui_dir, levels_dir=args.levels)
    print(
        f"serving on http://127.0.0.1:{server.server_address[1]} "
        f"(ui: {ui_dir or 'none'}, levels: {args.levels or 'none'})",
        file=sys.stderr,
    )
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
    return EXIT_OK


def _add_gen_flags(p):
    p.add_argument("--n", type=int, required=True)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--m", type=int, default=None, help="target edge count")
    group.add_argument(
        "--removed", type=int, default=None,
        help="edges to remove from the flipped triangulation",
    )
    p.add_argument("--swaps", "-s", type=int, default=2, help="verified minimum swaps")
    p.add_argument("--delta", type=int, default=None, help="separation, grid units")
    p.add_argument(
        "--delta-frac", type=float, default=None,
        help="separation as a fraction of the playing area (e.g. 0.03)",
    )
    p.add_argument("--rho", type=int, default=None, help="vertex disc radius")
    p.add_argument("--lambda", type=int, default=None, help="edge width")
    p.add_argument("--flips", type=int, default=3)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--threshold", type=int, default=1000)
    p.add_argument("--max-restarts", type=int, default=1000)
    p.add_argument("--grid-size", type=int, default=GRID_SIZE)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="swaptangle",
        description="Generate, solve, verify and compare edge-swap untangling puzzles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a puzzle instance")
    _add_gen_flags(p)
    p.add_argument("--out", default=None, help="output file (default: stdout)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("solve", help="search for minimum swap sequences")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--max-depth", type=int, default=8)
    p.add_argument("--max-states", type=int, default=2_000_000)
    p.add_argument("--all", action="store_true", help="include solution sequences")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="validate an instance file")
    p.add_argument("--in", dest="infile", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("equiv", help="decide swap-equivalence of two instances")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("fixtures", help="emit built-in benchmark instances")
    p.add_argument("--name", choices=["eight-cycle", "basic-construction"],
                   required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_fixtures)

    p = sub.add_parser("bench", help="run generation experiments to CSV")
    p.add_argument("experiment", choices=["thresholds", "hull"])
    p.add_argument("--csv", required=True)
    p.add_argument("--n-values", type=int, nargs="+", default=[10, 15, 20])
    p.add_argument("--thresholds", type=int, nargs="+",
                   default=[50, 100, 150, 200, 250, 300, 350, 400, 450, 500, 1000])
    p.add_argument("--delta", type=int, default=None)
    p.add_argument("--delta-frac", type=float, default=None)
    p.add_argument("--delta-fracs", type=float, nargs="+",
                   default=[0.005, 0.01, 0.02, 0.03])
    p.add_argument("--seeds", type=int, default=20, help="runs per cell (thresholds)")
    p.add_argument("--per-cell", type=int, default=100, help="runs per cell (hull)")
    p.add_argument("--threshold", type=int, default=2000, help="hull sweep threshold")
    p.add_argument("--base-seed", type=int, default=0)
    p.add_argument("--max-restarts", type=int, default=50)
    p.add_argument("--grid-size", type=int, default=GRID_SIZE)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("serve", help="HTTP JSON API plus static UI hosting")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--levels", default=None, help="on-disk level cache directory")
    p.add_argument("--ui-dir", default=None, help="static UI bundle directory")
    p.set_defaults(func=cmd_serve)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
