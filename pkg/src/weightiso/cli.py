"""``iso`` command line: test, index, bench, hunt, gen.

JSON reports go to stdout, a one-line human summary to stderr.
Exit codes: 0 isomorphic / success, 1 not isomorphic, 2 input error,
3 discrepancy under ``--strict``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from pathlib import Path

from . import __version__
from .bench import run_bench
from .graph import (
    GraphFormatError,
    encode_graph6,
    named,
    parse_edge_list,
    parse_graph6,
    random_connected,
    random_regular,
    to_edge_list,
)
from .isotest import InputError, algorithm1, check_input
from .oracle import HuntConfig, hunt
from .weights import format_rational, topo_index

SCHEMA_VERSION = "1.0"

EXIT_OK, EXIT_NOT_ISO, EXIT_INPUT, EXIT_STRICT = 0, 1, 2, 3


def load_graph(path: str, fmt: str = "auto"):
    text = Path(path).read_text(encoding="utf-8")
    if fmt == "auto":
        fmt = "graph6" if path.endswith(".g6") else "edgelist"
    if fmt == "graph6":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if len(lines) != 1:
            raise GraphFormatError(f"{path}: expected exactly one graph6 line")
        return parse_graph6(lines[0])
    return parse_edge_list(text)


def _report(command, inputs, result, timings, seed=None) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "version": __version__,
        "command": command,
        "inputs": inputs,
        "seed": seed,
        "result": result,
        "timings_ms": {k: round(v * 1000.0, 3) for k, v in timings.items()},
    }


def _emit(report: dict) -> None:
    json.dump(report, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _say(msg: str) -> None:
    print(msg, file=sys.stderr)


def cmd_test(args) -> int:
    t0 = time.perf_counter()
    g, h = load_graph(args.a, args.format), load_graph(args.b, args.format)
    t1 = time.perf_counter()
    res = algorithm1(g, h, mode=args.mode)
    t2 = time.perf_counter()
    stats = res.stats
    timings = {
        "parse": t1 - t0,
        "k_matrix": stats.get("k_matrix_s", 0.0),
        "p1": stats.get("p1_s", 0.0),
        "verify": stats.get("verify_s", 0.0),
        "total": t2 - t0,
    }
    _emit(_report("test", [args.a, args.b], res.to_dict(), timings))
    _say("G ≅ G'" if res.isomorphic else "G ≇ G'")
    return EXIT_OK if res.isomorphic else EXIT_NOT_ISO


def cmd_index(args) -> int:
    t0 = time.perf_counter()
    g = load_graph(args.file, args.format)
    check_input(g)
    idx = [format_rational(x) for x in topo_index(g)]
    _emit(_report("index", [args.file], {"n": g.n, "index": idx}, {"total": time.perf_counter() - t0}))
    _say(json.dumps(idx))
    return EXIT_OK


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def cmd_bench(args) -> int:
    t0 = time.perf_counter()
    out = run_bench(args.n, instances=args.instances, seed=args.seed,
                    edge_prob=args.edge_prob, fingerprint_above=args.fingerprint_above)
    inputs = [f"random_connected(n={n}, p={args.edge_prob})" for n in args.n]
    _emit(_report("bench", inputs, out, {"total": time.perf_counter() - t0}, seed=args.seed))
    for row in out["rows"]:
        _say(f"n={row['n']:>4}  {row['mode']:<11}  median {row['median_s'] * 1000:.2f} ms")
    slope = out["fit"]["slope"]
    _say("log-log slope: " + ("n/a" if slope is None else f"{slope:.3f}"))
    return EXIT_OK


def cmd_hunt(args) -> int:
    nmin, nmax = (args.n, args.n) if args.n is not None else (args.nmin, args.nmax)
    cfg = HuntConfig(strategy=args.strategy, nmin=nmin, nmax=nmax, count=args.count,
                     seed=args.seed, exhaustive_oracle=args.exhaustive_oracle,
                     mode=args.mode, jobs=args.jobs)
    rep = hunt(cfg)
    if args.artifacts and rep.counterexamples:
        out = Path(args.artifacts)
        out.mkdir(parents=True, exist_ok=True)
        for cx in rep.counterexamples:
            (out / f"{cx['strategy']}-{rep.seed}-{cx['index']}.json").write_text(json.dumps(cx, indent=2))
    inputs = [f"hunt(strategy={cfg.strategy}, n=[{cfg.nmin},{cfg.nmax}], count={cfg.count})"]
    _emit(_report("hunt", inputs, rep.to_dict(), {"total": rep.wall_time}, seed=cfg.seed))
    _say(f"{rep.instances_tested} instances: {rep.agreements} agree, "
         f"{rep.false_positives} false positives, {rep.false_negatives} false negatives")
    if rep.false_positives:
        _say("FALSE POSITIVE: implementation bug")
        return EXIT_STRICT
    if rep.false_negatives and args.strict:
        return EXIT_STRICT
    return EXIT_OK


def cmd_gen(args) -> int:
    if args.named:
        g, desc = named(args.named), f"named({args.named})"
    elif args.random_connected:
        n, p = int(args.random_connected[0]), float(args.random_connected[1])
        g, desc = random_connected(n, p, args.seed), f"random_connected({n}, {p})"
    else:
        n, d = args.random_regular
        g, desc = random_regular(n, d, args.seed), f"random_regular({n}, {d})"
    fmt = args.format
    if fmt == "auto":
        fmt = "graph6" if args.output and args.output.endswith(".g6") else "edgelist"
    text = encode_graph6(g) + "\n" if fmt == "graph6" else to_edge_list(g)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
        _emit(_report("gen", [desc], {"n": g.n, "m": g.m, "format": fmt, "path": args.output},
                      {}, seed=args.seed))
    else:
        sys.stdout.write(text)
    _say(f"{desc}: n={g.n}, m={g.m}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="iso", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)
    formats = ["auto", "edgelist", "graph6"]

    p = sub.add_parser("test", help="decide whether two graphs are isomorphic")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--format", choices=formats, default="auto")
    p.add_argument("--mode", choices=["exact", "fingerprint", "auto"], default="exact")
    p.set_defaults(func=cmd_test)

    p = sub.add_parser("index", help="exact topological index (sorted weights for b = 1)")
    p.add_argument("file")
    p.add_argument("--format", choices=formats, default="auto")
    p.set_defaults(func=cmd_index)

    p = sub.add_parser("bench", help="time algorithm1 on isomorphic pairs and fit the exponent")
    p.add_argument("--n", type=_int_list, default=[16, 32, 64])
    p.add_argument("--instances", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--edge-prob", type=float, default=0.25)
    p.add_argument("--fingerprint-above", type=int, default=64)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("hunt", help="compare algorithm1 with ground truth on generated pairs")
    p.add_argument("--strategy", choices=["iso", "near", "hard"], default="iso")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--nmin", type=int, default=4)
    p.add_argument("--nmax", type=int, default=8)
    p.add_argument("--n", type=int, help="fixed vertex count (sets nmin = nmax)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--mode", choices=["exact", "fingerprint", "auto"], default="exact")
    p.add_argument("--strict", action="store_true", help="exit 3 on any false negative")
    p.add_argument("--exhaustive-oracle", action="store_true",
                   help="also run the brute-force oracle where truth is known by construction")
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    p.add_argument("--artifacts", help="directory for counterexample JSON files")
    p.set_defaults(func=cmd_hunt)

    p = sub.add_parser("gen", help="write a generated graph")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--named")
    src.add_argument("--random-connected", nargs=2, metavar=("N", "P"))
    src.add_argument("--random-regular", nargs=2, type=int, metavar=("N", "D"))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=formats, default="auto")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        _say(f"input error: {exc}")
        return EXIT_INPUT
    except (GraphFormatError, OSError, ValueError) as exc:
        _say(f"input error: {exc}")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
