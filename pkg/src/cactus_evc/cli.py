"""Command line front end.

Exit codes: 0 success, 1 parse error, 2 unsupported graph (disconnected or
a block outside edge/cycle/chordal), 3 oracle cap exceeded, 4 internal
invariant violation (including an engine/oracle mismatch).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from typing import Optional, Sequence

from .engine import compute_evc
from .errors import (
    DisconnectedGraphError,
    GraphParseError,
    OracleCapError,
    UnsupportedGraphError,
)
from .generators import GenSpec, SplitMix64, derive_seed, generate, random_cactus
from .graph import parse_edge_list, serialize_edge_list
from .oracle import DEFAULT_CAP, DEFAULT_MAX_GUARDS, oracle_evc, oracle_evc_required
from .verify import compare_engine_oracle

EXIT_OK, EXIT_PARSE, EXIT_UNSUPPORTED, EXIT_CAP, EXIT_INVARIANT = 0, 1, 2, 3, 4


def _read(path: str):
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _err(msg: str) -> None:
    print(f"error: {msg}", file=sys.stderr)


def cmd_compute(path: str, at: Optional[int] = None, as_json: bool = False, out=None) -> int:
    out = out or sys.stdout
    try:
        g = parse_edge_list(_read(path))
    except GraphParseError as e:
        _err(str(e))
        return EXIT_PARSE
    if at is not None and not 0 <= at < g.vertex_count:
        _err(f"query vertex {at} out of range")
        return EXIT_PARSE
    try:
        report = compute_evc(g, at=at)
    except (UnsupportedGraphError, DisconnectedGraphError) as e:
        _err(str(e))
        return EXIT_UNSUPPORTED
    if report.evc_v is not None and report.evc_v < report.evc:
        _err("internal invariant violated: evc_v < evc")
        return EXIT_INVARIANT
    if as_json:
        json.dump(report.to_dict(), out, indent=2)
        out.write("\n")
    else:
        print(f"evc: {report.evc}", file=out)
        if at is not None:
            print(f"evc_v: {report.evc_v} (v = {at})", file=out)
            print(f"type: {report.vtype}", file=out)
        print(f"vertices: {report.vertex_count}  edges: {report.edge_count}  blocks: {len(report.blocks)}", file=out)
    return EXIT_OK


def cmd_oracle(path: str, required: Sequence[int] = (), cap: int = DEFAULT_CAP, out=None) -> int:
    out = out or sys.stdout
    try:
        g = parse_edge_list(_read(path))
    except GraphParseError as e:
        _err(str(e))
        return EXIT_PARSE
    try:
        if required:
            value = oracle_evc_required(g, required, cap, max(DEFAULT_MAX_GUARDS, cap))
        else:
            value = oracle_evc(g, cap, max(DEFAULT_MAX_GUARDS, cap))
    except OracleCapError as e:
        _err(str(e))
        return EXIT_CAP
    except ValueError as e:
        _err(str(e))
        return EXIT_PARSE
    print(value, file=out)
    return EXIT_OK


def instance_spec(kind: str, n_max: int, seed: int, index: int) -> GenSpec:
    inst_seed = derive_seed(seed, index)
    n = 1 + SplitMix64(inst_seed).below(n_max)
    return GenSpec("chordal" if kind == "chordal" else "cactus", n=n, seed=inst_seed)


def _save_counterexample(directory: str, spec: GenSpec, g, problems) -> str:
    os.makedirs(directory, exist_ok=True)
    path = os.path.join(directory, f"counterexample-{spec.kind}-{spec.seed}.txt")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"# genspec: {spec.to_json()}\n")
        for p in problems:
            fh.write(f"# mismatch: {p}\n")
        fh.write(serialize_edge_list(g))
    return path


def _load_counterexample(path: str):
    text = _read(path)
    spec = None
    for line in text.splitlines():
        if line.startswith("# genspec:"):
            spec = GenSpec.from_json(line.split(":", 1)[1])
    return spec, parse_edge_list(text)


def cmd_crosscheck(
    kind: str = "cactus",
    n_max: int = 8,
    count: int = 100,
    seed: int = 0,
    out_dir: str = ".",
    replay: Optional[str] = None,
    out=None,
) -> int:
    out = out or sys.stdout
    if replay is not None:
        spec, stored = _load_counterexample(replay)
        g = generate(spec) if spec is not None else stored
        if g != stored:
            _err("regenerated graph differs from the stored one")
            return EXIT_INVARIANT
        problems, _ = compare_engine_oracle(g)
        for p in problems:
            print(f"mismatch: {p}", file=out)
        print("reproduced" if problems else "no mismatch", file=out)
        return EXIT_INVARIANT if problems else EXIT_OK

    for i in range(count):
        spec = instance_spec(kind, n_max, seed, i)
        g = generate(spec)
        try:
            problems, _ = compare_engine_oracle(g)
        except OracleCapError as e:
            _err(str(e))
            return EXIT_CAP
        if problems:
            path = _save_counterexample(out_dir, spec, g, problems)
            print(f"{i}/{count} pass; instance {i} failed, saved to {path}", file=out)
            for p in problems:
                print(f"mismatch: {p}", file=out)
            return EXIT_INVARIANT
    print(f"{count}/{count} pass", file=out)
    return EXIT_OK


def run_bench(sizes: Sequence[int], seed: int = 0, cycle_fraction: float = 0.5) -> list[dict]:
    """Time compute_evc on one random cactus per size (generation not timed)."""
    if list(sizes) != sorted(sizes):
        raise ValueError("sizes must be ascending")
    rows = []
    prev = None
    for n in sizes:
        g = random_cactus(n, cycle_fraction, seed)
        start = time.perf_counter()
        report = compute_evc(g)
        elapsed = time.perf_counter() - start
        rows.append(
            {
                "n": n,
                "edges": g.edge_count,
                "blocks": len(report.blocks),
                "evc": report.evc,
                "seconds": elapsed,
                "ratio": None if prev is None else elapsed / prev,
            }
        )
        prev = elapsed
    return rows


def cmd_bench(sizes: Sequence[int], seed: int = 0, as_json: bool = False, out=None) -> int:
    out = out or sys.stdout
    try:
        rows = run_bench(sizes, seed)
    except ValueError as e:
        _err(str(e))
        return EXIT_PARSE
    if as_json:
        json.dump(rows, out, indent=2)
        out.write("\n")
        return EXIT_OK
    print(f"{'n':>10} {'edges':>10} {'blocks':>9} {'evc':>9} {'seconds':>9} {'ratio':>7}", file=out)
    for r in rows:
        ratio = "-" if r["ratio"] is None else f"{r['ratio']:.2f}"
        print(
            f"{r['n']:>10} {r['edges']:>10} {r['blocks']:>9} {r['evc']:>9} {r['seconds']:>9.3f} {ratio:>7}",
            file=out,
        )
    return EXIT_OK


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cactus-evc", description="Eternal vertex cover numbers of cactus-like graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="evc of a graph (engine)")
    c.add_argument("file")
    c.add_argument("--at", type=int, metavar="V", help="also report evc_V and the type at V")
    c.add_argument("--json", action="store_true")

    o = sub.add_parser("oracle", help="evc by exhaustive game solving (small graphs)")
    o.add_argument("file")
    o.add_argument("--require", type=_int_list, default=[], metavar="V,...")
    o.add_argument("--cap", type=int, default=DEFAULT_CAP, metavar="N")

    x = sub.add_parser("crosscheck", help="compare engine and oracle on random instances")
    x.add_argument("--kind", choices=("cactus", "chordal"), default="cactus")
    x.add_argument("--n", type=int, default=8, metavar="N", help="maximum vertex count")
    x.add_argument("--count", type=int, default=100, metavar="C")
    x.add_argument("--seed", type=int, default=0, metavar="S")
    x.add_argument("--out", default=".", metavar="DIR", help="where to save a counterexample")
    x.add_argument("--replay", metavar="FILE", help="re-run a saved counterexample")

    b = sub.add_parser("bench", help="time the engine on random cacti")
    b.add_argument("--sizes", type=_int_list, required=True, metavar="a,b,c")
    b.add_argument("--seed", type=int, default=0, metavar="S")
    b.add_argument("--json", action="store_true")
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "compute":
        return cmd_compute(args.file, args.at, args.json)
    if args.command == "oracle":
        return cmd_oracle(args.file, args.require, args.cap)
    if args.command == "crosscheck":
        return cmd_crosscheck(args.kind, args.n, args.count, args.seed, args.out, args.replay)
    return cmd_bench(args.sizes, args.seed, args.json)


if __name__ == "__main__":
    sys.exit(main())
