"""Command-line entry point: ``stpath solve | gen | batch``."""

from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
from pathlib import Path
from typing import Iterator

from . import _kernels
from .gen import gen_gap, gen_random
from .graph import Graph, GraphError, parse_graph
from .pipeline import CSV_COLUMNS, PipelineError, SolutionReport, frac_str, run_pipeline
from .separation import PARTITION_MAX_N

log = logging.getLogger("stpath")


def _describe(r: SolutionReport) -> str:
    lines = [
        f"instance   {r.id}: n={r.n} m={r.m} s={r.s} t={r.t}",
        f"lp value   {r.lp_value} ({float(r.lp_value):.6g})",
        f"narrow     k={r.k} " + " ".join("{" + ",".join(map(str, S)) + "}" for S in r.narrow_cuts),
        f"tree       |J|={r.tree_size}  T={r.wrong_degree}",
        f"join       |F|={r.join_size}",
        f"path       {' '.join(map(str, r.path))}",
        f"cost       {r.cost}  cost/lp={r.ratio_lp} ({float(r.ratio_lp):.4f})",
    ]
    if r.opt is not None:
        lines.append(f"opt        {r.opt}  cost/opt={r.ratio_opt} ({float(r.ratio_opt):.4f})")
    if r.checks:
        lines.append("checks     " + " ".join(f"{k}={v}" for k, v in sorted(r.checks.items())))
    return "\n".join(lines)


def _too_large(g: Graph) -> str | None:
    if g.n > PARTITION_MAX_N:
        return (
            f"n={g.n} exceeds the exhaustive partition-separation limit "
            f"({PARTITION_MAX_N}); the relaxation cannot be certified at this size"
        )
    return None


def cmd_solve(args: argparse.Namespace) -> int:
    try:
        g = parse_graph(Path(args.file).read_text())
    except (OSError, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if msg := _too_large(g):
        print(f"error: {msg}", file=sys.stderr)
        return 2
    try:
        report = run_pipeline(g, verify=args.verify, instance_id=Path(args.file).stem)
    except PipelineError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(_describe(report))
    if args.json:
        Path(args.json).write_text(report.to_json(include_timings=args.timings) + "\n")
    return 0


def cmd_gen(args: argparse.Namespace) -> int:
    try:
        if args.kind == "random":
            g = gen_random(args.n, args.m, args.seed)
        else:
            g = gen_gap(args.k)
    except (ValueError, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    text = g.to_text()
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def parse_genspec(spec: str) -> Iterator[tuple[str, Graph]]:
    """Instances from ``random:count=C,n=A-B,seed=S`` or ``gap:k=A-B``.

    Random instances cycle through sparse, medium and dense edge counts.
    """
    kind, _, params = spec.partition(":")
    opts = dict(p.split("=", 1) for p in params.split(",") if p)

    def span(text: str) -> range:
        lo, _, hi = text.partition("-")
        return range(int(lo), int(hi or lo) + 1)

    if kind == "gap":
        for k in span(opts.get("k", "2-4")):
            yield f"gap-k{k}", gen_gap(k)
        return
    if kind != "random":
        raise ValueError(f"unknown generator spec {spec!r}")
    sizes = span(opts.get("n", "4-10"))
    count = int(opts.get("count", "100"))
    seed = int(opts.get("seed", "0"))
    for i in range(count):
        n = sizes[i % len(sizes)]
        lo, hi = n - 1, n * (n - 1) // 2
        m = (lo, (lo + hi) // 2, hi, lo + (hi - lo) // 4)[(i // len(sizes)) % 4]
        yield f"random-{seed}-{i}", gen_random(n, m, seed * 1_000_003 + i)


def _instances(source: str) -> Iterator[tuple[str, Graph | Exception]]:
    path = Path(source)
    if path.is_dir():
        for f in sorted(p for p in path.iterdir() if p.is_file()):
            try:
                yield f.stem, parse_graph(f.read_text())
            except (OSError, UnicodeDecodeError, GraphError) as exc:
                yield f.stem, exc
    elif ":" in source:
        yield from parse_genspec(source)
    else:
        raise ValueError(f"{source!r} is neither a directory nor a generator spec")


def run_batch(source: str, *, verify: bool) -> dict:
    reports: list[SolutionReport] = []
    failures: list[dict[str, str]] = []
    for name, item in _instances(source):
        if isinstance(item, Exception):
            failures.append({"id": name, "stage": "parse", "error": str(item)})
            continue
        if msg := _too_large(item):
            failures.append({"id": name, "stage": "relaxation", "error": msg})
            continue
        try:
            reports.append(run_pipeline(item, verify=verify, instance_id=name))
        except PipelineError as exc:
            failures.append({"id": name, "stage": exc.stage, "error": str(exc)})
        log.info("%s done", name)
    ratios_lp = [r.ratio_lp for r in reports]
    ratios_opt = [r.ratio_opt for r in reports if r.ratio_opt is not None]
    summary = {
        "instances": len(reports) + len(failures),
        "solved": len(reports),
        "failures": failures,
        "max_ratio_lp": frac_str(max(ratios_lp)) if ratios_lp else None,
        "max_ratio_opt": frac_str(max(ratios_opt)) if ratios_opt else None,
        "skipped_checks": sum(v == "skipped" for r in reports for v in r.checks.values()),
    }
    return {"summary": summary, "reports": reports}


def cmd_batch(args: argparse.Namespace) -> int:
    try:
        result = run_batch(args.source, verify=args.verify)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    summary, reports = result["summary"], result["reports"]
    print(json.dumps(summary, indent=2))
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            writer = csv.DictWriter(fh, fieldnames=CSV_COLUMNS)
            writer.writeheader()
            for r in reports:
                writer.writerow(r.csv_row())
    if args.json:
        payload = {"summary": summary, "reports": [r.to_dict() for r in reports]}
        Path(args.json).write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    return 0 if not summary["failures"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="stpath", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="run the approximation on one edge-list file")
    p.add_argument("file")
    p.add_argument("--json", metavar="OUT", help="write the report as JSON")
    p.add_argument("--verify", action="store_true", help="cross-check against brute-force oracles")
    p.add_argument("--timings", action="store_true", help="include per-stage timings in the JSON")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("gen", help="generate an instance")
    gsub = p.add_subparsers(dest="kind", required=True)
    r = gsub.add_parser("random")
    r.add_argument("--n", type=int, required=True)
    r.add_argument("--m", type=int, required=True)
    r.add_argument("--seed", type=int, default=0)
    r.add_argument("--out")
    r.set_defaults(func=cmd_gen)
    q = gsub.add_parser("gap")
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--out")
    q.set_defaults(func=cmd_gen)

    p = sub.add_parser("batch", help="solve a directory or a generated corpus")
    p.add_argument("source", help="directory of edge-list files, or random:count=C,n=A-B,seed=S / gap:k=A-B")
    p.add_argument("--verify", action="store_true")
    p.add_argument("--csv", metavar="OUT")
    p.add_argument("--json", metavar="OUT")
    p.set_defaults(func=cmd_batch)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    log.debug("kernel backend: %s", _kernels.BACKEND)
    return args.func(args)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
