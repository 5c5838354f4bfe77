"""Command-line front end: ``burnlab simulate|solve|family|percolate|verify|grid``.

Exit codes: 0 success, 1 usage or parse error, 2 stall or infeasible,
3 verification disagreement, 4 size-limit refusal (including an exhausted
search budget).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import __version__
from .corpus import DEFAULT_SEED
from .graph import GraphError, SizeLimitError, parse_edge_list
from .process import BurnSequence, simulate
from .specs import generate, parse_spec

EXIT_OK, EXIT_USAGE, EXIT_STALL, EXIT_DISAGREE, EXIT_LIMIT = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; 2 means "stalled" here
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def load_graph(text: str):
    """A family spec, ``file:PATH``, or a bare path to an edge-list file."""
    if ":" not in text and "(" not in text and os.path.exists(text):
        with open(text) as fh:
            return parse_edge_list(fh.read())
    return generate(parse_spec(text))


def parse_seq(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x != ""]
    except ValueError:
        raise UsageError(f"sequence must be comma-separated vertex ids, got {text!r}") from None


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _fmt_seq(seq) -> str:
    return ",".join(str(v) for v in seq) if seq is not None else "-"


# ---------------------------------------------------------------------------

def cmd_simulate(args) -> int:
    g = load_graph(args.graph)
    seq = BurnSequence(tuple(parse_seq(args.seq)), args.r)
    trace = simulate(g, seq)
    if args.format == "json":
        doc = {"rounds": [trace.new_blue(j) for j in range(1, len(trace.rounds))],
               "rd": trace.rd, "stalled_at": trace.stalled_at, "consumed": trace.consumed}
        _emit(json.dumps(doc) + "\n", args.out)
    else:
        lines = []
        if args.verbose:
            for j in range(1, len(trace.rounds)):
                lines.append(f"round {j}: +{_fmt_seq(trace.new_blue(j))}")
        lines.append(f"completed rd={trace.rd}" if trace.completed
                     else f"stalled at round {trace.stalled_at}")
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if trace.completed else EXIT_STALL


def cmd_solve(args) -> int:
    from .solver import solve

    g = load_graph(args.graph)
    b, t = solve(g, args.r, max_nodes=args.max_nodes,
                 **({"limit": args.max_rounds} if args.max_rounds else {}))
    rows = []
    for res in (b, t):
        rows.append({"quantity": f"{res.quantity}{args.r}", "value": res.value,
                     "witness": list(res.witness.sources) if res.witness else None,
                     "nodes": res.stats.get("nodes"), "unknown_above": res.unknown_above})
    if args.format == "json":
        _emit(json.dumps(rows) + "\n", args.out)
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["quantity", "value", "witness"])
        for row in rows:
            w.writerow([row["quantity"], "" if row["value"] is None else row["value"],
                        _fmt_seq(row["witness"])])
        _emit(buf.getvalue(), args.out)
    else:
        lines = []
        for row in rows:
            if row["value"] is None:
                above = row["unknown_above"]
                lines.append(f"{row['quantity']}=unknown" + (f" (> {above})" if above else ""))
            else:
                lines.append(f"{row['quantity']}={row['value']} witness={_fmt_seq(row['witness'])}")
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if b.value is not None and t.value is not None else EXIT_LIMIT


def cmd_family(args) -> int:
    from .families import closed_form

    spec = parse_spec(args.graph)
    ans = closed_form(spec)
    doc = {"spec": str(spec), "b2": str(ans.b2), "t2": str(ans.t2),
           "witness": list(ans.witness.sources) if ans.witness else None,
           "provenance": ans.provenance, "closed": ans.closed}
    if args.format == "json":
        _emit(json.dumps(doc) + "\n", args.out)
    else:
        lines = [f"b2={doc['b2']}  ({ans.provenance.get('b2', '')})",
                 f"t2={doc['t2']}  ({ans.provenance.get('t2', '')})",
                 f"witness={_fmt_seq(doc['witness'])}"]
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_percolate(args) -> int:
    from .percolation import min_percolating, percolate

    g = load_graph(args.graph)
    if args.seed_set is not None:
        rounds = percolate(g, parse_seq(args.seed_set), args.r)
        _emit(("percolates rounds=%d\n" % rounds) if rounds is not None else "does not percolate\n",
              args.out)
        return EXIT_OK if rounds is not None else EXIT_STALL
    res = min_percolating(g, args.r)
    doc = {"m": res.m, "tau": res.tau, "witness_set": list(res.witness_set),
           "minimum_sets": res.count}
    if args.format == "json":
        _emit(json.dumps(doc) + "\n", args.out)
    else:
        _emit(f"m={res.m} tau={res.tau} witness={_fmt_seq(res.witness_set)} "
              f"minimum_sets={res.count}\n", args.out)
    return EXIT_OK


def _report(meta: dict, columns, rows: list[list], dict_rows: list[dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps({"meta": meta, "rows": dict_rows}, indent=1) + "\n"
    buf = io.StringIO()
    for key, value in meta.items():
        buf.write(f"# {key}={value}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    w.writerows(rows)
    return buf.getvalue()


def cmd_verify(args) -> int:
    from .solver import EXACT_VERTEX_LIMIT
    from .verify import COLUMNS, DEFAULT_CAPS, SUITES, run_tasks, suite_tasks

    if args.r != 2:
        raise UsageError("the closed forms under verification are for r = 2 only")
    suites = SUITES if args.suite == "all" else (args.suite,)
    tasks = []
    used = {}
    for s in suites:
        caps = dict(DEFAULT_CAPS[s])
        if args.max_n is not None and "max_n" in caps:
            caps["max_n"] = args.max_n
        if args.max_vertices is not None and "max_vertices" in caps:
            caps["max_vertices"] = args.max_vertices
        if args.count is not None and "count" in caps:
            caps["count"] = args.count
        if s == "coronas" and caps["max_n"] > 7:
            raise SizeLimitError("corona bases come from the graph atlas (at most 7 vertices)")
        if caps.get("max_vertices", 0) > EXACT_VERTEX_LIMIT:
            raise SizeLimitError(f"--max-vertices above the exact limit {EXACT_VERTEX_LIMIT}")
        used[s] = caps
        tasks += suite_tasks(s, caps, args.seed)
    rows = run_tasks(tasks, args.jobs)
    meta = {"suite": args.suite, "seed": args.seed, "version": __version__,
            "caps": ";".join(f"{s}:" + ",".join(f"{k}={v}" for k, v in c.items())
                             for s, c in used.items())}
    text = _report(meta, COLUMNS, [r.cells(args.timing) for r in rows],
                   [r.as_dict(args.timing) for r in rows], args.format)
    _emit(text, args.out)
    bad = [r for r in rows if not r.ok]
    if bad:
        print(f"{len(bad)} of {len(rows)} rows disagree or fail replay", file=sys.stderr)
        return EXIT_DISAGREE
    return EXIT_OK


def cmd_grid(args) -> int:
    from .verify import grid_rows

    rows = grid_rows(args.n_min, args.n_max, args.max_nodes)
    columns = ("n", "lower", "exact", "upper")
    cells = [[r["n"], r["lower"], "unknown" if r["exact"] is None else r["exact"], r["upper"]]
             for r in rows]
    meta = {"experiment": "grid", "max_nodes": args.max_nodes, "version": __version__}
    dict_rows = [{k: r[k] for k in columns} for r in rows]
    _emit(_report(meta, columns, cells, dict_rows, args.format), args.out)
    return EXIT_OK if all(r["ok"] for r in rows) else EXIT_DISAGREE


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--r", type=int, default=2, help="spread threshold (default 2)")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED,
                        help=f"seed for randomized corpora (default {DEFAULT_SEED})")
    common.add_argument("--max-rounds", type=int, default=None)
    common.add_argument("--out", default=None, help="write the report here instead of stdout")

    p = _Parser(prog="burnlab", description="Exact r-burning and bootstrap percolation lab.")
    p.add_argument("--version", action="version", version=f"burnlab {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("simulate", parents=[common], help="run one burning sequence")
    s.add_argument("graph", help="family spec (path:7, wheel:8, ...) or edge-list file")
    s.add_argument("--seq", required=True, help="comma-separated source vertices")
    s.add_argument("--verbose", "-v", action="store_true", help="print new blue vertices per round")
    s.add_argument("--format", choices=("text", "json"), default="text")
    s.set_defaults(func=cmd_simulate)

    s = sub.add_parser("solve", parents=[common], help="exact b_r and t_r with witnesses")
    s.add_argument("graph")
    s.add_argument("--max-nodes", type=int, default=None, help="search node budget")
    s.add_argument("--format", choices=("text", "csv", "json"), default="text")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("family", parents=[common], help="closed-form values for a family spec")
    s.add_argument("graph")
    s.add_argument("--format", choices=("text", "json"), default="text")
    s.set_defaults(func=cmd_family)

    s = sub.add_parser("percolate", parents=[common], help="minimum percolating set and tau")
    s.add_argument("graph")
    s.add_argument("--seed-set", default=None, help="only test whether this seed set percolates")
    s.add_argument("--format", choices=("text", "json"), default="text")
    s.set_defaults(func=cmd_percolate)

    s = sub.add_parser("verify", parents=[common], help="closed forms against the exact solver")
    s.add_argument("suite", choices=("paths", "cycles", "complete", "bipartite", "spiders",
                                     "wheels", "coronas", "products", "percolation", "all"))
    s.add_argument("--max-n", type=int, default=None)
    s.add_argument("--max-vertices", type=int, default=None)
    s.add_argument("--count", type=int, default=None, help="random corpus size (percolation)")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--timing", action="store_true", help="fill the wall_time column")
    s.add_argument("--format", choices=("csv", "json"), default="csv")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("grid", parents=[common], help="b_2 of square grids against n and 2n")
    s.add_argument("--n-min", type=int, default=1)
    s.add_argument("--n-max", type=int, default=5)
    s.add_argument("--max-nodes", type=int, default=5_000_000)
    s.add_argument("--format", choices=("csv", "json"), default="csv")
    s.set_defaults(func=cmd_grid)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.r < 1:
        print("burnlab: error: --r must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except SizeLimitError as exc:
        print(f"burnlab: size limit: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (GraphError, UsageError, OSError) as exc:
        print(f"burnlab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
