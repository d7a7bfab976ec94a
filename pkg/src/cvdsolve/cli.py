"""Command-line interface.

Exit codes: 0 solved / feasible / valid, 1 infeasible decision or invalid
witness, 2 usage, input or guard errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path

from . import __version__
from .analyzer import (
    CALIBRATED_MODE,
    ConstraintMode,
    branching_number,
    enumerate_top_trees,
    final_bound,
    refined_cases,
    round_up,
    top_cases,
)
from .generators import erdos_renyi, planted
from .graph import Graph, GraphFormatError, format_graph, parse_graph
from .hv import build_hv, format_hv
from .oracle import DEFAULT_GUARD, OracleGuardError, oracle_min_cvd
from .solver import SearchStats, solve_decision, solve_min, verify
from .vcalg import RuleTrace, vcalg

log = logging.getLogger("cvdsolve")

EXIT_OK, EXIT_NO, EXIT_ERROR = 0, 1, 2


class CliError(Exception):
    pass


@dataclass
class RunReport:
    command: list[str]
    n: int | None = None
    m: int | None = None
    result: object = None
    witness: list | None = None
    elapsed: float = 0.0
    counters: dict = field(default_factory=dict)

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "RunReport":
        return cls(**json.loads(text))


def _load(path: str, fmt: str | None) -> Graph:
    try:
        text = Path(path).read_text()
        if fmt is None:
            head = next((ln for ln in text.splitlines() if ln.strip() and not ln.startswith("#")), "")
            fmt = "dimacs" if head.split()[:1] in (["p"], ["c"]) else "edgelist"
        return parse_graph(text, fmt)
    except OSError as e:
        raise CliError(f"cannot read {path}: {e.strerror}") from None
    except GraphFormatError as e:
        raise CliError(f"{path}: {e}") from None


def _argv(args) -> list[str]:
    return args.argv if args.argv is not None else sys.argv[1:]


def _label_index(G: Graph) -> dict:
    return {lab: i for i, lab in enumerate(G.labels)}


def _parse_labels(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(tok) for tok in text.replace(",", " ").split()]
    except ValueError:
        raise CliError(f"cannot parse vertex list {text!r}") from None


def _vertex(G: Graph, label: int) -> int:
    idx = _label_index(G)
    if label not in idx:
        raise CliError(f"vertex {label} is not in the instance")
    return idx[label]


def _emit(args, report: RunReport, text: str):
    if args.json:
        print(report.to_json())
    else:
        print(text)


def _witness_line(witness) -> str:
    return "witness: " + " ".join(map(str, sorted(witness)))


def cmd_solve(args) -> int:
    G = _load(args.path, args.format)
    stats = SearchStats()
    t0 = time.perf_counter()
    if args.k is not None:
        res = solve_decision(G, args.k, stats)
        result, witness = ("yes" if res.feasible else "no"), res.witness
    else:
        size, witness = solve_min(G, stats)
        result = size
    elapsed = time.perf_counter() - t0
    if witness is not None:
        idx = _label_index(G)
        budget = args.k if args.k is not None else len(witness)
        if not verify(G, {idx[x] for x in witness}, budget):
            raise CliError("internal error: witness failed verification")
    report = RunReport(_argv(args), G.n, G.m, result,
                       sorted(witness) if witness is not None else None, elapsed, stats.as_dict())
    lines = [str(result)]
    if witness is not None:
        lines.append(_witness_line(witness))
    _emit(args, report, "\n".join(lines))
    return EXIT_NO if result == "no" else EXIT_OK


def cmd_oracle(args) -> int:
    G = _load(args.path, args.format)
    t0 = time.perf_counter()
    try:
        size, sols = oracle_min_cvd(G, guard=args.guard)
    except OracleGuardError as e:
        raise CliError(str(e)) from None
    witness = sorted(G.labels[u] for u in sols[0])
    report = RunReport(_argv(args), G.n, G.m, size, witness,
                       time.perf_counter() - t0, {"optimal_sets": len(sols)})
    _emit(args, report, f"{size}\n{_witness_line(witness)}")
    return EXIT_OK


def cmd_verify(args) -> int:
    G = _load(args.path, args.format)
    labels = _parse_labels(args.witness)
    ids = {_vertex(G, lab) for lab in labels}
    k = args.k if args.k is not None else len(ids)
    ok = verify(G, ids, k)
    report = RunReport(_argv(args), G.n, G.m, "valid" if ok else "invalid", sorted(labels))
    _emit(args, report, "valid" if ok else "invalid")
    return EXIT_OK if ok else EXIT_NO


def _case_table(records) -> str:
    rows = [("rank", "alpha", "leaves", "vector", "bn")]
    for i, r in enumerate(records, 1):
        rows.append((str(i), str(r.alpha), " ".join(map(str, r.leaf_depths)),
                     "(" + ",".join(map(str, r.composed)) + ")", f"{round_up(r.branching_number):.3f}"))
    widths = [max(len(row[j]) for row in rows) for j in range(5)]
    return "\n".join("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in rows)


def cmd_analyze(args) -> int:
    mode = CALIBRATED_MODE if args.mode == "default" else ConstraintMode(args.mode)
    t0 = time.perf_counter()
    if args.alpha is not None:
        records = sorted(enumerate_top_trees(args.alpha, mode),
                         key=lambda r: (-round(r.branching_number, 9), r.composed))
        records = records[:args.top] if args.top else records
    else:
        records = top_cases(args.top or None, mode)
    bound = final_bound(mode)
    elapsed = time.perf_counter() - t0

    out_lines = []
    show_table = not args.final_bound or args.top is not None or args.alpha is not None
    if show_table:
        out_lines.append(_case_table(records))
    if args.final_bound:
        out_lines.append(f"final bound: {round_up(bound):.3f} ({bound:.6f})")

    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        _write_csv(out / "cases.csv", [r.as_row() for r in records])
        _write_csv(out / "refined.csv", [r.as_row() for r in refined_cases(mode)])
        from .plotting import plot_cases
        plot_cases(records, out / "cases.png", bound=bound, title=f"top recursion tree cases ({mode.value})")
        log.info("wrote %s", out)

    result = {
        "mode": mode.value,
        "cases": [{"alpha": r.alpha, "leaves": list(r.leaf_depths), "vector": list(r.composed),
                   "branching_number": r.branching_number} for r in records],
        "final_bound": bound,
    }
    report = RunReport(_argv(args), result=result, elapsed=elapsed)
    _emit(args, report, "\n".join(out_lines))
    return EXIT_OK


def cmd_bn(args) -> int:
    vec = _parse_labels(args.vector)
    if not vec or any(a < 1 for a in vec):
        raise CliError("a branching vector needs at least one positive integer")
    value = branching_number(vec)
    report = RunReport(_argv(args), result=value)
    _emit(args, report, f"{value:.6f}")
    return EXIT_OK


def _generate(args) -> Graph:
    try:
        if args.planted:
            G, _ = planted(args.cliques, args.size, args.deletions, args.noise, args.spread, args.seed)
            return G
        if args.n is None:
            raise CliError("gen needs --n (Erdos-Renyi) or --planted")
        return erdos_renyi(args.n, args.p, args.seed)
    except ValueError as e:
        raise CliError(str(e)) from None


def cmd_gen(args) -> int:
    text = format_graph(_generate(args), args.format or "edgelist")
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


BENCH_FIELDS = ["instance", "n", "m", "size", "elapsed", "nodes", "B1", "B2", "B3", "oracle", "match"]


def _bench_corpus(args):
    if args.paths:
        for p in args.paths:
            yield Path(p).name, _load(p, args.format)
        return
    for i in range(args.count):
        seed = args.seed + i
        if args.corpus == "planted":
            G, _ = planted(args.cliques, args.size, args.deletions, args.noise, args.spread, seed)
        else:
            G = erdos_renyi(args.n, args.p, seed)
        yield f"{args.corpus}-{seed}", G


def cmd_bench(args) -> int:
    rows = []
    for name, G in _bench_corpus(args):
        stats = SearchStats()
        t0 = time.perf_counter()
        size, _ = solve_min(G, stats)
        row = {"instance": name, "n": G.n, "m": G.m, "size": size,
               "elapsed": round(time.perf_counter() - t0, 6), "nodes": stats.nodes,
               "B1": stats.rules["B1"], "B2": stats.rules["B2"], "B3": stats.rules["B3"],
               "oracle": "", "match": ""}
        if args.oracle:
            osize, _ = oracle_min_cvd(G, guard=args.guard)
            row["oracle"], row["match"] = osize, osize == size
        rows.append(row)
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        _write_csv(out / "bench.csv", rows, BENCH_FIELDS)
        from .plotting import plot_bench
        plot_bench(rows, out / "bench.png")
    mismatches = sum(1 for r in rows if r["match"] is False)
    report = RunReport(_argv(args), result={"instances": len(rows), "mismatches": mismatches},
                       elapsed=sum(r["elapsed"] for r in rows),
                       counters={"rows": rows})
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=BENCH_FIELDS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    _emit(args, report, buf.getvalue().rstrip("\n"))
    return EXIT_NO if mismatches else EXIT_OK


def cmd_hv(args) -> int:
    G = _load(args.path, args.format)
    v = _vertex(G, args.vertex)
    sys.stdout.write(format_hv(build_hv(G, v), G.labels))
    return EXIT_OK


def cmd_vcalg(args) -> int:
    G = _load(args.path, args.format)
    v = _vertex(G, args.vertex)
    H = build_hv(G, v)
    trace = RuleTrace()
    family = vcalg(H, args.k, trace)
    print(trace.format(G.labels))
    print(f"family ({len(family)} covers):")
    for X in family:
        print("  " + " ".join(str(G.labels[u]) for u in sorted(X)))
    return EXIT_OK


def _write_csv(path: Path, rows: list[dict], fields: list[str] | None = None):
    fields = fields or (list(rows[0]) if rows else [])
    with open(path, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=fields)
        writer.writeheader()
        writer.writerows(rows)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a single JSON report")
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=["edgelist", "dimacs"], default=None,
                     help="instance format (default: guess from the file)")

    parser = argparse.ArgumentParser(prog="cvdsolve", description="Exact Cluster Vertex Deletion solver.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", parents=[common, fmt], help="solve an instance")
    p.add_argument("path")
    p.add_argument("--k", type=int, help="decide whether a deletion set of size <= k exists")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("oracle", parents=[common, fmt], help="brute-force optimum")
    p.add_argument("path")
    p.add_argument("--guard", type=int, default=DEFAULT_GUARD, help="maximum vertex count")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", parents=[common, fmt], help="check a deletion set")
    p.add_argument("path")
    p.add_argument("--witness", required=True, help="comma-separated vertices (input numbering)")
    p.add_argument("--k", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("analyze", parents=[common], help="enumerate top recursion trees")
    p.add_argument("--alpha", type=int, choices=[2, 3, 4])
    p.add_argument("--top", type=int)
    p.add_argument("--mode", choices=["default", "strict", "nonstrict", "repeats"], default="default")
    p.add_argument("--final-bound", action="store_true")
    p.add_argument("--out", help="directory for cases.csv, refined.csv and cases.png")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("bn", parents=[common], help="branching number of a vector")
    p.add_argument("vector", help="comma-separated costs, e.g. 1,2")
    p.set_defaults(func=cmd_bn)

    def model_flags(p, with_n=True):
        if with_n:
            p.add_argument("--n", type=int)
        p.add_argument("--p", type=float, default=0.3)
        p.add_argument("--cliques", type=int, default=4)
        p.add_argument("--size", type=int, default=5)
        p.add_argument("--deletions", type=int, default=3)
        p.add_argument("--noise", type=int, default=0)
        p.add_argument("--spread", type=int, default=2)
        p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("gen", help="generate a random instance")
    model_flags(p)
    p.add_argument("--planted", action="store_true")
    p.add_argument("--format", choices=["edgelist", "dimacs"], default="edgelist")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", parents=[common, fmt], help="time the solver on a corpus")
    p.add_argument("paths", nargs="*")
    p.add_argument("--corpus", choices=["er", "planted"], default="planted")
    p.add_argument("--count", type=int, default=10)
    model_flags(p, with_n=False)
    p.add_argument("--n", type=int, default=12)
    p.add_argument("--oracle", action="store_true", help="cross-check against the brute-force oracle")
    p.add_argument("--guard", type=int, default=DEFAULT_GUARD)
    p.add_argument("--out", help="directory for bench.csv and bench.png")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("hv", parents=[fmt], help="dump H_v with side tags")
    p.add_argument("path")
    p.add_argument("--vertex", type=int, required=True)
    p.set_defaults(func=cmd_hv)

    p = sub.add_parser("vcalg", parents=[fmt], help="trace the cover enumeration at a vertex")
    p.add_argument("path")
    p.add_argument("--vertex", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_vcalg)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_ERROR if e.code else EXIT_OK
    args.argv = list(argv) if argv is not None else None
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except CliError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
