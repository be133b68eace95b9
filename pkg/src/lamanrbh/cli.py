"""``lamanrbh`` command line.

Exit codes: 0 success / Laman / accepted, 1 negative verdict or rejected
certificate, 2 bad input.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import bench as _bench
from .builder import build_hierarchy
from .errors import LamanError, LeafRuleViolation
from .graph import henneberg_generate
from .io import (
    export_dot,
    parse_graph_file,
    read_hierarchy,
    write_graph,
    write_hierarchy,
)
from .partition import COLOR_NAMES, Infeasible, partition_two_forests
from .verifier import verify_hierarchy

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2


def _int_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    return [int(x) for x in text.replace(",", " ").split()]


def cmd_check(args) -> int:
    g = parse_graph_file(args.file)
    if g.n < 2:
        print(f"error: need at least 2 vertices, got {g.n}", file=sys.stderr)
        return EXIT_INPUT
    _bench.warm_up()
    report = _bench.run_check(g, verify=args.debug_verify)
    print("\n".join(report.lines()))
    return EXIT_OK if report.verdict.is_laman else EXIT_NEGATIVE


def cmd_hierarchy(args) -> int:
    g = parse_graph_file(args.file)
    if g.n < 2 or g.m != 2 * g.n - 3:
        print(f"NOT_LAMAN WrongEdgeCount (n={g.n}, m={g.m})")
        return EXIT_NEGATIVE
    p = partition_two_forests(g)
    if isinstance(p, Infeasible):
        print("NOT_LAMAN NotPartitionable")
        return EXIT_NEGATIVE
    try:
        h, counters = build_hierarchy(g, p)
    except LeafRuleViolation:
        print("NOT_LAMAN LeafRuleViolation")
        return EXIT_NEGATIVE
    write_hierarchy(h, args.output)
    print(f"LAMAN nodes={h.n_nodes} edge_tests={counters.edge_tests} relabels={counters.relabels}")
    return EXIT_OK


def cmd_verify(args) -> int:
    g = parse_graph_file(args.graph)
    h = read_hierarchy(args.hierarchy)
    violations = verify_hierarchy(g, h)
    if not violations:
        print("ACCEPT")
        return EXIT_OK
    print(f"REJECT {len(violations)} violations")
    for v in violations:
        print(str(v))
    return EXIT_NEGATIVE


def cmd_partition(args) -> int:
    g = parse_graph_file(args.file)
    p = partition_two_forests(g)
    if isinstance(p, Infeasible):
        print(f"INFEASIBLE edge {p.edge}")
        print("witness " + " ".join(map(str, p.witness)))
        return EXIT_NEGATIVE
    for (u, v), c in zip(g.edges.tolist(), p.colors.tolist()):
        print(f"{u} {v} {COLOR_NAMES[c]}")
    return EXIT_OK


def cmd_generate(args) -> int:
    g = henneberg_generate(args.n, args.seed, args.type2_prob)
    if args.output:
        write_graph(g, args.output)
    else:
        from .io import graph_text

        sys.stdout.write(graph_text(g))
    return EXIT_OK


def cmd_bench(args) -> int:
    sizes = _int_list(args.sizes)
    seeds = _int_list(args.seeds)
    if any(n < 2 for n in sizes):
        print("error: sizes must be >= 2", file=sys.stderr)
        return EXIT_INPUT
    rows = _bench.bench_rows(
        sizes, seeds, args.type2_prob, args.partitioner, timing=not args.no_timing, jobs=args.jobs
    )
    text = _bench.bench_csv(rows)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_dot(args) -> int:
    g = parse_graph_file(args.graph)
    if args.hierarchy:
        export_dot(read_hierarchy(args.hierarchy), args.output)
        return EXIT_OK
    partition = None
    if args.color:
        p = partition_two_forests(g)
        if isinstance(p, Infeasible):
            print("INFEASIBLE", file=sys.stderr)
            return EXIT_NEGATIVE
        partition = p
    export_dot(g, args.output, partition)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lamanrbh", description="Laman graph recognition with red-black hierarchies")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="decide whether a graph file is Laman")
    p.add_argument("file")
    p.add_argument("--debug-verify", action="store_true", help="re-verify the certificate independently")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("hierarchy", help="write the red-black hierarchy as JSON")
    p.add_argument("file")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_hierarchy)

    p = sub.add_parser("verify", help="check a hierarchy JSON against a graph")
    p.add_argument("graph")
    p.add_argument("hierarchy")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("partition", help="print a red/black two-forest partition")
    p.add_argument("file")
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser("generate", help="write a random Henneberg (Laman) graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--type2-prob", type=float, default=0.5)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("bench", help="counter and timing table over Henneberg graphs")
    p.add_argument("--sizes", required=True, help="comma separated vertex counts")
    p.add_argument("--seeds", default="0")
    p.add_argument("--type2-prob", type=float, default=0.5)
    p.add_argument("--partitioner", choices=("augment", "henneberg"), default="augment",
                   help="'henneberg' reuses the generator's own partition instead of searching")
    p.add_argument("--no-timing", action="store_true", help="write 0 in the timing columns")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("dot", help="export a graph or hierarchy as DOT")
    p.add_argument("graph")
    p.add_argument("--hierarchy", help="hierarchy JSON to render instead of the graph")
    p.add_argument("--color", action="store_true", help="color graph edges by a computed partition")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_dot)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (LamanError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
