"""Compare the numba kernels with the pure Python fallback.

Each backend runs in its own interpreter because the choice is made at
import time from ``LAMANRBH_PURE_PYTHON``.  Compilation happens on a tiny
warm-up graph before anything is timed.

    python benchmarks/bench_backends.py --sizes 256,1024,4096 --repeats 3
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys

WORKER = r"""
import json, sys, time
from lamanrbh import JIT_ENABLED, build_hierarchy, henneberg_with_partition, partition_two_forests

sizes, seed, repeats = json.loads(sys.argv[1])
g, p = henneberg_with_partition(8, 0, 0.5)
partition_two_forests(g)
build_hierarchy(g, p, validate=False)
rows = []
for n in sizes:
    g, p = henneberg_with_partition(n, seed, 0.5)
    part, build = [], []
    for _ in range(repeats):
        t0 = time.perf_counter()
        partition_two_forests(g)
        part.append(time.perf_counter() - t0)
        t0 = time.perf_counter()
        _, c = build_hierarchy(g, p, validate=False)
        build.append(time.perf_counter() - t0)
    rows.append({"n": n, "partition_s": min(part), "build_s": min(build), "relabels": c.relabels})
json.dump({"jit": JIT_ENABLED, "rows": rows}, sys.stdout)
"""


def run_backend(pure: bool, sizes, seed, repeats):
    env = dict(os.environ)
    env.pop("LAMANRBH_PURE_PYTHON", None)
    if pure:
        env["LAMANRBH_PURE_PYTHON"] = "1"
    proc = subprocess.run(
        [sys.executable, "-c", WORKER, json.dumps([sizes, seed, repeats])],
        env=env, capture_output=True, text=True, check=True,
    )
    return json.loads(proc.stdout)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", default="256,1024,4096")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args(argv)
    sizes = [int(s) for s in args.sizes.split(",") if s]

    jit = run_backend(False, sizes, args.seed, args.repeats)
    pure = run_backend(True, sizes, args.seed, args.repeats)
    if not jit["jit"]:
        print("warning: numba unavailable, both columns use the fallback", file=sys.stderr)

    header = f"{'n':>8} {'part_jit':>10} {'part_py':>10} {'build_jit':>10} {'build_py':>10} {'speedup':>8}"
    print(header)
    for a, b in zip(jit["rows"], pure["rows"]):
        if a["relabels"] != b["relabels"]:
            raise SystemExit(f"backends disagree at n={a['n']}")
        speedup = b["build_s"] / a["build_s"] if a["build_s"] else float("inf")
        print(
            f"{a['n']:>8} {a['partition_s']:>10.4f} {b['partition_s']:>10.4f} "
            f"{a['build_s']:>10.4f} {b['build_s']:>10.4f} {speedup:>7.1f}x"
        )


if __name__ == "__main__":
    main()
