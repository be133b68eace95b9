"""Timing and counter reports."""

from __future__ import annotations

import csv
import hashlib
import io
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .builder import build_hierarchy
from .graph import Graph, henneberg_generate, henneberg_with_partition
from .hierarchy import OpCounters
from .io import graph_text
from .laman import LamanVerdict, Reason, is_laman_with_partition
from .partition import Infeasible, partition_two_forests
from .verifier import verify_hierarchy

BENCH_COLUMNS = ("n", "seed", "partition_us", "build_us", "edge_tests", "relabels", "nodes")


@dataclass
class RunReport:
    verdict: LamanVerdict
    n: int
    m: int
    checksum: str
    timings_us: dict[str, int] = field(default_factory=dict)

    @property
    def counters(self) -> OpCounters:
        return self.verdict.counters

    def lines(self) -> list[str]:
        v = self.verdict
        out = [v.line(), f"reason {v.reason.value}", f"input n={self.n} m={self.m} sha256={self.checksum}"]
        if v.witness is not None:
            w = v.witness if isinstance(v.witness, tuple) else (v.witness,)
            out.append("witness " + " ".join(str(x) for x in w))
        for key, value in v.counters.as_dict().items():
            out.append(f"counter {key} {value}")
        if v.certificate is not None:
            out.append(f"counter nodes {v.certificate.n_nodes}")
        for stage, us in self.timings_us.items():
            out.append(f"time_us {stage} {us}")
        return out


def _us(t0: float) -> int:
    return int(round((time.perf_counter() - t0) * 1e6))


def digest(g: Graph) -> str:
    return hashlib.sha256(graph_text(g).encode()).hexdigest()[:16]


def run_check(g: Graph, verify: bool = False) -> RunReport:
    """The recognition pipeline with each executed stage timed."""
    report = RunReport(LamanVerdict(False, Reason.WRONG_EDGE_COUNT), g.n, g.m, digest(g))
    if g.m != 2 * g.n - 3:
        return report
    t0 = time.perf_counter()
    p = partition_two_forests(g)
    report.timings_us["partition"] = _us(t0)
    if isinstance(p, Infeasible):
        report.verdict = LamanVerdict(False, Reason.NOT_PARTITIONABLE, witness=p.witness)
        return report
    t0 = time.perf_counter()
    report.verdict = is_laman_with_partition(g, p)
    report.timings_us["build"] = _us(t0)
    if verify and report.verdict.certificate is not None:
        t0 = time.perf_counter()
        bad = verify_hierarchy(g, report.verdict.certificate)
        report.timings_us["verify"] = _us(t0)
        if bad:
            raise AssertionError("certificate rejected: " + "; ".join(map(str, bad[:5])))
    return report


def warm_up() -> None:
    g, p = henneberg_with_partition(4, 0, 0.5)
    partition_two_forests(g)
    build_hierarchy(g, p)


def bench_row(n: int, seed: int, type2_prob: float = 0.5, partitioner: str = "augment", timing: bool = True):
    if partitioner == "henneberg":
        g, p = henneberg_with_partition(n, seed, type2_prob)
        partition_us = 0
    else:
        g = henneberg_generate(n, seed, type2_prob)
        t0 = time.perf_counter()
        p = partition_two_forests(g)
        partition_us = _us(t0)
    t0 = time.perf_counter()
    h, counters = build_hierarchy(g, p, validate=False)
    build_us = _us(t0)
    if not timing:
        partition_us = build_us = 0
    return (n, seed, partition_us, build_us, counters.edge_tests, counters.relabels, h.n_nodes)


def _row_job(args):
    warm_up()
    return bench_row(*args)


def bench_rows(sizes, seeds, type2_prob=0.5, partitioner="augment", timing=True, jobs=1) -> list[tuple]:
    cells = [(int(n), int(s), type2_prob, partitioner, timing) for n in sizes for s in seeds]
    if jobs > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_row_job, cells))
    if cells:
        warm_up()
    return [bench_row(*cell) for cell in cells]


def bench_csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(BENCH_COLUMNS)
    writer.writerows(rows)
    return buf.getvalue()
