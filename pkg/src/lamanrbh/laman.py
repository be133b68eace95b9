"""Laman recognition: edge count, two-forest partition, then a hierarchy build."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .builder import build_hierarchy
from .errors import InvalidPartition, LeafRuleViolation, OutOfDomain
from .graph import Graph
from .hierarchy import Hierarchy, OpCounters
from .partition import ForestPartition, Infeasible, partition_two_forests, validate_partition
from .verifier import verify_hierarchy


class Reason(str, enum.Enum):
    OK = "Ok"
    WRONG_EDGE_COUNT = "WrongEdgeCount"
    NOT_PARTITIONABLE = "NotPartitionable"
    LEAF_RULE_VIOLATION = "LeafRuleViolation"


@dataclass
class LamanVerdict:
    is_laman: bool
    reason: Reason
    certificate: Hierarchy | None = None
    witness: tuple[int, ...] | int | None = None
    counters: OpCounters = field(default_factory=OpCounters)
    partition: ForestPartition | None = None

    def line(self) -> str:
        return "LAMAN" if self.is_laman else f"NOT_LAMAN {self.reason.value}"


class CertificateMismatch(AssertionError):
    """Debug re-verification rejected a certificate the builder produced."""


def _run(g: Graph, p: ForestPartition, verify: bool) -> LamanVerdict:
    try:
        h, counters = build_hierarchy(g, p, validate=False)
    except LeafRuleViolation as exc:
        return LamanVerdict(False, Reason.LEAF_RULE_VIOLATION, witness=exc.vertices, partition=p)
    if verify:
        bad = verify_hierarchy(g, h)
        if bad:
            raise CertificateMismatch("; ".join(str(v) for v in bad[:5]))
    return LamanVerdict(True, Reason.OK, certificate=h, counters=counters, partition=p)


def is_laman(g: Graph, verify: bool = False) -> LamanVerdict:
    """Decide whether ``g`` is a Laman graph.

    With ``verify`` the certificate is re-checked by the independent
    verifier before returning.
    """
    if g.n < 2:
        raise OutOfDomain(f"Laman recognition needs n >= 2, got {g.n}")
    if g.m != 2 * g.n - 3:
        return LamanVerdict(False, Reason.WRONG_EDGE_COUNT)
    p = partition_two_forests(g)
    if isinstance(p, Infeasible):
        return LamanVerdict(False, Reason.NOT_PARTITIONABLE, witness=p.witness)
    return _run(g, p, verify)


def is_laman_with_partition(g: Graph, p: ForestPartition, verify: bool = False) -> LamanVerdict:
    if g.n < 2:
        raise OutOfDomain(f"Laman recognition needs n >= 2, got {g.n}")
    if g.m != 2 * g.n - 3:
        return LamanVerdict(False, Reason.WRONG_EDGE_COUNT)
    if not validate_partition(g, p):
        raise InvalidPartition("partition is not a red spanning tree plus a two-tree black forest")
    return _run(g, p, verify)
