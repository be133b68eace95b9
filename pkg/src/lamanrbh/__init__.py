"""Laman graph recognition with red-black hierarchy certificates."""

from ._jit import JIT_ENABLED
from .builder import ForestState, ShrinkingForest, build_hierarchy, find_crossing_edges
from .errors import (
    BadProbability,
    DuplicateEdge,
    EdgeNotLive,
    EndpointsSplit,
    IndexMismatch,
    InvalidPartition,
    LamanError,
    LeafRuleViolation,
    MalformedHierarchy,
    OutOfDomain,
    ParseError,
    SchemaError,
    SelfLoop,
    TooLarge,
    VertexOutOfRange,
    WrongEdgeCount,
)
from .graph import (
    Graph,
    brute_force_laman,
    complete_graph,
    henneberg_generate,
    henneberg_with_partition,
    induced_edge_count,
    make_graph,
)
from .hierarchy import Hierarchy, OpCounters
from .laman import LamanVerdict, Reason, is_laman, is_laman_with_partition
from .partition import (
    BLACK,
    RED,
    ForestPartition,
    Infeasible,
    black_components,
    partition_two_forests,
    validate_partition,
)
from .verifier import Rule, RuleViolation, certify_laman, verify_hierarchy

__version__ = "0.1.0"
