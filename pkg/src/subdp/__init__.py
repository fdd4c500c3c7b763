"""Writing capacity of memory devices with restricted state transitions."""

from subdp.bounds import CapacityBracket, capacity_bracket
from subdp.codec import Codec, build_codec, decode_state, encode_step, simulate
from subdp.exact import (
    CapacityReport,
    Coloring,
    SizeLimitExceeded,
    brute_force_capacity,
    domatic_number,
    exact_capacity,
    validate_coloring,
)
from subdp.graph import (
    DirectedGraph,
    GraphInputError,
    SubgraphSelection,
    build_graph,
    induced_subgraph,
)
from subdp.lll import approx_capacity, moser_tardos
from subdp.peel import max_core, peel_half_average

__all__ = [
    "CapacityBracket",
    "CapacityReport",
    "Codec",
    "Coloring",
    "DirectedGraph",
    "GraphInputError",
    "SizeLimitExceeded",
    "SubgraphSelection",
    "approx_capacity",
    "brute_force_capacity",
    "build_codec",
    "build_graph",
    "capacity_bracket",
    "decode_state",
    "domatic_number",
    "encode_step",
    "exact_capacity",
    "induced_subgraph",
    "max_core",
    "moser_tardos",
    "peel_half_average",
    "simulate",
    "validate_coloring",
]
