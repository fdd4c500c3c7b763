"""Closed-form upper and lower bounds on the writing capacity."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from subdp.graph import (
    DirectedGraph,
    GraphInputError,
    SubgraphSelection,
    degree_stats,
    is_bidirectional,
)
from subdp.peel import max_core, peel_half_average

# 1 + ln 3 + ln 2, the constant part of the LLL denominator
LLL_CONSTANT = 1.0 + math.log(3.0) + math.log(2.0)


@dataclass(frozen=True)
class CapacityBracket:
    lower: int
    upper: int
    lower_witness: str
    upper_witness: str
    components: dict[str, int] = field(default_factory=dict, compare=False)

    @property
    def closed(self) -> bool:
        return self.lower == self.upper


def degree_upper_bound(g: DirectedGraph) -> int:
    return 1 + degree_stats(g).max_out


def kcore_upper_bound(g: DirectedGraph) -> int:
    return 1 + max_core(g).k


def total_max_degree(g: DirectedGraph) -> int:
    """Max out-degree plus max in-degree of the whole graph."""
    stats = degree_stats(g)
    return stats.max_out + stats.max_in


def lll_color_count(min_out_degree: int, total_degree: int) -> int:
    """``floor((min_out_degree + 1) / (1 + ln 3 + ln 2 + 3 ln total_degree))``, at least 1.

    ``total_degree`` is max out-degree plus max in-degree of the host graph.
    An arc-free host (``total_degree == 0``) gives 1.
    """
    if total_degree <= 0:
        return 1
    denom = LLL_CONSTANT + 3.0 * math.log(total_degree)
    return max(1, math.floor((min_out_degree + 1) / denom))


def lll_condition(g: DirectedGraph, sel: SubgraphSelection, num_colors: int) -> float:
    """``e * p * (D + 1)`` for uniform random ``num_colors``-colorings of ``sel``.

    ``p = (max_out + 1) exp(-(min_out(sel) + 1) / num_colors)`` bounds each
    bad-event probability and ``D = 2 * total_degree^2`` bounds the number of
    dependent events; a value ``<= 1`` guarantees a valid coloring exists.
    """
    stats = degree_stats(g)
    total = stats.max_out + stats.max_in
    p = (stats.max_out + 1) * math.exp(-(degree_stats(sel).min_out + 1) / num_colors)
    return math.e * p * (2 * total * total + 1)


def lll_lower_bound(g: DirectedGraph, sel: SubgraphSelection) -> int:
    if sel.parent is not g and sel.parent != g:
        raise GraphInputError("selection does not belong to this graph")
    return lll_color_count(degree_stats(sel).min_out, total_max_degree(g))


def turan_clique_lower_bound(g: DirectedGraph) -> int:
    """Largest ``r`` whose Turán threshold the undirected edge count exceeds.

    Exceeding ``n^2 (r-2) / (2 (r-1))`` undirected edges forces a ``K_r``,
    and ``C(K_r) = r`` carries over to the host graph.
    """
    if not is_bidirectional(g):
        raise GraphInputError("Turán bound needs a bidirectional graph")
    m = g.num_arcs // 2
    n = g.n
    r = 1
    # 2m(r-1) > n^2 (r-2) is monotone in r and fails for r > n
    while r + 1 <= n and 2 * m * r > n * n * (r - 1):
        r += 1
    return r


def capacity_bracket(g: DirectedGraph) -> CapacityBracket:
    if g.n < 1:
        raise GraphInputError("capacity of an empty graph is undefined")
    lows = {
        "trivial": 1,
        "lll-peel": lll_lower_bound(g, peel_half_average(g).terminal),
        "lll-core": lll_lower_bound(g, max_core(g).subgraph),
    }
    if is_bidirectional(g):
        lows["turan"] = turan_clique_lower_bound(g)
    ups = {"degree": degree_upper_bound(g), "kcore": kcore_upper_bound(g)}

    lower_witness = max(lows, key=lambda k: lows[k])  # first maximal entry wins ties
    upper_witness = min(ups, key=lambda k: ups[k])
    components = {f"lower:{k}": v for k, v in lows.items()}
    components.update({f"upper:{k}": v for k, v in ups.items()})
    return CapacityBracket(
        lower=lows[lower_witness],
        upper=ups[upper_witness],
        lower_witness=lower_witness,
        upper_witness=upper_witness,
        components=components,
    )
