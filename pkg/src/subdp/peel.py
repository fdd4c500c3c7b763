"""Dense induced subgraphs: half-average-degree peeling and the maximum core."""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction

from subdp.graph import DirectedGraph, SubgraphSelection, induced_subgraph


@dataclass(frozen=True)
class PeelStep:
    node: int
    d_out: int
    avg_out: Fraction


@dataclass(frozen=True)
class PeelTrace:
    removed: tuple[PeelStep, ...]
    terminal: SubgraphSelection
    # True when peeling stalled on an arc-free graph, where every node
    # satisfies the removal rule and continuing would empty it.
    degenerate: bool = False


@dataclass(frozen=True)
class CoreResult:
    k: int
    subgraph: SubgraphSelection


def peel_half_average(g: DirectedGraph) -> PeelTrace:
    """Remove nodes with ``d_out(v) <= avg_out(current) / 2`` until none remain.

    The threshold is recomputed from the current graph after every removal
    and the lowest qualifying node id goes first. A graph in which every node
    qualifies is necessarily arc-free; peeling stops there and the trace is
    flagged degenerate instead of emptying the graph.
    """
    if g.n < 1:
        raise ValueError("cannot peel an empty graph")
    alive = [True] * g.n
    d_out = [g.d_out(v) for v in range(g.n)]
    n_alive = g.n
    n_arcs = g.num_arcs
    removed: list[PeelStep] = []
    degenerate = False
    while True:
        if n_arcs == 0:
            # every remaining node has d_out = 0 <= 0
            degenerate = True
            break
        # d_out(v) <= (n_arcs / n_alive) / 2, in integers
        victim = next(
            (v for v in range(g.n) if alive[v] and 2 * d_out[v] * n_alive <= n_arcs),
            None,
        )
        if victim is None:
            break
        removed.append(PeelStep(victim, d_out[victim], Fraction(n_arcs, n_alive)))
        alive[victim] = False
        n_alive -= 1
        for u in g.in_adj[victim]:
            if alive[u]:
                d_out[u] -= 1
                n_arcs -= 1
        n_arcs -= sum(1 for w in g.out_adj[victim] if alive[w])
    terminal = induced_subgraph(g, (v for v in range(g.n) if alive[v]))
    return PeelTrace(tuple(removed), terminal, degenerate)


def core_order(g: DirectedGraph) -> list[tuple[int, int]]:
    """Min-out-degree deletion order as ``(node, induced d_out at deletion)``."""
    d_out = [g.d_out(v) for v in range(g.n)]
    alive = [True] * g.n
    heap = [(d_out[v], v) for v in range(g.n)]
    heapq.heapify(heap)
    order = []
    while heap:
        d, v = heapq.heappop(heap)
        if not alive[v] or d != d_out[v]:
            continue
        alive[v] = False
        order.append((v, d))
        for u in g.in_adj[v]:
            if alive[u]:
                d_out[u] -= 1
                heapq.heappush(heap, (d_out[u], u))
    return order


def max_core(g: DirectedGraph) -> CoreResult:
    """Largest ``k`` such that some induced subgraph has min out-degree ``k``.

    The witness is the remaining graph at the first deletion step whose
    minimum degree reaches ``k``.
    """
    if g.n < 1:
        raise ValueError("cannot take the core of an empty graph")
    order = core_order(g)
    best_k, best_step = -1, 0
    for step, (_, d) in enumerate(order):
        if d > best_k:
            best_k, best_step = d, step
    witness = induced_subgraph(g, (v for v, _ in order[best_step:]))
    return CoreResult(best_k, witness)
