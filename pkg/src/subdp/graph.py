"""Immutable directed graphs and induced-subgraph selections.

Nodes are dense integer ids ``0..n-1``. A self-transition is always allowed
for a memory state, so self-arcs carry no information and are rejected.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from fractions import Fraction
from itertools import combinations
from typing import Iterable, NamedTuple, Sequence


class GraphInputError(ValueError):
    """Malformed graph, selection, or coloring input."""


@dataclass(frozen=True)
class DirectedGraph:
    n: int
    arcs: frozenset[tuple[int, int]]
    out_adj: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)
    in_adj: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)

    @property
    def num_arcs(self) -> int:
        return len(self.arcs)

    @property
    def nodes(self) -> range:
        return range(self.n)

    def d_out(self, v: int) -> int:
        return len(self.out_adj[v])

    def d_in(self, v: int) -> int:
        return len(self.in_adj[v])

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    def sorted_arcs(self) -> list[tuple[int, int]]:
        return sorted(self.arcs)


def build_graph(n: int, arcs: Iterable[Sequence[int]]) -> DirectedGraph:
    """Build a graph on ``n`` nodes, dropping duplicate arcs."""
    if n < 0:
        raise GraphInputError(f"node count must be non-negative, got {n}")
    seen: set[tuple[int, int]] = set()
    for arc in arcs:
        u, v = (int(x) for x in arc)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphInputError(f"arc ({u}, {v}) has an endpoint outside [0, {n - 1}]")
        if u == v:
            raise GraphInputError(f"self-arc ({u}, {v}) is not allowed")
        seen.add((u, v))
    out_lists: list[list[int]] = [[] for _ in range(n)]
    in_lists: list[list[int]] = [[] for _ in range(n)]
    for u, v in seen:
        out_lists[u].append(v)
        in_lists[v].append(u)
    return DirectedGraph(
        n=n,
        arcs=frozenset(seen),
        out_adj=tuple(tuple(sorted(a)) for a in out_lists),
        in_adj=tuple(tuple(sorted(a)) for a in in_lists),
    )


def build_bidirectional(n: int, edges: Iterable[Sequence[int]]) -> DirectedGraph:
    """Build a graph carrying both directions of every undirected edge."""
    arcs = []
    for u, v in edges:
        arcs.append((u, v))
        arcs.append((v, u))
    return build_graph(n, arcs)


@dataclass(frozen=True)
class SubgraphSelection:
    """Induced subgraph of ``parent`` on ``nodes``."""

    parent: DirectedGraph
    nodes: frozenset[int]

    def __post_init__(self) -> None:
        if not self.nodes:
            raise GraphInputError("subgraph selection must be nonempty")
        bad = [v for v in self.nodes if not 0 <= v < self.parent.n]
        if bad:
            raise GraphInputError(f"nodes {sorted(bad)} are not in the parent graph")

    def __contains__(self, v: object) -> bool:
        return v in self.nodes

    def __len__(self) -> int:
        return len(self.nodes)

    def sorted_nodes(self) -> list[int]:
        return sorted(self.nodes)

    @cached_property
    def _out(self) -> dict[int, tuple[int, ...]]:
        return {v: tuple(w for w in self.parent.out_adj[v] if w in self.nodes) for v in self.nodes}

    @cached_property
    def _in(self) -> dict[int, tuple[int, ...]]:
        return {v: tuple(w for w in self.parent.in_adj[v] if w in self.nodes) for v in self.nodes}

    def out_neighbors(self, v: int) -> tuple[int, ...]:
        return self._out[v]

    def in_neighbors(self, v: int) -> tuple[int, ...]:
        return self._in[v]

    def d_out(self, v: int) -> int:
        return len(self.out_neighbors(v))

    def d_in(self, v: int) -> int:
        return len(self.in_neighbors(v))

    def arcs(self) -> list[tuple[int, int]]:
        return [(u, v) for u in self.sorted_nodes() for v in self.out_neighbors(u)]

    def is_full(self) -> bool:
        return len(self.nodes) == self.parent.n

    def to_graph(self) -> tuple[DirectedGraph, list[int]]:
        """Relabel to a standalone graph; also returns new-id -> old-id."""
        order = self.sorted_nodes()
        index = {v: i for i, v in enumerate(order)}
        return build_graph(len(order), [(index[u], index[v]) for u, v in self.arcs()]), order


def induced_subgraph(g: DirectedGraph, nodes: Iterable[int]) -> SubgraphSelection:
    return SubgraphSelection(g, frozenset(int(v) for v in nodes))


def full_selection(g: DirectedGraph) -> SubgraphSelection:
    return SubgraphSelection(g, frozenset(range(g.n)))


def avg_out_degree(g: DirectedGraph | SubgraphSelection) -> Fraction:
    """Average out-degree |E|/|V| as an exact fraction."""
    if isinstance(g, SubgraphSelection):
        return Fraction(sum(g.d_out(v) for v in g.nodes), len(g.nodes))
    if g.n < 1:
        raise GraphInputError("average degree of an empty graph is undefined")
    return Fraction(g.num_arcs, g.n)


def closed_out_neighborhood(sel: SubgraphSelection, v: int) -> frozenset[int]:
    if v not in sel.nodes:
        raise GraphInputError(f"node {v} is not in the selection")
    return frozenset((v, *sel.out_neighbors(v)))


def is_bidirectional(g: DirectedGraph) -> bool:
    return all((v, u) in g.arcs for u, v in g.arcs)


class DegreeStats(NamedTuple):
    min_out: int
    max_out: int
    min_in: int
    max_in: int


def degree_stats(g: DirectedGraph | SubgraphSelection) -> DegreeStats:
    if isinstance(g, SubgraphSelection):
        nodes = g.nodes
    else:
        if g.n < 1:
            raise GraphInputError("degree statistics of an empty graph are undefined")
        nodes = range(g.n)
    outs = [g.d_out(v) for v in nodes]
    ins = [g.d_in(v) for v in nodes]
    return DegreeStats(min(outs), max(outs), min(ins), max(ins))


# Named graphs used throughout the tests and bundled assets.


def complete_graph(n: int) -> DirectedGraph:
    return build_bidirectional(n, combinations(range(n), 2))


def hypercube(dim: int) -> DirectedGraph:
    """Bidirectional hypercube; node id is the integer value of its bit label."""
    n = 1 << dim
    return build_bidirectional(n, [(v, v ^ (1 << b)) for v in range(n) for b in range(dim) if v < v ^ (1 << b)])


def petersen_graph() -> DirectedGraph:
    """Outer 5-cycle on 0..4, spokes i -- i+5, inner pentagram on 5..9."""
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_bidirectional(10, outer + spokes + inner)


def directed_cycle(n: int) -> DirectedGraph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def bidirectional_cycle(n: int) -> DirectedGraph:
    return build_bidirectional(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> DirectedGraph:
    """Bidirectional star with center 0."""
    return build_bidirectional(leaves + 1, [(0, i) for i in range(1, leaves + 1)])
