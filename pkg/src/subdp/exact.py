"""Valid colorings, exact domatic numbers and exact writing capacity.

A coloring of an induced subgraph is valid when every closed out-neighborhood
sees all colors. The writing capacity of ``G`` is the largest color count of a
valid coloring over nonempty induced subgraphs. Induced subgraphs suffice:
deleting an arc only shrinks neighborhoods, so it can never help validity.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import TYPE_CHECKING, Mapping

import numpy as np

from subdp.bounds import CapacityBracket, capacity_bracket
from subdp.graph import (
    DirectedGraph,
    GraphInputError,
    SubgraphSelection,
    closed_out_neighborhood,
    degree_stats,
    induced_subgraph,
)

if TYPE_CHECKING:
    from subdp.lll import ResampleLog

DEFAULT_EXACT_LIMIT = 16
BRUTE_FORCE_LIMIT = 12


class SizeLimitExceeded(RuntimeError):
    """The graph is too large for exhaustive search."""


@dataclass(frozen=True)
class Coloring:
    num_colors: int
    colors: Mapping[int, int]

    def __post_init__(self) -> None:
        if self.num_colors < 1:
            raise GraphInputError("a coloring needs at least one color")
        bad = {v: c for v, c in self.colors.items() if not 1 <= c <= self.num_colors}
        if bad:
            raise GraphInputError(f"colors outside [1, {self.num_colors}]: {bad}")

    @property
    def domain(self) -> frozenset[int]:
        return frozenset(self.colors)

    def __getitem__(self, v: int) -> int:
        return self.colors[v]

    def color_classes(self) -> dict[int, set[int]]:
        classes: dict[int, set[int]] = {c: set() for c in range(1, self.num_colors + 1)}
        for v, c in self.colors.items():
            classes[c].add(v)
        return classes

    @classmethod
    def uniform(cls, nodes, num_colors: int = 1, color: int = 1) -> Coloring:
        return cls(num_colors, {v: color for v in nodes})


@dataclass(frozen=True)
class CapacityReport:
    value: int
    witness_subgraph: SubgraphSelection
    witness_coloring: Coloring
    bracket: CapacityBracket
    exact: bool
    # approximate path only
    target: int | None = None
    below_target: bool = False
    resample_log: ResampleLog | None = None

    def __post_init__(self) -> None:
        if self.witness_coloring.num_colors != self.value:
            raise ValueError("witness coloring size differs from reported value")
        if self.value > self.bracket.upper or (self.exact and self.value < self.bracket.lower):
            raise ValueError(f"value {self.value} outside bracket [{self.bracket.lower}, {self.bracket.upper}]")


def check_domain(sel: SubgraphSelection, col: Coloring) -> None:
    if col.domain != sel.nodes:
        raise GraphInputError("coloring domain does not match the selected nodes")


def validate_coloring(sel: SubgraphSelection, col: Coloring) -> bool:
    check_domain(sel, col)
    palette = set(range(1, col.num_colors + 1))
    return all({col[v] for v in closed_out_neighborhood(sel, s)} == palette for s in sel.nodes)


def find_valid_coloring(sel: SubgraphSelection, num_colors: int) -> Coloring | None:
    """Backtracking search for a valid coloring of ``sel`` with exactly ``num_colors`` colors.

    Nodes are colored in order of descending induced out-degree. A branch is
    cut as soon as some closed neighborhood has fewer uncolored members than
    colors it still lacks. Colors are introduced in increasing order, which
    removes palette permutations from the search.
    """
    ell = num_colors
    if ell < 1:
        return None
    if ell == 1:
        return Coloring.uniform(sel.nodes)
    if 1 + degree_stats(sel).min_out < ell:
        return None

    order = sorted(sel.nodes, key=lambda v: (-sel.d_out(v), v))
    # watchers[v]: nodes whose closed neighborhood contains v
    watchers = {v: (v, *sel.in_neighbors(v)) for v in sel.nodes}
    free = {s: 1 + sel.d_out(s) for s in sel.nodes}
    missing = {s: ell for s in sel.nodes}
    count = {s: [0] * (ell + 1) for s in sel.nodes}
    color: dict[int, int] = {}

    def assign(v: int, c: int) -> bool:
        ok = True
        for s in watchers[v]:
            free[s] -= 1
            cs = count[s]
            cs[c] += 1
            if cs[c] == 1:
                missing[s] -= 1
            if free[s] < missing[s]:
                ok = False
        return ok

    def unassign(v: int, c: int) -> None:
        for s in watchers[v]:
            free[s] += 1
            cs = count[s]
            cs[c] -= 1
            if cs[c] == 0:
                missing[s] += 1

    def search(i: int, used: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for c in range(1, min(ell, used + 1) + 1):
            color[v] = c
            if assign(v, c) and search(i + 1, max(used, c)):
                return True
            unassign(v, c)
        del color[v]
        return False

    if not search(0, 0):
        return None
    return Coloring(ell, dict(color))


def domatic_number(sel: SubgraphSelection) -> tuple[int, Coloring]:
    for ell in range(1 + degree_stats(sel).min_out, 0, -1):
        col = find_valid_coloring(sel, ell)
        if col is not None:
            return ell, col
    raise AssertionError("a one-color coloring is always valid")


def _core_nodes(g: DirectedGraph, k: int) -> list[int]:
    """Nodes of the induced subgraph left after deleting every node of out-degree < k."""
    alive = set(range(g.n))
    d_out = [g.d_out(v) for v in range(g.n)]
    stack = [v for v in range(g.n) if d_out[v] < k]
    while stack:
        v = stack.pop()
        if v not in alive:
            continue
        alive.discard(v)
        for u in g.in_adj[v]:
            if u in alive:
                d_out[u] -= 1
                if d_out[u] < k:
                    stack.append(u)
    return sorted(alive)


def exact_capacity(g: DirectedGraph, limit: int = DEFAULT_EXACT_LIMIT) -> CapacityReport:
    """Exact writing capacity with a witness subgraph and coloring.

    Targets are tried from the bracket's upper bound down; for each target the
    candidate subsets come from the ``(target - 1)``-core, largest first, and
    the first valid coloring found is optimal.
    """
    if g.n < 1:
        raise GraphInputError("capacity of an empty graph is undefined")
    if g.n > limit:
        raise SizeLimitExceeded(
            f"exact search is limited to {limit} nodes (graph has {g.n}); use the approximate path"
        )
    bracket = capacity_bracket(g)
    for ell in range(bracket.upper, 0, -1):
        core = _core_nodes(g, ell - 1)
        for size in range(len(core), ell - 1, -1):
            for subset in combinations(core, size):
                sel = induced_subgraph(g, subset)
                if 1 + degree_stats(sel).min_out < ell:
                    continue
                col = find_valid_coloring(sel, ell)
                if col is not None:
                    return CapacityReport(ell, sel, col, bracket, exact=True)
    raise AssertionError("a one-color coloring is always valid")


def brute_force_capacity(g: DirectedGraph, chunk: int = 1 << 16) -> int:
    """Exhaustive oracle: every nonempty subset, every coloring.

    Independent of the backtracking search: neighborhoods are read straight
    off the arc set and colorings are enumerated in vectorized blocks.
    """
    n = g.n
    if n > BRUTE_FORCE_LIMIT:
        raise SizeLimitExceeded(f"brute force is limited to {BRUTE_FORCE_LIMIT} nodes")
    if n < 1:
        raise GraphInputError("capacity of an empty graph is undefined")
    best = 1
    for mask in range(1, 1 << n):
        members = [v for v in range(n) if mask >> v & 1]
        pos = {v: i for i, v in enumerate(members)}
        nbhd = [
            [pos[s]] + [pos[t] for t in members if (s, t) in g.arcs]
            for s in members
        ]
        bound = min(len(nb) for nb in nbhd)
        for ell in range(bound, best, -1):
            if _any_valid(len(members), ell, nbhd, chunk):
                best = ell
                break
    return best


def _any_valid(k: int, ell: int, nbhd: list[list[int]], chunk: int) -> bool:
    total = ell**k
    powers = ell ** np.arange(k, dtype=np.int64)
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        cols = (idx[:, None] // powers[None, :]) % ell
        ok = np.ones(len(idx), dtype=bool)
        for nb in nbhd:
            seen = np.zeros((len(idx), ell), dtype=bool)
            for j in nb:
                seen[np.arange(len(idx)), cols[:, j]] = True
            ok &= seen.all(axis=1)
            if not ok.any():
                break
        if ok.any():
            return True
    return False
