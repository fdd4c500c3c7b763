"""Randomized valid colorings by local-lemma resampling.

The bad event at a node is that its closed out-neighborhood misses a color.
It depends only on the colors inside that neighborhood, so a violated node is
repaired by redrawing exactly those colors.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from subdp.bounds import capacity_bracket, lll_color_count, total_max_degree
from subdp.exact import CapacityReport, Coloring, check_domain
from subdp.graph import DirectedGraph, GraphInputError, SubgraphSelection
from subdp.peel import max_core

DEFAULT_RETRIES = 8


@dataclass
class ResampleLog:
    seed: int | None
    rounds: int = 0
    succeeded: bool = False
    violated_history: list[tuple[int, int]] = field(default_factory=list)


def _rng(seed) -> np.random.Generator:
    return seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)


def random_coloring(sel: SubgraphSelection, num_colors: int, seed=None) -> Coloring:
    """Independent uniform colors, drawn in ascending node order."""
    if num_colors < 1:
        raise GraphInputError("need at least one color")
    nodes = sel.sorted_nodes()
    draws = _rng(seed).integers(1, num_colors + 1, size=len(nodes))
    return Coloring(num_colors, dict(zip(nodes, draws.tolist())))


def find_violations(sel: SubgraphSelection, col: Coloring) -> frozenset[int]:
    check_domain(sel, col)
    ell = col.num_colors
    return frozenset(
        s for s in sel.nodes if len({col[s], *(col[t] for t in sel.out_neighbors(s))}) < ell
    )


def moser_tardos(
    sel: SubgraphSelection,
    num_colors: int,
    seed=None,
    max_rounds: int | None = None,
    record_history: bool = True,
    on_resample: Callable[[int, dict[int, int]], None] | None = None,
) -> tuple[Coloring | None, ResampleLog]:
    """Resample the neighborhood of the lowest violated node until none is left.

    The starting coloring is exactly ``random_coloring(sel, num_colors, seed)``.
    Returns ``(coloring, log)``; the coloring is None when ``max_rounds``
    resamplings did not reach a valid coloring. ``on_resample`` receives the
    repaired node and a copy of the full coloring after each resampling.
    """
    ell = num_colors
    if ell < 1:
        raise GraphInputError("need at least one color")
    if max_rounds is None:
        max_rounds = 10 * len(sel) * ell
    if max_rounds < 1:
        raise GraphInputError("max_rounds must be positive")
    log = ResampleLog(seed=seed if isinstance(seed, (int, np.integer)) else None)
    rng = _rng(seed)

    nodes = sel.sorted_nodes()
    color = dict(zip(nodes, rng.integers(1, ell + 1, size=len(nodes)).tolist()))
    nbhd = {s: (s, *sel.out_neighbors(s)) for s in nodes}
    watchers = {v: (v, *sel.in_neighbors(v)) for v in nodes}
    # count[s][c]: members of N(s) with color c; missing[s]: colors absent from N(s)
    count = {s: [0] * (ell + 1) for s in nodes}
    for s in nodes:
        cs = count[s]
        for t in nbhd[s]:
            cs[color[t]] += 1
    missing = {s: sum(1 for c in range(1, ell + 1) if count[s][c] == 0) for s in nodes}
    violated = {s for s in nodes if missing[s]}

    def recolor(v: int, new: int) -> None:
        old = color[v]
        if old == new:
            return
        color[v] = new
        for s in watchers[v]:
            cs = count[s]
            cs[old] -= 1
            if cs[old] == 0:
                missing[s] += 1
                violated.add(s)
            cs[new] += 1
            if cs[new] == 1:
                missing[s] -= 1
                if missing[s] == 0:
                    violated.discard(s)

    while violated and log.rounds < max_rounds:
        v = min(violated)
        if record_history:
            log.violated_history.append((log.rounds, v))
        targets = nbhd[v]
        for t, c in zip(sorted(targets), rng.integers(1, ell + 1, size=len(targets)).tolist()):
            recolor(t, c)
        log.rounds += 1
        if on_resample is not None:
            on_resample(v, dict(color))

    if violated:
        return None, log
    log.succeeded = True
    return Coloring(ell, color), log


def attempt_seed(seed: int, num_colors: int, attempt: int) -> int:
    """Deterministic per-attempt seed derived from the caller's seed."""
    return int(np.random.SeedSequence([seed, num_colors, attempt]).generate_state(1)[0])


def approx_capacity(
    g: DirectedGraph,
    seed: int = 0,
    retries: int = DEFAULT_RETRIES,
    max_rounds: int | None = None,
) -> CapacityReport:
    """Two-stage approximation: max core, then resampling at the LLL color count.

    The target is ``floor((1 + eta) / (1 + ln 3 + ln 2 + 3 ln D))`` with ``eta``
    the core index and ``D`` the max out- plus max in-degree. Each color count
    gets one run plus ``retries`` reseeded runs; if all fail the count drops
    by one and the report is flagged ``below_target``.
    """
    if g.n < 1:
        raise GraphInputError("capacity of an empty graph is undefined")
    core = max_core(g)
    sel = core.subgraph
    target = lll_color_count(core.k, total_max_degree(g))
    bracket = capacity_bracket(g)

    ell = target
    while True:
        rounds = max_rounds if max_rounds is not None else 10 * len(sel) * ell
        for attempt in range(1 + retries):
            col, log = moser_tardos(sel, ell, attempt_seed(seed, ell, attempt), rounds, record_history=False)
            if col is not None:
                return CapacityReport(
                    value=ell,
                    witness_subgraph=sel,
                    witness_coloring=col,
                    bracket=bracket,
                    exact=False,
                    target=target,
                    below_target=ell < target,
                    resample_log=log,
                )
        if ell == 1:
            raise AssertionError("one-color resampling cannot fail")
        ell -= 1
