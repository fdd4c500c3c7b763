"""Seeded random graph ensembles."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from subdp.graph import DirectedGraph, GraphInputError, build_bidirectional, build_graph


@dataclass(frozen=True)
class EnsembleConfig:
    """``n`` nodes and ``floor(alpha * n^2 / 2)`` undirected edges, capped at ``n(n-1)/2``."""

    n: int
    alpha: float
    seed: int = 0
    count: int = 1

    def __post_init__(self) -> None:
        if self.n < 1:
            raise GraphInputError("ensemble needs at least one node")
        if not 0 < self.alpha <= 1:
            raise GraphInputError(f"alpha must lie in (0, 1], got {self.alpha}")
        if self.count < 1:
            raise GraphInputError("count must be positive")

    @property
    def num_edges(self) -> int:
        return min(math.floor(self.alpha * self.n * self.n / 2), self.n * (self.n - 1) // 2)

    def seeds(self) -> list[int]:
        return [self.seed + i for i in range(self.count)]


def _all_pairs(n: int) -> np.ndarray:
    iu, ju = np.triu_indices(n, k=1)
    return np.stack([iu, ju], axis=1)


def gen_dense_bidirectional(cfg: EnsembleConfig, seed: int | None = None) -> DirectedGraph:
    """Uniform sample of ``cfg.num_edges`` distinct undirected pairs, both directions."""
    rng = np.random.default_rng(cfg.seed if seed is None else seed)
    pairs = _all_pairs(cfg.n)
    pick = rng.choice(len(pairs), size=cfg.num_edges, replace=False)
    return build_bidirectional(cfg.n, pairs[np.sort(pick)].tolist())


def gen_near_complete(n: int, removed: int | None = None, seed: int = 0) -> DirectedGraph:
    """``K_n`` minus ``removed`` random undirected edges (default ``ceil(n/2)``)."""
    if removed is None:
        removed = math.ceil(n / 2)
    pairs = _all_pairs(n)
    if not 0 <= removed <= len(pairs):
        raise GraphInputError(f"cannot remove {removed} of {len(pairs)} edges")
    rng = np.random.default_rng(seed)
    drop = np.zeros(len(pairs), dtype=bool)
    drop[rng.choice(len(pairs), size=removed, replace=False)] = True
    return build_bidirectional(n, pairs[~drop].tolist())


def gen_random_digraph(n: int, p: float, seed: int = 0) -> DirectedGraph:
    """Each ordered pair ``(u, v)``, ``u != v``, is an arc with probability ``p``."""
    rng = np.random.default_rng(seed)
    keep = rng.random((n, n)) < p
    np.fill_diagonal(keep, False)
    return build_graph(n, np.argwhere(keep).tolist())


def gen_random_bidirectional(n: int, p: float, seed: int = 0) -> DirectedGraph:
    """Erdős–Rényi ``G(n, p)`` with both directions per edge."""
    rng = np.random.default_rng(seed)
    pairs = _all_pairs(n)
    return build_bidirectional(n, pairs[rng.random(len(pairs)) < p].tolist())
