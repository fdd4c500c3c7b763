"""Asymptotic trend benchmarks for dense and near-complete graph sequences.

Dense sequences (``alpha * n^2`` arcs) are scored by the approximation's
color count normalized as ``ell * ln n / n``; near-complete sequences by the
clique-forcing lower bound over ``n``.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from subdp.bounds import turan_clique_lower_bound
from subdp.ensembles import EnsembleConfig, gen_dense_bidirectional, gen_near_complete
from subdp.lll import approx_capacity


@dataclass(frozen=True)
class BenchRow:
    n: int
    mode: str
    values: tuple[int, ...]
    below_target: int = 0

    @property
    def mean(self) -> float:
        return sum(self.values) / len(self.values)

    @property
    def statistic(self) -> float:
        if self.mode == "dense":
            return self.mean * math.log(self.n) / self.n
        return self.mean / self.n

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "mode": self.mode,
            "values": list(self.values),
            "mean": self.mean,
            "statistic": self.statistic,
            "below_target": self.below_target,
        }


def _dense_point(args: tuple[int, float, int]) -> tuple[int, bool]:
    n, alpha, seed = args
    g = gen_dense_bidirectional(EnsembleConfig(n, alpha, seed))
    report = approx_capacity(g, seed=seed)
    return report.value, report.below_target


def _near_complete_point(args: tuple[int, int | None, int]) -> tuple[int, bool]:
    n, removed, seed = args
    return turan_clique_lower_bound(gen_near_complete(n, removed, seed)), False


def bench_asymptotics(
    n_list: list[int],
    seeds: int,
    mode: str = "dense",
    alpha: float = 0.25,
    removed: int | None = None,
    jobs: int = 1,
) -> list[BenchRow]:
    """One row per ``n``; per-seed results are kept in seed order whatever ``jobs`` is.

    ``removed`` applies to ``near-complete`` mode (default ``ceil(n/2)``; 0 gives ``K_n``).
    """
    if mode == "dense":
        point, extra = _dense_point, alpha
    elif mode == "near-complete":
        point, extra = _near_complete_point, removed
    else:
        raise ValueError(f"unknown bench mode {mode!r}")

    tasks = [(n, extra, s) for n in n_list for s in range(seeds)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(point, tasks))
    else:
        results = [point(t) for t in tasks]

    rows = []
    for i, n in enumerate(n_list):
        chunk = results[i * seeds : (i + 1) * seeds]
        rows.append(
            BenchRow(
                n=n,
                mode=mode,
                values=tuple(v for v, _ in chunk),
                below_target=sum(flag for _, flag in chunk),
            )
        )
    return rows


def format_table(rows: list[BenchRow]) -> str:
    label = "ell*ln(n)/n" if rows and rows[0].mode == "dense" else "ell/n"
    out = [f"{'n':>6} {'mean_ell':>10} {label:>12}"]
    for r in rows:
        out.append(f"{r.n:>6} {r.mean:>10.3f} {r.statistic:>12.6f}")
    return "\n".join(out)
