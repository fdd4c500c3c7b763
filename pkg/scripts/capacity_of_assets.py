"""Print the capacity bracket, exact capacity and resampling estimate for every bundled graph."""

from __future__ import annotations

import argparse
import time

from subdp.bounds import capacity_bracket
from subdp.exact import exact_capacity
from subdp.fileio import asset_manifest, load_asset
from subdp.lll import approx_capacity


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    print(f"{'graph':<12} {'n':>3} {'lower':>5} {'upper':>5} {'exact':>5} {'approx':>6} {'secs':>7}")
    for name in sorted(asset_manifest()):
        g = load_asset(name)
        b = capacity_bracket(g)
        t0 = time.perf_counter()
        rep = exact_capacity(g)
        secs = time.perf_counter() - t0
        approx = approx_capacity(g, seed=args.seed)
        print(f"{name:<12} {g.n:>3} {b.lower:>5} {b.upper:>5} {rep.value:>5} {approx.value:>6} {secs:>7.3f}")


if __name__ == "__main__":
    main()
