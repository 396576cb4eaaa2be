"""Throughput benchmark for the exchange colorer at increasing scale.

Colors random connected non-cubic subcubic graphs across a ladder of
sizes and densities, verifying every result, and prints a timing table
(coloring time, verification time, committed moves, restart attempts).

Usage: python scripts/scale_benchmark.py [--sizes 100,1000,10000] [--seed S]
"""
from __future__ import annotations

import argparse
import sys
import time

from spack.colorer import color_graph
from spack.gen import random_subcubic
from spack.verify import verify


def density_ladder(n: int) -> list[tuple[str, int]]:
    """Edge counts for sparse / medium / near-ceiling non-cubic graphs."""
    cap = 3 * n // 2
    if n % 2 == 0:
        cap -= 1
    cap = min(cap, n * (n - 1) // 2)
    return [
        ("sparse", max(n - 1, min(cap, n))),
        ("medium", min(cap, max(n - 1, round(1.25 * (n - 1))))),
        ("dense", cap),
    ]


def bench_one(n: int, m: int, seed: int) -> tuple[float, float, int, int]:
    g = random_subcubic(n, m, seed=seed, require_non_cubic=True)
    start = time.perf_counter()
    result = color_graph(g)
    t_color = time.perf_counter() - start
    start = time.perf_counter()
    report = verify(g, result.coloring)
    t_verify = time.perf_counter() - start
    if not report.ok:
        raise RuntimeError(f"invalid coloring at n={n} m={m} seed={seed}")
    moves = sum(
        len(comp.core_run.moves) for comp in result.components if comp.core_run is not None
    )
    attempts = max(
        (comp.core_run.attempts for comp in result.components if comp.core_run is not None),
        default=0,
    )
    return t_color, t_verify, moves, attempts


def run(sizes: list[int], seed: int) -> int:
    print(f"{'n':>7} {'m':>7} {'density':>8} {'color s':>9} {'verify s':>9} {'moves':>8} {'attempts':>8}")
    for n in sizes:
        for label, m in density_ladder(n):
            t_color, t_verify, moves, attempts = bench_one(n, m, seed)
            print(
                f"{n:>7} {m:>7} {label:>8} {t_color:>9.3f} {t_verify:>9.3f} "
                f"{moves:>8} {attempts:>8}"
            )
    return 0


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument(
        "--sizes",
        type=lambda s: [int(x) for x in s.split(",")],
        default=[100, 1_000, 10_000],
        help="comma-separated vertex counts",
    )
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    return run(args.sizes, args.seed)


if __name__ == "__main__":
    sys.exit(main())
