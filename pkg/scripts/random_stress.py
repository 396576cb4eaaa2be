"""Randomized soundness sweep for the exchange colorer.

Generates random connected non-cubic subcubic graphs, colors each one,
replays and audits every recorded move, and verifies the final coloring.
Any defect aborts with a reproducible (n, m, seed) triple.

Usage: python scripts/random_stress.py [--trials N] [--max-n N] [--seed S]
"""
from __future__ import annotations

import argparse
import collections
import random
import sys
import time

from spack.audit import audit_color_result
from spack.colorer import color_graph
from spack.gen import random_subcubic
from spack.verify import verify


def max_edges(n: int) -> int:
    """Largest edge count that still admits a non-cubic degree sequence."""
    cap = 3 * n // 2
    if n % 2 == 0:
        cap -= 1  # 3n/2 edges on even n would force 3-regularity
    return min(cap, n * (n - 1) // 2)


def run(trials: int, max_n: int, seed: int) -> int:
    rng = random.Random(seed)
    move_kinds: collections.Counter = collections.Counter()
    total_moves = 0
    started = time.perf_counter()
    for trial in range(trials):
        n = rng.randint(4, max_n)
        m = rng.randint(n - 1, max_edges(n))
        g = random_subcubic(n, m, seed=seed * 1_000_003 + trial, require_non_cubic=True)
        try:
            result = color_graph(g)
            audit_color_result(g, result)
        except Exception:
            print(f"FAILED at trial {trial}: n={n} m={m} seed={seed * 1_000_003 + trial}")
            raise
        report = verify(g, result.coloring)
        if not report.ok:
            print(f"BAD COLORING at trial {trial}: n={n} m={m}")
            return 1
        for comp in result.components:
            if comp.core_run is not None:
                total_moves += len(comp.core_run.moves)
                for rec in comp.core_run.moves:
                    move_kinds[type(rec.move).__name__] += 1
    elapsed = time.perf_counter() - started
    print(
        f"{trials} random graphs ok (max n {max_n}, seed {seed}) "
        f"in {elapsed:.1f}s, total moves={total_moves}"
    )
    for kind, count in sorted(move_kinds.items()):
        print(f"  {kind}: {count}")
    return 0


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--trials", type=int, default=2000)
    ap.add_argument("--max-n", type=int, default=60)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    return run(args.trials, args.max_n, args.seed)


if __name__ == "__main__":
    sys.exit(main())
