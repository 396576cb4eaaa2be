"""Deterministic generators for test-family graphs.

Fixed families (cycles, paths, prisms, the Petersen graph) plus seeded
random subcubic trees and connected subcubic graphs.  Random outputs
are pure functions of (parameters, seed).
"""
from __future__ import annotations

import random

from .graph import Graph, GraphError, build_graph, is_cubic


class InfeasibleParamsError(GraphError):
    pass


def cycle(n: int) -> Graph:
    if n < 3:
        raise InfeasibleParamsError(f"cycle needs n >= 3, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise InfeasibleParamsError(f"path needs n >= 1, got {n}")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def petersen() -> Graph:
    """Outer 5-cycle 0..4, inner 5-cycle 5..9 with step 2, plus spokes."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, 5 + i) for i in range(5)]
    return build_graph(10, edges)


def prism(n: int) -> Graph:
    """The Cartesian product C_n x K_2: two n-cycles joined by rungs."""
    if n < 3:
        raise InfeasibleParamsError(f"prism needs n >= 3, got {n}")
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(n + i, n + (i + 1) % n) for i in range(n)]
    edges += [(i, n + i) for i in range(n)]
    return build_graph(2 * n, edges)


def _tree_edges(n: int, rng: random.Random) -> list[tuple[int, int]]:
    """Random tree with maximum degree 3 by degree-capped attachment.

    ``avail`` holds attachment candidates with lazy deletion: saturated
    vertices are dropped when drawn, keeping each draw uniform over the
    currently attachable vertices.
    """
    deg = [0] * n
    edges = []
    avail = [0]
    for v in range(1, n):
        while True:
            i = rng.randrange(len(avail))
            u = avail[i]
            if deg[u] <= 2:
                break
            avail[i] = avail[-1]
            avail.pop()
        edges.append((u, v))
        deg[u] += 1
        deg[v] += 1
        avail.append(v)
    return edges


def random_tree(n: int, seed: int | None = None) -> Graph:
    if n < 1:
        raise InfeasibleParamsError(f"random_tree needs n >= 1, got {n}")
    return build_graph(n, _tree_edges(n, random.Random(seed)))


def random_subcubic(
    n: int,
    target_m: int,
    seed: int | None = None,
    require_non_cubic: bool = False,
) -> Graph:
    """Connected subcubic graph: a random spanning tree plus uniformly
    random extra edges between degree-<=2 vertices.

    Stops at ``target_m`` edges or when no further edge fits (whichever
    comes first).  With ``require_non_cubic`` a 3-regular outcome is
    resampled; that can only occur when target_m equals 3n/2 exactly.
    """
    if n < 1:
        raise InfeasibleParamsError(f"random_subcubic needs n >= 1, got {n}")
    if target_m < n - 1:
        raise InfeasibleParamsError(
            f"target_m={target_m} cannot keep {n} vertices connected"
        )
    if target_m > min(3 * n // 2, n * (n - 1) // 2):
        raise InfeasibleParamsError(f"target_m={target_m} exceeds the subcubic maximum")
    if require_non_cubic and n < 2:
        return build_graph(n, [])
    rng = random.Random(seed)
    for _ in range(64):
        g = _fill_edges(n, target_m, rng)
        if not (require_non_cubic and is_cubic(g)):
            return g
    raise InfeasibleParamsError(
        f"could not sample a non-3-regular graph with n={n}, m={target_m}"
    )


def _fill_edges(n: int, target_m: int, rng: random.Random) -> Graph:
    edges = _tree_edges(n, rng)
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    low = {v for v in range(n) if len(adj[v]) <= 2}
    while len(edges) < target_m and len(low) >= 2:
        pool = list(low)
        added = False
        for _ in range(64):
            u, v = rng.choice(pool), rng.choice(pool)
            if u != v and u not in adj[v]:
                added = True
                break
        if not added:
            # Rejection failed; fall back to exact enumeration so that
            # saturation is detected reliably.
            pairs = [
                (u, v)
                for i, u in enumerate(pool)
                for v in pool[i + 1 :]
                if v not in adj[u]
            ]
            if not pairs:
                break
            u, v = pairs[rng.randrange(len(pairs))]
        edges.append((u, v))
        adj[u].add(v)
        adj[v].add(u)
        for x in (u, v):
            if len(adj[x]) > 2:
                low.discard(x)
    return build_graph(n, edges)


FAMILIES = ("cycle", "path", "petersen", "prism", "random-tree", "random-subcubic")


def generate(
    family: str,
    n: int | None = None,
    m: int | None = None,
    seed: int | None = None,
    require_non_cubic: bool = False,
) -> Graph:
    """Dispatch by family name (see FAMILIES); n/m where applicable."""
    if family == "petersen":
        return petersen()
    if n is None:
        raise InfeasibleParamsError(f"family {family!r} needs n")
    if family == "cycle":
        return cycle(n)
    if family == "path":
        return path(n)
    if family == "prism":
        return prism(n)
    if family == "random-tree":
        return random_tree(n, seed)
    if family == "random-subcubic":
        if m is None:
            m = min(3 * n // 2, max(n - 1, round(1.25 * (n - 1))))
        return random_subcubic(n, m, seed, require_non_cubic)
    raise InfeasibleParamsError(f"unknown family {family!r}")
