"""Independent reference implementations the tests check the package against.

Nothing here reuses solver code: distances come from a Floyd-Warshall
matrix and colorability from a plain backtracking search that assigns
vertices in id order with no ordering heuristics, bitmasks or pruning.
"""
from __future__ import annotations

import math
from functools import lru_cache
from pathlib import Path

from spack.graph import Graph
from spack.graphio import parse_graph6

DATA_DIR = Path(__file__).parent / "data"
CORPUS_FILE = DATA_DIR / "connected_subcubic.g6"

# Connected subcubic graphs per vertex count, cross-checked against the
# graph atlas (n <= 7) and the known 3-regular counts 1 / 2 / 5 for
# n = 4 / 6 / 8 when the corpus file was generated.
CORPUS_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 10, 6: 29, 7: 64, 8: 194, 9: 531}


def distance_matrix(g: Graph) -> list[list[float]]:
    """All-pairs distances by Floyd-Warshall; unreachable pairs get inf."""
    dist = [[math.inf] * g.n for _ in range(g.n)]
    for v in range(g.n):
        dist[v][v] = 0.0
    for u, v in g.edges():
        dist[u][v] = dist[v][u] = 1.0
    for k in range(g.n):
        row_k = dist[k]
        for i in range(g.n):
            through = dist[i][k]
            if through == math.inf:
                continue
            row_i = dist[i]
            for j in range(g.n):
                if through + row_k[j] < row_i[j]:
                    row_i[j] = through + row_k[j]
    return dist


def naive_packing_assignment(g: Graph, radii: tuple[int, ...]) -> list[int] | None:
    """One S-packing coloring as a vertex -> class-index list, or None.

    Vertices are assigned in id order; a class c is legal for v when no
    earlier vertex of class c sits within distance radii[c].
    """
    dist = distance_matrix(g)
    assign = [-1] * g.n

    def legal(v: int, c: int) -> bool:
        return all(
            assign[u] != c or dist[u][v] > radii[c] for u in range(v)
        )

    def place(v: int) -> bool:
        if v == g.n:
            return True
        for c in range(len(radii)):
            if legal(v, c):
                assign[v] = c
                if place(v + 1):
                    return True
                assign[v] = -1
        return False

    return list(assign) if place(0) else None


def naive_packing_colorable(g: Graph, radii: tuple[int, ...]) -> bool:
    return naive_packing_assignment(g, radii) is not None


def naive_chi_rho(g: Graph, k_max: int = 8) -> int | None:
    """Least k with a (1, 2, ..., k)-packing coloring, or None past k_max."""
    for k in range(1, k_max + 1):
        if naive_packing_colorable(g, tuple(range(1, k + 1))):
            return k
    return None


def violating_pairs(
    g: Graph, radius: int, vertices: frozenset[int]
) -> set[tuple[int, int]]:
    """Same-class pairs at distance <= radius, by the distance matrix."""
    dist = distance_matrix(g)
    ordered = sorted(vertices)
    return {
        (u, v)
        for i, u in enumerate(ordered)
        for v in ordered[i + 1 :]
        if dist[u][v] <= radius
    }


@lru_cache(maxsize=None)
def _corpus_graphs() -> tuple[Graph, ...]:
    return tuple(
        parse_graph6(line) for line in CORPUS_FILE.read_text().split()
    )


def load_corpus(max_n: int = 9, include_cubic: bool = True) -> list[Graph]:
    """Every connected subcubic graph with 1 <= n <= max_n, from disk."""
    out = []
    for g in _corpus_graphs():
        if g.n > max_n:
            continue
        if not include_cubic and g.n > 0 and all(g.degree(v) == 3 for v in g.vertices()):
            continue
        out.append(g)
    return out
