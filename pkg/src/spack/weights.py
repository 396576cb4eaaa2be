"""Distance-to-light-vertex weights and the search potential.

A vertex is *light* when its degree is at most 2.  The weight of x is
``1 + dist(x, nearest light vertex)``, computed by one multi-source BFS.
Two facts drive the exchange search:

* adjacent weights differ by at most one, and
* a degree-3 vertex always satisfies ``w(x) = 1 + min over neighbors``.

The potential of a bipartition compares edge count first and total
weight second, so any move that adds an edge, or keeps edges and adds
weight, is strict progress.
"""
from __future__ import annotations

from collections import deque
from typing import Iterable, NamedTuple

from .graph import EmptyGraphError, Graph, GraphError


class CubicGraphError(GraphError):
    """No vertex of degree <= 2 exists, so weights are undefined."""


class DisconnectedError(GraphError):
    pass


class Potential(NamedTuple):
    """Lexicographic objective: edges inside the bipartition, then weight."""

    edges: int
    weight: int


def compute_weights(g: Graph) -> list[int]:
    """Per-vertex weights on a connected graph with a light vertex.

    Raises EmptyGraphError, CubicGraphError (3-regular input) or
    DisconnectedError.
    """
    if g.n == 0:
        raise EmptyGraphError("weights are undefined on the empty graph")
    sources = [v for v in range(g.n) if g.degree(v) <= 2]
    if not sources:
        raise CubicGraphError("graph is 3-regular; no light vertex to anchor weights")
    dist = [-1] * g.n
    queue = deque()
    for s in sources:
        dist[s] = 0
        queue.append(s)
    while queue:
        u = queue.popleft()
        for v in g.adj[u]:
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                queue.append(v)
    if any(d < 0 for d in dist):
        raise DisconnectedError("graph is not connected")
    return [d + 1 for d in dist]


def check_weight_smoothness(g: Graph, w: list[int]) -> list[tuple[int, int]]:
    """Edges whose endpoint weights differ by more than one (should be none)."""
    return [(u, v) for u, v in g.edges() if abs(w[u] - w[v]) > 1]


def check_weight_recurrence(g: Graph, w: list[int]) -> list[int]:
    """Degree-3 vertices violating ``w(x) = 1 + min neighbor weight``."""
    return [
        v
        for v in range(g.n)
        if g.degree(v) == 3 and w[v] != 1 + min(w[u] for u in g.adj[v])
    ]


def subgraph_weight(w: list[int], vertices: Iterable[int]) -> int:
    return sum(w[v] for v in vertices)


def potential(g: Graph, w: list[int], s1: Iterable[int], s2: Iterable[int]) -> Potential:
    """Potential of the induced subgraph on s1 | s2, computed from scratch.

    The two parts must be disjoint; edges inside a part are counted too
    (callers that maintain independence will never produce any).
    """
    a, b = set(s1), set(s2)
    if a & b:
        raise GraphError(f"parts overlap on {sorted(a & b)}")
    inside = a | b
    edge_total = sum(1 for u, v in g.edges() if u in inside and v in inside)
    return Potential(edge_total, subgraph_weight(w, inside))
