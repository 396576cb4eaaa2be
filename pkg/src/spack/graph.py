"""Immutable simple undirected graphs with dense 0-based vertex ids.

Adjacency lists are kept sorted so that every traversal in the package is
deterministic.  Unreachable distances are reported as ``INFINITY`` (a real
``math.inf``), never as a large magic number.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

INFINITY = math.inf


class GraphError(ValueError):
    """Base class for malformed graph input."""


class SelfLoopError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class VertexOutOfRangeError(GraphError):
    pass


class DegreeExceededError(GraphError):
    """Some vertex has degree larger than three."""


class EmptyGraphError(GraphError):
    pass


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0 .. n-1``."""

    n: int
    adj: tuple[tuple[int, ...], ...]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    @property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once as (u, v) with u < v, in sorted order."""
        for u in range(self.n):
            for v in self.adj[u]:
                if u < v:
                    yield (u, v)

    def vertices(self) -> range:
        return range(self.n)


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list, rejecting malformed input.

    Raises SelfLoopError, DuplicateEdgeError or VertexOutOfRangeError.
    """
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    adj: list[list[int]] = [[] for _ in range(n)]
    seen: set[tuple[int, int]] = set()
    for u, v in edges:
        if not (0 <= u < n) or not (0 <= v < n):
            raise VertexOutOfRangeError(f"edge ({u}, {v}) outside 0..{n - 1}")
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise DuplicateEdgeError(f"duplicate edge {key}")
        seen.add(key)
        adj[u].append(v)
        adj[v].append(u)
    return Graph(n, tuple(tuple(sorted(nbrs)) for nbrs in adj))


def assert_subcubic(g: Graph) -> None:
    """Raise DegreeExceededError unless every degree is at most 3."""
    for v in range(g.n):
        d = g.degree(v)
        if d > 3:
            raise DegreeExceededError(f"vertex {v} has degree {d} > 3")


def is_cubic(g: Graph) -> bool:
    """True when the graph is 3-regular (vacuously false when empty)."""
    return g.n > 0 and all(g.degree(v) == 3 for v in range(g.n))


def min_degree(g: Graph) -> int:
    if g.n == 0:
        raise EmptyGraphError("minimum degree of the empty graph is undefined")
    return min(g.degree(v) for v in range(g.n))


def distances_from(g: Graph, source: int) -> list[int | float]:
    """BFS distances from ``source``; unreachable vertices get INFINITY."""
    if not (0 <= source < g.n):
        raise VertexOutOfRangeError(f"source {source} outside 0..{g.n - 1}")
    dist: list[int | float] = [INFINITY] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in g.adj[u]:
            if dist[v] is INFINITY:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def components(g: Graph) -> list[frozenset[int]]:
    """Connected components, ordered by their smallest vertex."""
    seen = [False] * g.n
    out: list[frozenset[int]] = []
    for root in range(g.n):
        if seen[root]:
            continue
        comp = [root]
        seen[root] = True
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in g.adj[u]:
                if not seen[v]:
                    seen[v] = True
                    comp.append(v)
                    queue.append(v)
        out.append(frozenset(comp))
    return out


def square(g: Graph) -> Graph:
    """The square graph: edges join vertices at distance 1 or 2 in g."""
    edges = []
    for u in range(g.n):
        reach: set[int] = set()
        for v in g.adj[u]:
            reach.add(v)
            reach.update(g.adj[v])
        reach.discard(u)
        for v in reach:
            if u < v:
                edges.append((u, v))
    return build_graph(g.n, edges)


@dataclass(frozen=True)
class InducedSubgraph:
    """An induced subgraph together with both vertex-id translations."""

    graph: Graph
    to_sub: dict[int, int]
    to_host: tuple[int, ...]


def induced(g: Graph, vertices: Iterable[int]) -> InducedSubgraph:
    """Induce on a vertex subset; ids are re-densified in ascending order."""
    order = sorted(set(vertices))
    for v in order:
        if not (0 <= v < g.n):
            raise VertexOutOfRangeError(f"vertex {v} outside 0..{g.n - 1}")
    to_sub = {v: i for i, v in enumerate(order)}
    edges = [
        (to_sub[u], to_sub[v])
        for u in order
        for v in g.adj[u]
        if u < v and v in to_sub
    ]
    return InducedSubgraph(build_graph(len(order), edges), to_sub, tuple(order))


@dataclass(frozen=True)
class SubdivisionMap:
    """Vertex bookkeeping for a subdivision: originals keep their ids."""

    original_count: int
    edge_vertex: dict[tuple[int, int], int]


def subdivide(g: Graph) -> tuple[Graph, SubdivisionMap]:
    """Replace every edge by a length-2 path through a fresh vertex.

    Original vertices keep their ids; the vertex splitting edge (u, v)
    (with u < v) gets id ``n + k`` where k is the rank of the edge in
    sorted order.  All pairwise distances exactly double.
    """
    edge_vertex: dict[tuple[int, int], int] = {}
    edges = []
    next_id = g.n
    for u, v in g.edges():
        edge_vertex[(u, v)] = next_id
        edges.append((u, next_id))
        edges.append((next_id, v))
        next_id += 1
    return build_graph(next_id, edges), SubdivisionMap(g.n, edge_vertex)


@dataclass(frozen=True)
class Bipartition:
    part1: frozenset[int]
    part2: frozenset[int]


@dataclass(frozen=True)
class OddCycle:
    """A chordless odd cycle, listed in traversal order."""

    vertices: tuple[int, ...]


def bipartition_or_odd_cycle(g: Graph) -> Bipartition | OddCycle:
    """2-color by BFS, or return a chordless odd cycle certificate.

    Components are processed by ascending root id and each root lands in
    part 1, so the bipartition is deterministic.
    """
    color: list[int] = [0] * g.n  # 0 = unvisited, 1 / 2 = parts
    parent: list[int] = [-1] * g.n
    for root in range(g.n):
        if color[root]:
            continue
        color[root] = 1
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in g.adj[u]:
                if not color[v]:
                    color[v] = 3 - color[u]
                    parent[v] = u
                    queue.append(v)
                elif color[v] == color[u]:
                    cycle = _cycle_through(parent, u, v)
                    return OddCycle(tuple(_shorten_to_chordless(g, cycle)))
    part1 = frozenset(v for v in range(g.n) if color[v] == 1)
    part2 = frozenset(v for v in range(g.n) if color[v] == 2)
    return Bipartition(part1, part2)


def odd_cycle_from_root(g: Graph, root: int) -> OddCycle | None:
    """Chordless odd cycle found by BFS 2-coloring from one root, if any.

    Only the component containing ``root`` is explored.  Different roots
    can surface different cycles of the same non-bipartite graph.
    """
    color: dict[int, int] = {root: 1}
    parent: list[int] = [-1] * g.n
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for v in g.adj[u]:
            if v not in color:
                color[v] = 3 - color[u]
                parent[v] = u
                queue.append(v)
            elif color[v] == color[u]:
                cycle = _cycle_through(parent, u, v)
                return OddCycle(tuple(_shorten_to_chordless(g, cycle)))
    return None


def _cycle_through(parent: list[int], u: int, v: int) -> list[int]:
    """Close the cycle formed by BFS-tree paths to u and v plus edge (u, v)."""
    ancestors_u = [u]
    seen = {u}
    x = u
    while parent[x] != -1:
        x = parent[x]
        ancestors_u.append(x)
        seen.add(x)
    path_v = [v]
    y = v
    while y not in seen:
        y = parent[y]
        path_v.append(y)
    lca = y
    cycle = ancestors_u[: ancestors_u.index(lca) + 1]  # u .. lca
    cycle.extend(reversed(path_v[:-1]))  # back down to v, excluding lca
    return cycle


def _shorten_to_chordless(g: Graph, cycle: list[int]) -> list[int]:
    """Shortcut across chords until the (still odd) cycle is chordless."""
    while True:
        k = len(cycle)
        pos = {v: i for i, v in enumerate(cycle)}
        chord = None
        for i, u in enumerate(cycle):
            for v in g.adj[u]:
                j = pos.get(v)
                if j is None or j <= i:
                    continue
                if j - i == 1 or (i == 0 and j == k - 1):
                    continue  # a cycle edge, not a chord
                chord = (i, j)
                break
            if chord:
                break
        if chord is None:
            return cycle
        i, j = chord
        inner = cycle[i : j + 1]
        outer = cycle[j:] + cycle[: i + 1]
        cycle = inner if len(inner) % 2 == 1 else outer
