"""End-to-end (1,1,2,2)-packing coloring of subcubic graphs.

Pipeline per connected component: 3-regular components are handed to the
exact oracle (when enabled); otherwise degree-<=1 vertices are peeled
off, the remaining core is split by the potential-increasing exchange
search, the outside of the split is 2-colored in the square graph, and
the peeled vertices are re-attached greedily into the radius-1 classes.

Class labels are always ``1_a``/``1_b`` (radius 1) and ``2_a``/``2_b``
(radius 2); classes may be empty.  Components are colored independently
and merged label-wise, which is safe because vertices in different
components are at infinite distance.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass, field

from .exact import Status, decide
from .exchange import (
    BipartitionState,
    MoveRecord,
    SquareBipartition,
    StuckError,
    initial_state,
    run_to_fixpoint,
)
from .graph import Graph, GraphError, assert_subcubic, components, induced, is_cubic
from .verify import ColorClass, ColoringError, InvalidInputColoringError, PackingColoring
from .weights import compute_weights

SEQUENCE_1122 = (1, 1, 2, 2)
CLASS_LABELS = ("1_a", "1_b", "2_a", "2_b")
CLASS_RADII = (1, 1, 2, 2)


class CubicComponentError(GraphError):
    """A 3-regular component could not be colored.

    ``reason`` is one of ``fallback-disabled`` (oracle fallback not
    requested), ``oracle-unsat`` (the component genuinely admits no such
    coloring, e.g. the Petersen graph), or ``oracle-timeout`` (node
    budget or size cap exceeded).
    """

    def __init__(self, component: tuple[int, ...], reason: str):
        super().__init__(f"3-regular component {list(component)}: {reason}")
        self.component = component
        self.reason = reason


@dataclass(frozen=True)
class ColorOptions:
    """Knobs for ``color_graph``.

    ``fallback_exact`` lets 3-regular components go to the exact oracle;
    ``fallback_max_n`` caps the component size for any oracle call;
    ``exact_budget`` caps its backtracking nodes.  ``max_moves``
    overrides the exchange-step budget and ``validate`` toggles the
    per-commit recount and fixpoint structure checks.
    ``restart_attempts`` bounds how many seeded greedy starts the
    exchange search may try when a run ends on an odd outside cycle
    that admits no strict-increase swap.
    """

    fallback_exact: bool = False
    exact_budget: int = 10_000_000
    fallback_max_n: int = 30
    max_moves: int | None = None
    validate: bool = True
    restart_attempts: int = 12


@dataclass(frozen=True)
class PeelStep:
    """One peeled vertex and its unique remaining neighbor (if any)."""

    vertex: int
    neighbor: int | None


@dataclass
class CoreRun:
    """Audit record of one exchange-search run on a min-degree-2 core."""

    coloring: PackingColoring
    weights: tuple[int, ...]
    initial: BipartitionState
    final: BipartitionState
    square: SquareBipartition
    moves: tuple[MoveRecord, ...]
    attempts: int = 1


@dataclass
class ComponentRun:
    """What happened to one connected component (vertices in host ids).

    ``core_run`` is expressed in the core's own dense id space;
    ``core_vertices[i]`` is the host id of core vertex ``i``.
    """

    vertices: tuple[int, ...]
    core_vertices: tuple[int, ...] = ()
    peel_trace: tuple[PeelStep, ...] = ()
    core_run: CoreRun | None = None
    used_exact: bool = False


@dataclass
class ColorResult:
    coloring: PackingColoring
    components: tuple[ComponentRun, ...] = field(default_factory=tuple)


def peel(g: Graph) -> tuple[tuple[int, ...], tuple[PeelStep, ...]]:
    """Iteratively strip vertices of current degree <= 1, lowest id first.

    Returns the remaining core (ascending ids, possibly empty) and the
    removal trace; each step records the removed vertex's unique
    neighbor among the vertices still present, or None.
    """
    deg = [g.degree(v) for v in range(g.n)]
    removed = [False] * g.n
    ready = [v for v in range(g.n) if deg[v] <= 1]
    heapq.heapify(ready)
    trace: list[PeelStep] = []
    while ready:
        v = heapq.heappop(ready)
        if removed[v]:
            continue
        removed[v] = True
        neighbor = None
        for u in g.adj[v]:
            if not removed[u]:
                neighbor = u
                deg[u] -= 1
                if deg[u] <= 1:
                    heapq.heappush(ready, u)
        trace.append(PeelStep(v, neighbor))
    core = tuple(v for v in range(g.n) if not removed[v])
    return core, tuple(trace)


def extend_coloring(
    coloring: PackingColoring, trace: tuple[PeelStep, ...]
) -> PackingColoring:
    """Replay a peel trace in reverse, growing the radius-1 classes.

    Each re-attached vertex joins the first radius-1 class unless its
    recorded neighbor already sits there, in which case it joins the
    second.  Re-attachment adds leaves only, so distances between
    already-colored vertices are unchanged and every class stays valid.
    """
    ones = [i for i, c in enumerate(coloring.classes) if c.radius == 1]
    if len(ones) < 2:
        raise InvalidInputColoringError("need two radius-1 classes to extend")
    first, second = ones[0], ones[1]
    sets = [set(c.vertices) for c in coloring.classes]
    for step in reversed(trace):
        if step.neighbor is not None and step.neighbor in sets[first]:
            sets[second].add(step.vertex)
        else:
            sets[first].add(step.vertex)
    classes = tuple(
        ColorClass(c.label, c.radius, frozenset(s))
        for c, s in zip(coloring.classes, sets)
    )
    return PackingColoring(coloring.n, classes)


def color_core(
    g: Graph,
    w: list[int] | tuple[int, ...],
    *,
    max_moves: int | None = None,
    validate: bool = True,
    restart_attempts: int = 12,
) -> CoreRun:
    """Color a connected, non-3-regular graph of minimum degree 2.

    Runs the exchange search to a fixpoint and reads off the classes:
    the two sides become the radius-1 classes, the two parts of the
    outside square bipartition the radius-2 classes.  A run can end on
    an odd outside cycle with no strict-increase swap; the search then
    restarts from a seeded greedy state (deterministic seeds 1, 2, ...),
    and only after exhausting the attempts does StuckError escape.
    """
    w = list(w)
    last_stuck: StuckError | None = None
    for attempt in range(max(1, restart_attempts)):
        start = initial_state(g, w, seed=None if attempt == 0 else attempt)
        try:
            fixed = run_to_fixpoint(g, w, start, max_moves=max_moves, validate=validate)
        except StuckError as stuck:
            last_stuck = stuck
            continue
        s = fixed.state
        classes = (
            ColorClass("1_a", 1, s.s1),
            ColorClass("1_b", 1, s.s2),
            ColorClass("2_a", 2, fixed.square_bipartition.h1),
            ColorClass("2_b", 2, fixed.square_bipartition.h2),
        )
        coloring = PackingColoring(g.n, classes)
        return CoreRun(
            coloring,
            tuple(w),
            start,
            s,
            fixed.square_bipartition,
            tuple(fixed.moves),
            attempts=attempt + 1,
        )
    raise last_stuck


def _empty_class_sets() -> list[set[int]]:
    return [set() for _ in CLASS_LABELS]


def _sets_from_coloring(coloring: PackingColoring) -> list[set[int]]:
    """Order the classes of a (1,1,2,2)-shaped coloring as 1_a,1_b,2_a,2_b."""
    by_radius: dict[int, list[ColorClass]] = {1: [], 2: []}
    for c in coloring.classes:
        if c.radius not in by_radius:
            raise ColoringError(f"unexpected radius {c.radius}")
        by_radius[c.radius].append(c)
    if len(by_radius[1]) != 2 or len(by_radius[2]) != 2:
        raise ColoringError("expected exactly two radius-1 and two radius-2 classes")
    ordered = by_radius[1] + by_radius[2]
    return [set(c.vertices) for c in ordered]


def _oracle_component(g: Graph, options: ColorOptions, host: tuple[int, ...]):
    """Exact-oracle attempt on a whole component; returns class sets."""
    if g.n > options.fallback_max_n:
        raise CubicComponentError(host, "oracle-timeout")
    outcome = decide(g, SEQUENCE_1122, budget=options.exact_budget)
    if outcome.status is Status.SAT:
        return _sets_from_coloring(outcome.coloring)
    if outcome.status is Status.UNSAT:
        raise CubicComponentError(host, "oracle-unsat")
    raise CubicComponentError(host, "oracle-timeout")


def _color_component(
    g: Graph, options: ColorOptions, host: tuple[int, ...]
) -> tuple[list[set[int]], ComponentRun]:
    """Color one connected component given in its own dense id space."""
    run = ComponentRun(vertices=host)
    if is_cubic(g):
        if not options.fallback_exact:
            raise CubicComponentError(host, "fallback-disabled")
        run.used_exact = True
        return _oracle_component(g, options, host), run

    core_vertices, trace = peel(g)
    run.core_vertices = tuple(host[v] for v in core_vertices)
    run.peel_trace = tuple(PeelStep(host[s.vertex], None if s.neighbor is None else host[s.neighbor]) for s in trace)
    if not core_vertices:
        sets = _empty_class_sets()
    else:
        sub = induced(g, core_vertices)
        w = compute_weights(sub.graph)
        try:
            core_run = color_core(
                sub.graph,
                w,
                max_moves=options.max_moves,
                validate=options.validate,
                restart_attempts=options.restart_attempts,
            )
        except StuckError:
            # Restarts exhausted without reaching a clean fixpoint; fall
            # back to the exact oracle on the whole component so the
            # caller still gets a coloring, else let the error surface.
            if g.n <= options.fallback_max_n:
                run.used_exact = True
                return _oracle_component(g, options, host), run
            raise
        run.core_run = core_run
        sets = _empty_class_sets()
        for idx, c in enumerate(core_run.coloring.classes):
            sets[idx] = {core_vertices[v] for v in c.vertices}

    partial = PackingColoring(
        g.n,
        tuple(
            ColorClass(label, radius, frozenset(s))
            for label, radius, s in zip(CLASS_LABELS, CLASS_RADII, sets)
        ),
    )
    full = extend_coloring(partial, trace)
    return [set(c.vertices) for c in full.classes], run


def color_graph(g: Graph, options: ColorOptions | None = None) -> ColorResult:
    """Produce a (1,1,2,2)-packing coloring of a subcubic graph.

    Works component by component; 3-regular components need the oracle
    fallback enabled (CubicComponentError otherwise, also raised for
    oracle-refuting components such as the Petersen graph).  The result
    always carries the four classes 1_a, 1_b, 2_a, 2_b in this order.
    """
    options = options or ColorOptions()
    assert_subcubic(g)
    merged = _empty_class_sets()
    runs: list[ComponentRun] = []
    for comp in components(g):
        sub = induced(g, comp)
        sets, run = _color_component(sub.graph, options, sub.to_host)
        for target, local in zip(merged, sets):
            target.update(sub.to_host[v] for v in local)
        runs.append(run)
    classes = tuple(
        ColorClass(label, radius, frozenset(s))
        for label, radius, s in zip(CLASS_LABELS, CLASS_RADII, merged)
    )
    return ColorResult(PackingColoring(g.n, classes), tuple(runs))
