"""Potential-increasing exchange search for a (1,1,2,2)-friendly bipartition.

The state splits the vertices of a connected, non-3-regular graph of
minimum degree 2 into two independent sets ``s1``/``s2`` plus an
``outside`` remainder.  Moves reshape the split while strictly
increasing the potential (edges inside s1|s2 first, then total weight),
so the search terminates.  At a fixpoint with no move left, the square
graph restricted to the outside is bipartite; its two parts become the
radius-2 color classes while s1/s2 become the radius-1 classes.

Every candidate move goes through checked application: independence and
a strict potential increase are validated before any commit, so a proof
edge case can only ever surface as a ``StuckError`` diagnostic, never as
a corrupt state.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterator, Union

from .graph import (
    Bipartition,
    Graph,
    OddCycle,
    bipartition_or_odd_cycle,
    build_graph,
    min_degree,
    odd_cycle_from_root,
)
from .weights import Potential, potential as potential_from_scratch


class ExchangeError(ValueError):
    pass


class MinDegreeError(ExchangeError):
    """The state machinery needs minimum degree 2; peel pendants first."""


class InvalidStateError(ExchangeError):
    pass


class InvalidMoveError(ExchangeError):
    pass


class MoveBudgetExceededError(ExchangeError):
    """The step budget ran out; this signals an implementation bug."""


class StuckError(ExchangeError):
    """An odd outside-square cycle exists but no validated swap was found."""

    def __init__(self, message: str, state: "BipartitionState", cycles: list[tuple[int, ...]]):
        super().__init__(message)
        self.state = state
        self.cycles = cycles


OUTSIDE = 0


@dataclass
class BipartitionState:
    """Mutable-by-copy partition of vertices into s1 / s2 / outside.

    ``nbr1[v]`` / ``nbr2[v]`` cache how many neighbors of v currently
    sit in each side; the cached potential always matches a recount.
    """

    side: list[int]  # 0 = outside, 1, 2
    nbr1: list[int]
    nbr2: list[int]
    potential: Potential

    @property
    def s1(self) -> frozenset[int]:
        return frozenset(v for v, s in enumerate(self.side) if s == 1)

    @property
    def s2(self) -> frozenset[int]:
        return frozenset(v for v, s in enumerate(self.side) if s == 2)

    @property
    def outside(self) -> frozenset[int]:
        return frozenset(v for v, s in enumerate(self.side) if s == OUTSIDE)

    def s_degree(self, v: int) -> int:
        """Number of neighbors of v inside s1 | s2."""
        return self.nbr1[v] + self.nbr2[v]

    def copy(self) -> "BipartitionState":
        return BipartitionState(
            list(self.side), list(self.nbr1), list(self.nbr2), self.potential
        )


@dataclass(frozen=True)
class Absorb:
    vertex: int
    side: int


@dataclass(frozen=True)
class Flip:
    """Vertex enters ``side``; its neighbors there are displaced across."""

    vertex: int
    side: int
    displaced: tuple[int, ...]


@dataclass(frozen=True)
class Deg3Exchange:
    """Swap ``leaving`` (in S) for ``entering`` (outside) near an
    isolated hub whose three neighbors are all outside."""

    hub: int
    entering: int
    leaving: int


@dataclass(frozen=True)
class SameSideExchange:
    """An outside vertex with three S-neighbors replaces its lone
    opposite-side neighbor."""

    entering: int
    leaving: int


@dataclass(frozen=True)
class CycleSwap:
    """Swap an odd outside-square cycle for its common S-neighbors."""

    cycle: tuple[int, ...]
    displaced: tuple[int, ...]
    side: int


@dataclass(frozen=True)
class PathSwap:
    """Swap a cycle segment onto one side for the S-neighbors it
    displaces.

    When ``cross`` names an endpoint of the path, that endpoint enters
    the opposite side instead; this resolves cycles closed by a genuine
    edge between the segment endpoints, which a single-side entry could
    never absorb."""

    path: tuple[int, ...]
    displaced: tuple[int, ...]
    side: int
    cross: int | None = None


Move = Union[Absorb, Flip, Deg3Exchange, SameSideExchange, CycleSwap, PathSwap]


@dataclass(frozen=True)
class MoveRecord:
    move: Move
    before: Potential
    after: Potential


@dataclass(frozen=True)
class SquareBipartition:
    """2-coloring of the outside vertices in the square graph."""

    h1: frozenset[int]
    h2: frozenset[int]


@dataclass
class FixpointResult:
    state: BipartitionState
    square_bipartition: SquareBipartition
    moves: list[MoveRecord]


def make_state(g: Graph, w: list[int], s1, s2) -> BipartitionState:
    """Assemble and validate a state from explicit side sets."""
    a, b = frozenset(s1), frozenset(s2)
    if a & b:
        raise InvalidStateError(f"sides overlap on {sorted(a & b)}")
    side = [OUTSIDE] * g.n
    for v in a:
        side[v] = 1
    for v in b:
        side[v] = 2
    for part in (a, b):
        for v in part:
            for u in g.adj[v]:
                if u in part:
                    raise InvalidStateError(f"side containing {v} is not independent ({u}-{v})")
    nbr1 = [0] * g.n
    nbr2 = [0] * g.n
    for v in range(g.n):
        for u in g.adj[v]:
            if side[u] == 1:
                nbr1[v] += 1
            elif side[u] == 2:
                nbr2[v] += 1
    return BipartitionState(side, nbr1, nbr2, potential_from_scratch(g, w, a, b))


def initial_state(g: Graph, w: list[int], seed: int | None = None) -> BipartitionState:
    """Greedy bipartition to start the exchange from.

    With ``seed=None`` vertices are placed by descending weight (ties by
    id), each landing on a side where it has no placed neighbor yet and
    preferring the side that yields more cross edges; vertices blocked on
    both sides start outside.  A seed shuffles the placement order and
    the side choice instead, giving a different deterministic start for
    restarting out of the rare fixpoint whose leftover odd cycle admits
    no strict-increase swap.
    """
    if min_degree(g) < 2:
        raise MinDegreeError("initial_state needs minimum degree 2")
    side = [OUTSIDE] * g.n
    placed1 = [0] * g.n  # per-vertex count of neighbors placed on side 1
    placed2 = [0] * g.n
    rng = None if seed is None else random.Random(seed)
    if rng is None:
        order = sorted(range(g.n), key=lambda v: (-w[v], v))
    else:
        order = list(range(g.n))
        rng.shuffle(order)
    for v in order:
        gain1 = placed2[v] if placed1[v] == 0 else -1
        gain2 = placed1[v] if placed2[v] == 0 else -1
        if gain1 < 0 and gain2 < 0:
            continue
        if rng is None:
            choice = 1 if gain1 >= gain2 else 2
        else:
            options = [s for s, gain in ((1, gain1), (2, gain2)) if gain >= 0]
            choice = rng.choice(options)
        side[v] = choice
        for u in g.adj[v]:
            if choice == 1:
                placed1[u] += 1
            else:
                placed2[u] += 1
    s1 = [v for v in range(g.n) if side[v] == 1]
    s2 = [v for v in range(g.n) if side[v] == 2]
    return make_state(g, w, s1, s2)


def _other(side: int) -> int:
    return 3 - side


def _move_plan(g: Graph, state: BipartitionState, move: Move) -> list[tuple[int, int]]:
    """Expand a move into (vertex, new side) assignments."""
    if isinstance(move, Absorb):
        return [(move.vertex, move.side)]
    if isinstance(move, Flip):
        plan = [(u, _other(move.side)) for u in move.displaced]
        plan.append((move.vertex, move.side))
        return plan
    if isinstance(move, Deg3Exchange):
        target = state.side[move.leaving]
        plan = []
        if state.side[move.hub] == target:
            if state.s_degree(move.hub) != 0:
                raise InvalidMoveError("hub is not isolated inside S")
            plan.append((move.hub, _other(target)))
        plan.append((move.leaving, OUTSIDE))
        plan.append((move.entering, target))
        return plan
    if isinstance(move, SameSideExchange):
        target = state.side[move.leaving]
        return [(move.leaving, OUTSIDE), (move.entering, target)]
    if isinstance(move, (CycleSwap, PathSwap)):
        entering = move.cycle if isinstance(move, CycleSwap) else move.path
        cross = move.cross if isinstance(move, PathSwap) else None
        plan = [(y, OUTSIDE) for y in move.displaced]
        plan.extend(
            (x, _other(move.side) if x == cross else move.side) for x in entering
        )
        return plan
    raise InvalidMoveError(f"unknown move {move!r}")


def _evaluate_plan(
    g: Graph, w: list[int], state: BipartitionState, plan: list[tuple[int, int]]
) -> tuple[Potential | None, str | None]:
    """Validate a plan; return (new potential, None) or (None, reason)."""
    targets = dict(plan)
    if len(targets) != len(plan):
        raise InvalidMoveError("plan assigns a vertex twice")
    side = state.side

    def final(v: int) -> int:
        return targets.get(v, side[v])

    for v, s in targets.items():
        if s != OUTSIDE:
            for u in g.adj[v]:
                if final(u) == s:
                    return None, f"vertices {v} and {u} would share side {s}"

    delta_e = 0
    delta_w = 0
    for v, s in targets.items():
        old = side[v]
        if (old != OUTSIDE) != (s != OUTSIDE):
            delta_w += w[v] if s != OUTSIDE else -w[v]
        for u in g.adj[v]:
            if u in targets and u < v:
                continue  # count mover-mover edges once
            u_old = side[u]
            u_new = final(u)
            before = old != OUTSIDE and u_old != OUTSIDE
            after = s != OUTSIDE and u_new != OUTSIDE
            delta_e += int(after) - int(before)
    new = Potential(state.potential.edges + delta_e, state.potential.weight + delta_w)
    if not new > state.potential:
        return None, f"potential {state.potential} -> {new} is not a strict increase"
    return new, None


def apply_move(g: Graph, w: list[int], state: BipartitionState, move: Move) -> BipartitionState:
    """Validated, copy-on-write application of a move.

    Raises InvalidMoveError when independence would break or the
    potential would not strictly increase.
    """
    plan = _move_plan(g, state, move)
    new_potential, reason = _evaluate_plan(g, w, state, plan)
    if new_potential is None:
        raise InvalidMoveError(f"{type(move).__name__} rejected: {reason}")
    out = state.copy()
    for v, s in plan:
        old = out.side[v]
        if old == s:
            continue
        out.side[v] = s
        for u in g.adj[v]:
            if old == 1:
                out.nbr1[u] -= 1
            elif old == 2:
                out.nbr2[u] -= 1
            if s == 1:
                out.nbr1[u] += 1
            elif s == 2:
                out.nbr2[u] += 1
    out.potential = new_potential
    return out


def _try_move(g, w, state, move) -> Move | None:
    plan = _move_plan(g, state, move)
    new_potential, _ = _evaluate_plan(g, w, state, plan)
    return move if new_potential is not None else None


def _find_absorb(g: Graph, state: BipartitionState) -> Absorb | None:
    for x in range(g.n):
        if state.side[x] != OUTSIDE:
            continue
        if state.nbr1[x] == 0:
            return Absorb(x, 1)
        if state.nbr2[x] == 0:
            return Absorb(x, 2)
    return None


def _find_flip(g: Graph, w: list[int], state: BipartitionState) -> Flip | None:
    nbr = (None, state.nbr1, state.nbr2)
    for x in range(g.n):
        if state.side[x] != OUTSIDE:
            continue
        for side in (1, 2):
            displaced = tuple(u for u in g.adj[x] if state.side[u] == side)
            if not displaced:
                continue
            other_counts = nbr[_other(side)]
            if all(other_counts[u] == 0 for u in displaced):
                mv = _try_move(g, w, state, Flip(x, side, displaced))
                if mv:
                    return mv
    return None


def _find_deg3_exchange(g: Graph, w: list[int], state: BipartitionState) -> Deg3Exchange | None:
    for z in range(g.n):
        if state.side[z] == OUTSIDE or g.degree(z) != 3 or state.s_degree(z) != 0:
            continue
        # all three neighbors of z are outside and z is isolated in S
        if any(state.side[u] != OUTSIDE for u in g.adj[z]):
            continue
        for x in g.adj[z]:
            if w[x] >= w[z]:
                continue
            for y in g.adj[x]:
                if state.side[y] == OUTSIDE or w[y] >= w[x]:
                    continue
                mv = _try_move(g, w, state, Deg3Exchange(z, x, y))
                if mv:
                    return mv
    return None


def _find_same_side_exchange(g: Graph, w: list[int], state: BipartitionState) -> SameSideExchange | None:
    for x in range(g.n):
        if state.side[x] != OUTSIDE or state.s_degree(x) != 3:
            continue
        if state.nbr1[x] == 3 or state.nbr2[x] == 3:
            continue  # absorbable, not exchangeable
        lone_side = 1 if state.nbr1[x] == 1 else 2
        x3 = next(u for u in g.adj[x] if state.side[u] == lone_side)
        if state.s_degree(x3) <= 1 or w[x3] < w[x]:
            mv = _try_move(g, w, state, SameSideExchange(x, x3))
            if mv:
                return mv
    return None


def square_outside(g: Graph, state: BipartitionState) -> tuple[Graph, tuple[int, ...]]:
    """The square graph induced on the outside vertices.

    Returns the re-densified graph plus the outside vertices in the
    ascending order matching its ids.  Two outside vertices are adjacent
    when their distance in the *full* graph is at most 2.
    """
    outside = sorted(v for v in range(g.n) if state.side[v] == OUTSIDE)
    index = {v: i for i, v in enumerate(outside)}
    edges = set()
    for x in outside:
        near = set(g.adj[x])
        for u in g.adj[x]:
            near.update(g.adj[u])
        near.discard(x)
        for y in near:
            j = index.get(y)
            if j is not None and index[x] < j:
                edges.add((index[x], j))
    return build_graph(len(outside), sorted(edges)), tuple(outside)


_CANDIDATE_CAP = 4096


def _swap_candidates_for_cycle(
    g: Graph, state: BipartitionState, cycle: tuple[int, ...]
) -> Iterator[Move]:
    """Candidate Cycle/Path swaps for one chordless odd outside cycle.

    Each candidate enters a contiguous arc of the cycle onto one side
    (optionally sending one endpoint to the opposite side) and displaces
    every S-neighbor the entrants would otherwise conflict with, so
    independence holds by construction.  Long arcs come first; the
    caller validates each candidate against the potential and applies
    the first strict increase.
    """
    k = len(cycle)

    def genuine(i: int, j: int) -> bool:
        return g.has_edge(cycle[i % k], cycle[j % k])

    def displaced_for(arc: tuple[int, ...], side: int, cross: int | None) -> tuple[int, ...]:
        out = set()
        for x in arc:
            target = _other(side) if x == cross else side
            out.update(u for u in g.adj[x] if state.side[u] == target)
        return tuple(sorted(out))

    seen: set[tuple[frozenset[int], int, int | None]] = set()
    for length in range(k, 1, -1):
        for start in range(k):
            idx = [(start + t) % k for t in range(length)]
            arc = tuple(cycle[i] for i in idx)
            # Consecutive entrants joined by a genuine graph edge can
            # only coexist when the pair straddles the two sides, i.e.
            # when one of them is the crossed endpoint.
            pairs = [(arc[t], arc[t + 1]) for t in range(length - 1) if genuine(idx[t], idx[t + 1])]
            if length == k and genuine(start - 1, start):
                pairs.append((arc[-1], arc[0]))

            for side in (1, 2):
                for cross in (None, arc[-1], arc[0]):
                    if any(cross not in pair for pair in pairs):
                        continue
                    key = (frozenset(arc), side, cross)
                    if key in seen:
                        continue
                    seen.add(key)
                    displaced = displaced_for(arc, side, cross)
                    if length == k and cross is None:
                        yield CycleSwap(cycle, displaced, side)
                    else:
                        yield PathSwap(arc, displaced, side, cross)


def _odd_cycles(sq: Graph, first: OddCycle | None) -> Iterator[tuple[int, ...]]:
    """Chordless odd cycles of the outside square graph, deduplicated.

    The certificate from the bipartiteness check comes first; BFS from
    every other root may surface alternatives worth trying before
    giving up.
    """
    seen: set[frozenset[int]] = set()
    if first is not None:
        seen.add(frozenset(first.vertices))
        yield first.vertices
    for root in range(sq.n):
        found = odd_cycle_from_root(sq, root)
        if found is None:
            continue
        key = frozenset(found.vertices)
        if key not in seen:
            seen.add(key)
            yield found.vertices


def _find_square_swap(
    g: Graph, w: list[int], state: BipartitionState
) -> tuple[Move | None, SquareBipartition | None, list[tuple[int, ...]]]:
    """Stage 5: bipartition the outside square or find a validated swap.

    Returns (move, bipartition, tried_cycles); exactly one of move and
    bipartition is set unless the search is stuck (both None).
    """
    sq, order = square_outside(g, state)
    result = bipartition_or_odd_cycle(sq)
    if isinstance(result, Bipartition):
        h1 = frozenset(order[i] for i in result.part1)
        h2 = frozenset(order[i] for i in result.part2)
        return None, SquareBipartition(h1, h2), []
    tried: list[tuple[int, ...]] = []
    for cycle_ids in _odd_cycles(sq, result):
        cycle = tuple(order[i] for i in cycle_ids)
        tried.append(cycle)
        candidates = _swap_candidates_for_cycle(g, state, cycle)
        for candidate in itertools.islice(candidates, _CANDIDATE_CAP):
            if _try_move(g, w, state, candidate):
                return candidate, None, tried
    return None, None, tried


def find_move(g: Graph, w: list[int], state: BipartitionState) -> Move | None:
    """First applicable move in the fixed scan order, already validated.

    Order: Absorb, Flip, Deg3Exchange, SameSideExchange, then cycle and
    path swaps on the outside square graph; each stage scans vertices in
    ascending id.  Returns None at a fixpoint (and also when only an
    unresolvable odd cycle remains; ``run_to_fixpoint`` tells the two
    apart and raises StuckError for the latter).
    """
    mv = (
        _find_absorb(g, state)
        or _find_flip(g, w, state)
        or _find_deg3_exchange(g, w, state)
        or _find_same_side_exchange(g, w, state)
    )
    if mv:
        return mv
    swap, _, _ = _find_square_swap(g, w, state)
    return swap


def default_move_budget(g: Graph, w: list[int]) -> int:
    top = max(w) if w else 1
    return max(64, 4 * g.edge_count * g.n * top)


def check_fixpoint_invariants(g: Graph, w: list[int], state: BipartitionState) -> list[str]:
    """Structural facts that must hold once no cheap move applies.

    Returns human-readable descriptions of violations (empty = clean):
    every outside vertex sees both sides through busy neighbors, outside
    components have at most two vertices, S-vertices have at most two
    outside neighbors, and lone opposite-side neighbors of saturated
    outside vertices are heavy with two S-neighbors.
    """
    problems: list[str] = []
    side = state.side
    for x in range(g.n):
        if side[x] != OUTSIDE:
            continue
        for s in (1, 2):
            witnesses = [
                u for u in g.adj[x] if side[u] == s and _count_side(state, g, u, _other(s)) > 0
            ]
            if not witnesses:
                problems.append(f"outside vertex {x} has no side-{s} neighbor linked across")
        out_nbrs = [u for u in g.adj[x] if side[u] == OUTSIDE]
        if len(out_nbrs) > 1:
            problems.append(f"outside vertex {x} has {len(out_nbrs)} outside neighbors")
        if state.s_degree(x) == 3 and 1 in (state.nbr1[x], state.nbr2[x]):
            lone_side = 1 if state.nbr1[x] == 1 else 2
            x3 = next(u for u in g.adj[x] if side[u] == lone_side)
            if state.s_degree(x3) != 2:
                problems.append(f"lone neighbor {x3} of {x} has S-degree {state.s_degree(x3)}")
            elif w[x3] < w[x]:
                problems.append(f"lone neighbor {x3} of {x} is lighter ({w[x3]} < {w[x]})")
    for z in range(g.n):
        if side[z] == OUTSIDE:
            continue
        out_count = sum(1 for u in g.adj[z] if side[u] == OUTSIDE)
        if out_count > 2:
            problems.append(f"S-vertex {z} has {out_count} outside neighbors")
    return problems


def _count_side(state: BipartitionState, g: Graph, v: int, side: int) -> int:
    return state.nbr1[v] if side == 1 else state.nbr2[v]


def run_to_fixpoint(
    g: Graph,
    w: list[int],
    state: BipartitionState,
    *,
    max_moves: int | None = None,
    validate: bool = True,
) -> FixpointResult:
    """Drive the state to a fixpoint whose outside square is bipartite.

    After exhausting the cheap moves the outside square graph is built;
    if it is bipartite we are done, otherwise a validated cycle or path
    swap is committed and the loop restarts from Absorb.  ``validate``
    additionally recounts the potential from scratch after every commit
    and checks the structural fixpoint invariants.

    Raises StuckError when an odd cycle resists every candidate swap and
    MoveBudgetExceededError when the step budget runs out; both indicate
    a bug or an unhandled configuration, never a corrupted state.
    """
    budget = default_move_budget(g, w) if max_moves is None else max_moves
    records: list[MoveRecord] = []

    def commit(move: Move) -> None:
        nonlocal state
        before = state.potential
        state = apply_move(g, w, state, move)
        records.append(MoveRecord(move, before, state.potential))
        if validate:
            scratch = potential_from_scratch(g, w, state.s1, state.s2)
            if scratch != state.potential:
                raise InvalidStateError(
                    f"cached potential {state.potential} != recount {scratch} after {move}"
                )
        if len(records) > budget:
            raise MoveBudgetExceededError(f"move budget {budget} exhausted")

    while True:
        mv = (
            _find_absorb(g, state)
            or _find_flip(g, w, state)
            or _find_deg3_exchange(g, w, state)
            or _find_same_side_exchange(g, w, state)
        )
        if mv is not None:
            commit(mv)
            continue
        if validate:
            problems = check_fixpoint_invariants(g, w, state)
            if problems:
                raise InvalidStateError("fixpoint invariants violated: " + "; ".join(problems))
        swap, bipartition, tried = _find_square_swap(g, w, state)
        if bipartition is not None:
            return FixpointResult(state, bipartition, records)
        if swap is None:
            raise StuckError(
                f"no validated swap for odd outside cycles {tried}", state, tried
            )
        commit(swap)
