"""Independent replay audits of coloring runs.

Re-executes a recorded exchange run from its initial state, recomputing
the potential from scratch at every step, and re-derives the fixpoint
structure and the outside square bipartition.  Used by the test suite
to certify that every committed move strictly increased the potential
and that every terminal state satisfies the structural invariants.
"""
from __future__ import annotations

from dataclasses import dataclass

from .colorer import ColorResult, CoreRun
from .exchange import apply_move, check_fixpoint_invariants, square_outside
from .graph import Graph, induced
from .verify import verify
from .weights import potential as potential_from_scratch


class AuditError(ValueError):
    pass


@dataclass
class AuditReport:
    runs: int = 0
    moves: int = 0

    def merge(self, other: "AuditReport") -> None:
        self.runs += other.runs
        self.moves += other.moves


def audit_core_run(core: Graph, run: CoreRun) -> AuditReport:
    """Replay one core run; raises AuditError on any discrepancy."""
    w = list(run.weights)
    state = run.initial
    scratch = potential_from_scratch(core, w, state.s1, state.s2)
    if scratch != state.potential:
        raise AuditError(f"initial potential {state.potential} != recount {scratch}")
    for i, record in enumerate(run.moves):
        if record.before != state.potential:
            raise AuditError(f"move {i}: recorded before {record.before} != {state.potential}")
        if not record.after > record.before:
            raise AuditError(f"move {i}: potential did not strictly increase: {record}")
        state = apply_move(core, w, state, record.move)
        if state.potential != record.after:
            raise AuditError(f"move {i}: recorded after {record.after} != {state.potential}")
        scratch = potential_from_scratch(core, w, state.s1, state.s2)
        if scratch != state.potential:
            raise AuditError(f"move {i}: cached potential {state.potential} != recount {scratch}")
    if state.side != run.final.side:
        raise AuditError("replayed final state differs from recorded final state")

    problems = check_fixpoint_invariants(core, w, run.final)
    if problems:
        raise AuditError("fixpoint structure violated: " + "; ".join(problems))

    sq, order = square_outside(core, run.final)
    h1, h2 = run.square.h1, run.square.h2
    if h1 & h2 or (h1 | h2) != frozenset(order):
        raise AuditError("square bipartition does not partition the outside")
    position = {v: i for i, v in enumerate(order)}
    for part in (h1, h2):
        ids = {position[v] for v in part}
        for a, b in sq.edges():
            if a in ids and b in ids:
                raise AuditError(
                    f"outside vertices {order[a]} and {order[b]} share a radius-2 part "
                    "but are within distance 2"
                )
    return AuditReport(runs=1, moves=len(run.moves))


def audit_color_result(g: Graph, result: ColorResult) -> AuditReport:
    """Audit every core run inside a coloring result and verify its coloring."""
    report = AuditReport()
    for comp in result.components:
        if comp.core_run is None:
            continue
        core = induced(g, comp.core_vertices).graph
        report.merge(audit_core_run(core, comp.core_run))
    outcome = verify(g, result.coloring)
    if not outcome.ok:
        raise AuditError(
            f"coloring fails verification: {len(outcome.violations)} violations, "
            f"{len(outcome.missing)} unassigned, {len(outcome.multiply_assigned)} duplicated"
        )
    return report
