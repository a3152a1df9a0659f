"""Feasibility checking and the allocation objective.

This module is the single source of truth for scoring a complete
assignment, whatever solver produced it. An assignment maps each task to
one server index or ``UNASSIGNED``.

Constraints:
    C1  per server, the cycles of its assigned tasks fit its capacity
    C2  every assigned task finishes within its deadline (computing time,
        plus the origin's transmission time for foreign assignments)
    C3  each task goes to at most one server; the one-entry-per-task
        assignment representation guarantees this structurally
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from . import costs
from .domain import UNASSIGNED, Instance, ValidationError
from .rewards import pair_time

__all__ = ["Violation", "FeasibilityReport", "check_feasible", "evaluate"]


@dataclass(frozen=True)
class Violation:
    constraint: str   # "C1" or "C2"
    index: int        # server index for C1, task index for C2
    measured: float
    bound: float


@dataclass(frozen=True)
class FeasibilityReport:
    ok: bool
    violations: tuple[Violation, ...]


def _check_assignment_shape(inst: Instance, assignment: Sequence[int]) -> None:
    if len(assignment) != inst.num_tasks:
        raise ValidationError(
            f"assignment has {len(assignment)} entries for {inst.num_tasks} tasks"
        )
    for j, a in enumerate(assignment):
        if a != UNASSIGNED and not 0 <= a < inst.num_servers:
            raise ValidationError(f"assignment[{j}]={a} is not a server index")


def check_feasible(inst: Instance, assignment: Sequence[int]) -> FeasibilityReport:
    """Check C1 and C2 for a complete assignment; C3 holds structurally."""
    _check_assignment_shape(inst, assignment)
    violations: list[Violation] = []

    load = [0.0] * inst.num_servers
    for j, a in enumerate(assignment):
        if a == UNASSIGNED:
            continue
        load[a] += costs.cycles_required(inst.servers[a], inst.tasks[j])
    for i, total in enumerate(load):
        if total > inst.servers[i].capacity:
            violations.append(Violation("C1", i, total, inst.servers[i].capacity))

    for j, a in enumerate(assignment):
        if a == UNASSIGNED:
            continue
        total_time = pair_time(inst, a, j, assigned=True)
        if total_time > inst.tasks[j].deadline:
            violations.append(Violation("C2", j, total_time, inst.tasks[j].deadline))

    return FeasibilityReport(ok=not violations, violations=tuple(violations))


def task_contribution(inst: Instance, task: int, assignee: int) -> float:
    """Objective contribution of one task under the given assignment.

    Self-assigned: the origin keeps the full payment minus computing
    energy. Assigned elsewhere: the origin collects the intermediary fee
    minus its transmission energy, and the assignee earns the fee-reduced
    payment minus its computing energy. Unassigned tasks contribute
    nothing: no work happens, so no payment or fee flows.
    """
    if assignee == UNASSIGNED:
        return 0.0
    tsk = inst.tasks[task]
    origin = inst.servers[tsk.origin_server]
    lam = inst.intermediary_rate
    if assignee == tsk.origin_server:
        payment = tsk.unit_price * costs.cycles_required(origin, tsk)
        return payment - costs.compute_energy(origin, tsk)
    srv = inst.servers[assignee]
    origin_fee = lam * tsk.unit_price * costs.cycles_required(origin, tsk)
    origin_part = origin_fee - costs.comm_energy(origin, tsk, inst.noise)
    assignee_payment = tsk.unit_price * costs.cycles_required(srv, tsk)
    assignee_part = (1.0 - lam) * assignee_payment - costs.compute_energy(srv, tsk)
    return origin_part + assignee_part


def evaluate(inst: Instance, assignment: Sequence[int]) -> float:
    """Total utility of an assignment (feasible or not; callers decide)."""
    _check_assignment_shape(inst, assignment)
    return sum(task_contribution(inst, j, a) for j, a in enumerate(assignment))
