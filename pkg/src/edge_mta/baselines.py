"""Reference solvers: random, greedy, and an exact enumeration oracle.

The random and greedy solvers walk tasks in index order and only consider
servers that keep the partial assignment feasible (cumulative capacity
plus the per-pair deadline check), so their outputs are always valid
allocations. The exact solver enumerates every assignment vector
(including leaving tasks unassigned) and is the ground-truth optimum on
instances small enough to afford it.
"""

from __future__ import annotations

import math

import numpy as np

from . import allocation
from .domain import UNASSIGNED, Allocation, Instance
from .rewards import assigned_time_table, build_reward_table

__all__ = [
    "EnumerationBudgetError",
    "solve_random",
    "solve_greedy",
    "solve_exact",
]


class EnumerationBudgetError(RuntimeError):
    """The instance is too large for exhaustive search."""


class _Walk:
    """Shared state for the order-respecting heuristics."""

    def __init__(self, inst: Instance):
        theta = np.array([s.cycles_per_sample for s in inst.servers])
        data = np.array([t.data_size for t in inst.tasks])
        self.cycles = np.outer(theta, data)
        self.capacity = np.array([s.capacity for s in inst.servers])
        deadline = np.array([t.deadline for t in inst.tasks])
        self.time_ok = assigned_time_table(inst) <= deadline[None, :]
        self.acc = np.zeros(inst.num_servers)

    def feasible_servers(self, task: int) -> np.ndarray:
        fits = self.acc + self.cycles[:, task] <= self.capacity
        return np.flatnonzero(fits & self.time_ok[:, task])

    def commit(self, task: int, server: int) -> None:
        self.acc[server] += self.cycles[server, task]


def solve_random(inst: Instance, seed: int) -> Allocation:
    """Assign each task to a uniformly random feasibility-preserving server."""
    rng = np.random.default_rng(seed)
    walk = _Walk(inst)
    assignment = []
    for j in range(inst.num_tasks):
        candidates = walk.feasible_servers(j)
        if candidates.size == 0:
            assignment.append(UNASSIGNED)
            continue
        choice = int(candidates[rng.integers(candidates.size)])
        walk.commit(j, choice)
        assignment.append(choice)
    return Allocation(
        assignment=tuple(assignment),
        total_utility=allocation.evaluate(inst, assignment),
    )


def solve_greedy(inst: Instance) -> Allocation:
    """Assign each task to the feasibility-preserving server with the
    highest reward-table entry (ties break to the lowest index)."""
    table = build_reward_table(inst)
    walk = _Walk(inst)
    assignment = []
    for j in range(inst.num_tasks):
        candidates = walk.feasible_servers(j)
        candidates = candidates[table.values[candidates, j] != 0.0]
        if candidates.size == 0:
            assignment.append(UNASSIGNED)
            continue
        choice = int(candidates[np.argmax(table.values[candidates, j])])
        walk.commit(j, choice)
        assignment.append(choice)
    return Allocation(
        assignment=tuple(assignment),
        total_utility=allocation.evaluate(inst, assignment),
    )


def solve_exact(inst: Instance, max_bits: float = 40.0) -> Allocation:
    """Exhaustive depth-first search over all assignment vectors.

    Searches the full (num_servers + 1) ** num_tasks space with two safe
    prunes: servers that no longer fit a task are skipped, and a branch is
    cut when even an optimistic completion cannot beat the incumbent.
    Returns the lexicographically smallest optimal assignment (with
    UNASSIGNED ordered before server 0).

    Raises ``EnumerationBudgetError`` when the search space exceeds
    ``2 ** max_bits`` assignments.
    """
    n, m = inst.num_servers, inst.num_tasks
    bits = m * math.log2(n + 1)
    if bits > max_bits:
        raise EnumerationBudgetError(
            f"search space is 2^{bits:.1f} assignments, over the 2^{max_bits:g} budget"
        )

    walk = _Walk(inst)
    contrib = np.zeros((n, m))
    for j in range(m):
        for i in range(n):
            contrib[i, j] = allocation.task_contribution(inst, j, i)
    # Optimistic per-task bound for pruning: best pair-screen-feasible
    # contribution, or leaving the task unassigned.
    per_task_ub = np.zeros(m)
    pair_fits = walk.cycles <= walk.capacity[:, None]
    for j in range(m):
        ok = pair_fits[:, j] & walk.time_ok[:, j]
        per_task_ub[j] = max(0.0, contrib[ok, j].max(initial=-np.inf))
    suffix_ub = np.concatenate([np.cumsum(per_task_ub[::-1])[::-1], [0.0]])

    best_value = -np.inf
    best_assignment: list[int] | None = None
    assignment = [UNASSIGNED] * m

    def descend(j: int, value: float) -> None:
        nonlocal best_value, best_assignment
        if value + suffix_ub[j] <= best_value:
            return
        if j == m:
            # Strict improvement keeps the first (lexicographically
            # smallest) optimum found by the ordered descent.
            best_value = value
            best_assignment = list(assignment)
            return
        descend(j + 1, value)  # UNASSIGNED branch first
        for i in walk.feasible_servers(j):
            i = int(i)
            assignment[j] = i
            walk.commit(j, i)
            descend(j + 1, value + contrib[i, j])
            walk.acc[i] -= walk.cycles[i, j]
            assignment[j] = UNASSIGNED

    descend(0, 0.0)
    assert best_assignment is not None
    return Allocation(
        assignment=tuple(best_assignment),
        total_utility=allocation.evaluate(inst, best_assignment),
    )
