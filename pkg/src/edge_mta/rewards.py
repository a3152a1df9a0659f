"""Per-pair rewards and the full reward table.

The reward of assigning task ``j`` to server ``i`` depends on whether the
task was submitted through ``i`` (its own task) or through another server
(a foreign task), and on whether the pair passes the single-pair screens:
the task's cycle demand must fit the server's capacity, and the completion
time under the assignment hypothesis must meet the deadline.

    own, feasible:      p * cycles - compute_energy
    own, infeasible:    rate * p * cycles - comm_energy   (fee for handing off)
    foreign, feasible:  (1 - rate) * p * cycles - compute_energy
    foreign, infeasible: 0

Negative entries are possible (handing off a task costs transmission
energy) and are kept as-is; solvers filter on non-zero, not on sign.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from typing import IO

import numpy as np

from . import costs
from .domain import Instance

__all__ = [
    "RewardTable",
    "pair_time",
    "pair_reward",
    "build_reward_table",
    "assigned_time_table",
]


@dataclass(frozen=True)
class RewardTable:
    """Reward value and single-pair feasibility for every (server, task) pair."""

    values: np.ndarray    # shape (n, m), float
    feasible: np.ndarray  # shape (n, m), bool

    def __post_init__(self) -> None:
        self.values.setflags(write=False)
        self.feasible.setflags(write=False)

    @property
    def num_servers(self) -> int:
        return self.values.shape[0]

    @property
    def num_tasks(self) -> int:
        return self.values.shape[1]

    def write_csv(self, out: IO[str]) -> None:
        """Debug dump: one row per server, one column per task."""
        writer = csv.writer(out)
        writer.writerow(["server"] + [f"task_{j}" for j in range(self.num_tasks)])
        for i in range(self.num_servers):
            writer.writerow([i] + [repr(v) for v in self.values[i].tolist()])


def pair_time(inst: Instance, server: int, task: int, *, assigned: bool) -> float:
    """Total completion time of the pair under the given assignment status.

    Own task: computing time when assigned, else the origin's transmission
    time (the server ships the data elsewhere). Foreign task: computing
    time plus the origin server's transmission time when assigned, else 0
    (an uninvolved server spends nothing).
    """
    srv = inst.servers[server]
    tsk = inst.tasks[task]
    if tsk.origin_server == server:
        if assigned:
            return costs.compute_time(srv, tsk)
        return costs.comm_time(srv, tsk, inst.noise)
    if assigned:
        origin = inst.servers[tsk.origin_server]
        return costs.compute_time(srv, tsk) + costs.comm_time(origin, tsk, inst.noise)
    return 0.0


def _pair_feasible(inst: Instance, server: int, task: int) -> bool:
    # Single-pair screens: cycle demand within capacity, and deadline met
    # under the "assigned here" hypothesis. Cumulative capacity is the
    # solvers' concern, not the table's.
    srv = inst.servers[server]
    tsk = inst.tasks[task]
    if costs.cycles_required(srv, tsk) > srv.capacity:
        return False
    return pair_time(inst, server, task, assigned=True) <= tsk.deadline


def pair_reward(inst: Instance, server: int, task: int) -> float:
    """Reward of assigning the task to the server (may be negative)."""
    srv = inst.servers[server]
    tsk = inst.tasks[task]
    lam = inst.intermediary_rate
    cycles = costs.cycles_required(srv, tsk)
    payment = tsk.unit_price * cycles
    if tsk.origin_server == server:
        if _pair_feasible(inst, server, task):
            return payment - costs.compute_energy(srv, tsk)
        return lam * payment - costs.comm_energy(srv, tsk, inst.noise)
    if _pair_feasible(inst, server, task):
        return (1.0 - lam) * payment - costs.compute_energy(srv, tsk)
    return 0.0


def assigned_time_table(inst: Instance) -> np.ndarray:
    """Completion time of every pair under the "assigned here" hypothesis.

    Entry (i, j) is the computing time on server i, plus the origin
    server's transmission time when the task is foreign to i.
    """
    n, m = inst.num_servers, inst.num_tasks
    theta = np.array([s.cycles_per_sample for s in inst.servers])
    freq = np.array([s.cpu_frequency for s in inst.servers])
    rate = np.array([costs.transmission_rate(s, inst.noise) for s in inst.servers])
    data = np.array([t.data_size for t in inst.tasks])
    origin = np.array([t.origin_server for t in inst.tasks])

    t_comp = np.outer(theta, data) / freq[:, None]
    t_comm_origin = data / rate[origin]               # (m,)
    own = origin[None, :] == np.arange(n)[:, None]
    return t_comp + np.where(own, 0.0, t_comm_origin[None, :])


def build_reward_table(inst: Instance) -> RewardTable:
    """Compute the full (num_servers x num_tasks) reward table."""
    n, m = inst.num_servers, inst.num_tasks
    alpha = np.array([s.cpu_arch_coeff for s in inst.servers])
    theta = np.array([s.cycles_per_sample for s in inst.servers])
    freq = np.array([s.cpu_frequency for s in inst.servers])
    cap = np.array([s.capacity for s in inst.servers])
    rate = np.array([costs.transmission_rate(s, inst.noise) for s in inst.servers])
    power = np.array([s.tx_power for s in inst.servers])
    price = np.array([t.unit_price for t in inst.tasks])
    data = np.array([t.data_size for t in inst.tasks])
    deadline = np.array([t.deadline for t in inst.tasks])
    origin = np.array([t.origin_server for t in inst.tasks])

    cycles = np.outer(theta, data)                      # (n, m)
    e_comp = (alpha * freq**2)[:, None] * cycles
    t_comm = data[None, :] / rate[:, None]
    e_comm = power[:, None] * t_comm
    own = origin[None, :] == np.arange(n)[:, None]

    feasible = (cycles <= cap[:, None]) & (
        assigned_time_table(inst) <= deadline[None, :]
    )

    payment = price[None, :] * cycles
    lam = inst.intermediary_rate
    values = np.where(
        own,
        np.where(feasible, payment - e_comp, lam * payment - e_comm),
        np.where(feasible, (1.0 - lam) * payment - e_comp, 0.0),
    )
    return RewardTable(values=values, feasible=feasible)
