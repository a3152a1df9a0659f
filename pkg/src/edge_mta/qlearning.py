"""Tabular Q-learning solver for the multi-task allocation problem.

States are tasks (visited in index order), actions are servers, rewards
come from the precomputed reward table. Each episode builds one complete
assignment; the best episode over the run is returned.

Action filtering is what makes the tabular approach respect the problem
constraints: at every state the agent may only pick a server whose table
entry is non-zero, whose residual capacity still fits the task after all
cycles already committed this episode, and which meets the task deadline.
A task with no available action is left unassigned for the episode.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import allocation
from .domain import UNASSIGNED, Allocation, Instance, ValidationError
from .rewards import RewardTable, assigned_time_table, build_reward_table, pair_time

__all__ = [
    "LearnConfig",
    "QTable",
    "EpisodeState",
    "SolveResult",
    "nonzero_actions",
    "available_actions",
    "select_action",
    "q_update",
    "solve",
]


@dataclass(frozen=True)
class LearnConfig:
    episodes: int = 500
    learning_rate: float = 0.8
    discount: float = 0.9
    epsilon: float = 0.9
    seed: int = 0

    def __post_init__(self) -> None:
        if self.episodes < 1:
            raise ValidationError(f"episodes must be >= 1, got {self.episodes}")
        for name in ("learning_rate", "discount", "epsilon"):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise ValidationError(f"{name} must be in [0, 1], got {value!r}")
        if not 0 <= self.seed < 2**64:
            raise ValidationError(f"seed must fit in 64 bits, got {self.seed!r}")


@dataclass
class QTable:
    """State-action values: one row per task, one column per server."""

    q: np.ndarray

    @classmethod
    def zeros(cls, num_tasks: int, num_servers: int) -> "QTable":
        return cls(q=np.zeros((num_tasks, num_servers)))


@dataclass
class EpisodeState:
    """Mutable bookkeeping for one episode's partial assignment."""

    acc_cycles: np.ndarray            # per-server cycles committed so far
    assignment: list[int]
    episode_reward: float = 0.0

    @classmethod
    def fresh(cls, inst: Instance) -> "EpisodeState":
        return cls(
            acc_cycles=np.zeros(inst.num_servers),
            assignment=[UNASSIGNED] * inst.num_tasks,
        )

    def commit(self, inst: Instance, task: int, server: int, reward: float) -> None:
        srv = inst.servers[server]
        self.acc_cycles[server] += inst.tasks[task].data_size * srv.cycles_per_sample
        self.assignment[task] = server
        self.episode_reward += reward


@dataclass(frozen=True)
class SolveResult:
    best_assignment: Allocation
    best_reward: float
    reward_trajectory: tuple[float, ...]
    best_so_far_trajectory: tuple[float, ...]


def nonzero_actions(table: RewardTable, state: int) -> list[int]:
    """Servers whose table entry for this task is non-zero, ascending."""
    return np.flatnonzero(table.values[:, state] != 0.0).tolist()


def available_actions(
    state: int, episode: EpisodeState, table: RewardTable, inst: Instance
) -> list[int]:
    """Actions the agent may take at this state, ascending by server index.

    A non-zero candidate survives if, hypothetically committing this task
    to it, the accumulated cycles stay within capacity (the residual
    computing time (capacity - committed cycles) / frequency stays
    non-negative) and the pair's completion time meets the deadline.
    """
    tsk = inst.tasks[state]
    out = []
    for i in nonzero_actions(table, state):
        srv = inst.servers[i]
        demand = tsk.data_size * srv.cycles_per_sample
        if episode.acc_cycles[i] + demand > srv.capacity:
            continue
        if pair_time(inst, i, state, assigned=True) > tsk.deadline:
            continue
        out.append(i)
    return out


def select_action(
    state: int,
    avail: list[int],
    qtable: QTable,
    epsilon: float,
    rng: np.random.Generator,
) -> int | None:
    """Epsilon-greedy pick from the available actions; None when empty.

    With probability ``epsilon`` the best-known action is exploited (ties
    break to the lowest server index); otherwise one available action is
    drawn uniformly.
    """
    if not avail:
        return None
    if rng.random() < epsilon:
        row = qtable.q[state, avail]
        return avail[int(np.argmax(row))]
    return avail[int(rng.integers(len(avail)))]


def q_update(
    qtable: QTable,
    state: int,
    action: int,
    reward: float,
    next_avail: list[int],
    learning_rate: float,
    discount: float,
) -> QTable:
    """One temporal-difference update; empty ``next_avail`` means terminal."""
    if next_avail:
        next_best = float(np.max(qtable.q[state + 1, next_avail]))
    else:
        next_best = 0.0
    current = qtable.q[state, action]
    qtable.q[state, action] = current + learning_rate * (
        reward + discount * next_best - current
    )
    return qtable


class _SolveContext:
    """Vectorized per-instance arrays for the episode loop."""

    def __init__(self, inst: Instance, table: RewardTable):
        m = inst.num_tasks
        theta = np.array([s.cycles_per_sample for s in inst.servers])
        data = np.array([t.data_size for t in inst.tasks])
        self.cycles = np.outer(theta, data)                # (n, m)
        self.capacity = np.array([s.capacity for s in inst.servers])
        self.values = table.values
        deadline = np.array([t.deadline for t in inst.tasks])
        time_ok = assigned_time_table(inst) <= deadline[None, :]
        static = (table.values != 0.0) & time_ok
        self.candidates = [np.flatnonzero(static[:, j]) for j in range(m)]

    def avail(self, state: int, acc: np.ndarray) -> list[int]:
        cand = self.candidates[state]
        fits = acc[cand] + self.cycles[cand, state] <= self.capacity[cand]
        return cand[fits].tolist()


def solve(inst: Instance, cfg: LearnConfig) -> SolveResult:
    """Run the episode loop and return the best assignment found.

    Deterministic for a fixed (instance, config) pair: a single generator
    seeded from ``cfg.seed`` drives every stochastic choice in order.
    """
    table = build_reward_table(inst)
    ctx = _SolveContext(inst, table)
    m = inst.num_tasks
    qtable = QTable.zeros(m, inst.num_servers)
    rng = np.random.default_rng(cfg.seed)

    best_reward = -np.inf
    best_assignment: list[int] = [UNASSIGNED] * m
    rewards: list[float] = []
    best_so_far: list[float] = []

    for _ in range(cfg.episodes):
        episode = EpisodeState.fresh(inst)
        avail = ctx.avail(0, episode.acc_cycles)
        for j in range(m):
            action = select_action(j, avail, qtable, cfg.epsilon, rng)
            if action is None:
                avail = ctx.avail(j + 1, episode.acc_cycles) if j + 1 < m else []
                continue
            reward = float(ctx.values[action, j])
            episode.commit(inst, j, action, reward)
            assert episode.acc_cycles[action] <= ctx.capacity[action]
            next_avail = ctx.avail(j + 1, episode.acc_cycles) if j + 1 < m else []
            q_update(
                qtable, j, action, reward, next_avail,
                cfg.learning_rate, cfg.discount,
            )
            avail = next_avail
        rewards.append(episode.episode_reward)
        if episode.episode_reward > best_reward:
            best_reward = episode.episode_reward
            best_assignment = list(episode.assignment)
        best_so_far.append(best_reward)

    return SolveResult(
        best_assignment=Allocation(
            assignment=tuple(best_assignment),
            total_utility=allocation.evaluate(inst, best_assignment),
        ),
        best_reward=float(best_reward),
        reward_trajectory=tuple(rewards),
        best_so_far_trajectory=tuple(best_so_far),
    )
