"""Experiment harness: instance generation, solver sweeps, CSV emission.

The generator samples every field uniformly and independently within a
configured range, one range per quantity, matching the scale regime the
simulator is calibrated for. Sweeps vary one axis at a time over a seed
list and record one CSV row per (axis value, seed, solver) cell.
"""

from __future__ import annotations

import csv
import time
from dataclasses import dataclass, field, fields, replace
from typing import IO

import numpy as np

from . import baselines, qlearning
from .domain import (
    UNASSIGNED,
    Allocation,
    Instance,
    ServerSpec,
    TaskSpec,
    ValidationError,
)
from .qlearning import LearnConfig
from .rewards import build_reward_table

__all__ = [
    "GeneratorParams",
    "SweepSpec",
    "SweepRow",
    "TraceRow",
    "generate_instance",
    "scale_prices",
    "scale_data_sizes",
    "table_reward",
    "run_sweep",
    "write_sweep_csv",
    "write_trace_csv",
    "SWEEP_AXES",
    "SWEEP_SOLVERS",
]

SWEEP_AXES = (
    "num_servers",
    "num_tasks",
    "price_scale",
    "data_scale",
    "learning_rate",
    "discount",
)
SWEEP_SOLVERS = ("learning", "greedy", "random")

SWEEP_HEADER = ["axis", "value", "seed", "solver", "total_reward", "wall_ms"]
TRACE_HEADER = ["episode", "reward", "best_so_far", "alpha", "gamma", "seed"]


@dataclass(frozen=True)
class GeneratorParams:
    """Sampling ranges for random instances (uniform, inclusive bounds)."""

    num_servers: int = 20
    num_tasks: int = 50
    price_min: float = 1.0
    price_max: float = 10.0
    data_min: float = 10.0
    data_max: float = 20.0
    deadline_min: float = 1.0
    deadline_max: float = 100.0
    freq_min: float = 1.0
    freq_max: float = 10.0
    power_min: float = 5.0
    power_max: float = 10.0
    gain_min: float = 5.0
    gain_max: float = 10.0
    bandwidth_min: float = 5.0
    bandwidth_max: float = 10.0
    capacity_min: float = 200.0
    capacity_max: float = 400.0
    cycles_per_sample: float = 0.01
    cpu_coeff: float = 0.01
    noise: float = 0.01
    intermediary_rate: float = 0.1

    def __post_init__(self) -> None:
        if not 0 < self.num_servers <= self.num_tasks:
            raise ValidationError(
                f"need 0 < num_servers <= num_tasks, got "
                f"{self.num_servers} and {self.num_tasks}"
            )
        for lo_name in (
            "price_min", "data_min", "deadline_min", "freq_min",
            "power_min", "gain_min", "bandwidth_min", "capacity_min",
        ):
            hi_name = lo_name[:-4] + "_max"
            lo, hi = getattr(self, lo_name), getattr(self, hi_name)
            if not 0 < lo <= hi:
                raise ValidationError(
                    f"range [{lo_name}, {hi_name}] = [{lo}, {hi}] is invalid"
                )
        if self.cycles_per_sample <= 0 or self.cpu_coeff <= 0:
            raise ValidationError("cycles_per_sample and cpu_coeff must be > 0")
        if not 0 < self.noise <= 1:
            raise ValidationError(f"noise must be in (0, 1], got {self.noise!r}")
        if not 0 <= self.intermediary_rate < 1:
            raise ValidationError(
                f"intermediary_rate must be in [0, 1), got {self.intermediary_rate!r}"
            )


def generate_instance(params: GeneratorParams, seed: int) -> Instance:
    """Sample an instance; identical seeds give identical instances."""
    rng = np.random.default_rng(seed)
    n, m = params.num_servers, params.num_tasks
    servers = tuple(
        ServerSpec(
            id=i,
            cpu_arch_coeff=params.cpu_coeff,
            cycles_per_sample=params.cycles_per_sample,
            cpu_frequency=rng.uniform(params.freq_min, params.freq_max),
            capacity=rng.uniform(params.capacity_min, params.capacity_max),
            bandwidth=rng.uniform(params.bandwidth_min, params.bandwidth_max),
            tx_power=rng.uniform(params.power_min, params.power_max),
            channel_gain=rng.uniform(params.gain_min, params.gain_max),
        )
        for i in range(n)
    )
    tasks = tuple(
        TaskSpec(
            id=j,
            unit_price=rng.uniform(params.price_min, params.price_max),
            data_size=rng.uniform(params.data_min, params.data_max),
            deadline=rng.uniform(params.deadline_min, params.deadline_max),
            origin_server=int(rng.integers(n)),
        )
        for j in range(m)
    )
    return Instance(
        servers=servers,
        tasks=tasks,
        intermediary_rate=params.intermediary_rate,
        noise=params.noise,
    )


def scale_prices(inst: Instance, factor: float) -> Instance:
    """Multiply every task's unit price by ``factor``."""
    tasks = tuple(replace(t, unit_price=t.unit_price * factor) for t in inst.tasks)
    return replace(inst, tasks=tasks)


def scale_data_sizes(inst: Instance, factor: float) -> Instance:
    """Multiply every task's data size by ``factor``."""
    tasks = tuple(replace(t, data_size=t.data_size * factor) for t in inst.tasks)
    return replace(inst, tasks=tasks)


def table_reward(inst: Instance, alloc: Allocation) -> float:
    """Sum of reward-table entries collected by an assignment.

    This is the metric all solvers are compared on: the learning solver's
    episode reward is exactly this sum for its best assignment.
    """
    table = build_reward_table(inst)
    total = 0.0
    for j, a in enumerate(alloc.assignment):
        if a != UNASSIGNED:
            total += float(table.values[a, j])
    return total


@dataclass(frozen=True)
class SweepSpec:
    axis: str
    values: tuple[float, ...]
    seeds: tuple[int, ...]
    learn: LearnConfig = field(default_factory=LearnConfig)
    gen: GeneratorParams = field(default_factory=GeneratorParams)

    def __post_init__(self) -> None:
        if self.axis not in SWEEP_AXES:
            raise ValidationError(
                f"unknown sweep axis {self.axis!r}; expected one of {SWEEP_AXES}"
            )
        if not self.values:
            raise ValidationError("sweep values must be non-empty")
        if any(b <= a for a, b in zip(self.values, self.values[1:])):
            raise ValidationError("sweep values must be strictly increasing")
        if not self.seeds:
            raise ValidationError("sweep seeds must be non-empty")


@dataclass(frozen=True)
class SweepRow:
    axis: str
    value: float
    seed: int
    solver: str
    total_reward: float | None   # None marks a solver failure
    wall_ms: float


@dataclass(frozen=True)
class TraceRow:
    episode: int
    reward: float
    best_so_far: float
    alpha: float
    gamma: float
    seed: int


def _cell_instance(spec: SweepSpec, value: float, seed: int) -> Instance:
    if spec.axis == "num_servers":
        return generate_instance(replace(spec.gen, num_servers=int(value)), seed)
    if spec.axis == "num_tasks":
        return generate_instance(replace(spec.gen, num_tasks=int(value)), seed)
    base = generate_instance(spec.gen, seed)
    if spec.axis == "price_scale":
        return scale_prices(base, value)
    if spec.axis == "data_scale":
        return scale_data_sizes(base, value)
    return base


def _cell_config(spec: SweepSpec, value: float, seed: int) -> LearnConfig:
    cfg = replace(spec.learn, seed=seed)
    if spec.axis == "learning_rate":
        cfg = replace(cfg, learning_rate=value)
    elif spec.axis == "discount":
        cfg = replace(cfg, discount=value)
    return cfg


def run_sweep(
    spec: SweepSpec, collect_traces: bool = False
) -> tuple[list[SweepRow], list[TraceRow]]:
    """Run every (value, seed, solver) cell; failures become error rows.

    Rows come back sorted by (value, seed, solver) so output order never
    depends on execution schedule.
    """
    rows: list[SweepRow] = []
    traces: list[TraceRow] = []
    for value in spec.values:
        for seed in spec.seeds:
            cfg = _cell_config(spec, value, seed)
            try:
                inst = _cell_instance(spec, value, seed)
            except ValidationError:
                for solver in SWEEP_SOLVERS:
                    rows.append(SweepRow(spec.axis, value, seed, solver, None, 0.0))
                continue
            for solver in SWEEP_SOLVERS:
                start = time.perf_counter()
                try:
                    if solver == "learning":
                        result = qlearning.solve(inst, cfg)
                        alloc = result.best_assignment
                        reward = result.best_reward
                        if collect_traces:
                            best = result.best_so_far_trajectory
                            for k, r in enumerate(result.reward_trajectory):
                                traces.append(
                                    TraceRow(
                                        episode=k,
                                        reward=r,
                                        best_so_far=best[k],
                                        alpha=cfg.learning_rate,
                                        gamma=cfg.discount,
                                        seed=seed,
                                    )
                                )
                    elif solver == "greedy":
                        alloc = baselines.solve_greedy(inst)
                        reward = table_reward(inst, alloc)
                    else:
                        alloc = baselines.solve_random(inst, seed)
                        reward = table_reward(inst, alloc)
                except (ValidationError, baselines.EnumerationBudgetError):
                    reward = None
                wall_ms = (time.perf_counter() - start) * 1000.0
                rows.append(
                    SweepRow(spec.axis, value, seed, solver, reward, wall_ms)
                )
    rows.sort(key=lambda r: (r.value, r.seed, SWEEP_SOLVERS.index(r.solver)))
    return rows, traces


def write_sweep_csv(rows: list[SweepRow], out: IO[str]) -> None:
    writer = csv.writer(out)
    writer.writerow(SWEEP_HEADER)
    for r in rows:
        reward = "" if r.total_reward is None else repr(r.total_reward)
        writer.writerow([r.axis, r.value, r.seed, r.solver, reward, f"{r.wall_ms:.3f}"])


def write_trace_csv(traces: list[TraceRow], out: IO[str]) -> None:
    writer = csv.writer(out)
    writer.writerow(TRACE_HEADER)
    for t in traces:
        writer.writerow(
            [t.episode, repr(t.reward), repr(t.best_so_far), t.alpha, t.gamma, t.seed]
        )


def read_flat_config(text: str) -> dict[str, float]:
    """Parse ``key = value`` lines; ``#`` starts a comment."""
    out: dict[str, float] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValidationError(f"config line {lineno}: expected key = value")
        key, _, value = line.partition("=")
        try:
            out[key.strip()] = float(value.strip())
        except ValueError as exc:
            raise ValidationError(
                f"config line {lineno}: {value.strip()!r} is not a number"
            ) from exc
    return out


_LEARN_KEYS = {f.name for f in fields(LearnConfig)}
_GEN_KEYS = {f.name for f in fields(GeneratorParams)}


def configs_from_mapping(
    mapping: dict[str, float],
    learn: LearnConfig | None = None,
    gen: GeneratorParams | None = None,
) -> tuple[LearnConfig, GeneratorParams]:
    """Overlay flat config keys onto learning and generator settings."""
    learn = learn or LearnConfig()
    gen = gen or GeneratorParams()
    unknown = set(mapping) - _LEARN_KEYS - _GEN_KEYS
    if unknown:
        raise ValidationError(f"unknown config keys: {sorted(unknown)}")
    learn_updates = {
        k: (int(v) if k in ("episodes", "seed") else v)
        for k, v in mapping.items()
        if k in _LEARN_KEYS
    }
    gen_updates = {
        k: (int(v) if k in ("num_servers", "num_tasks") else v)
        for k, v in mapping.items()
        if k in _GEN_KEYS
    }
    return replace(learn, **learn_updates), replace(gen, **gen_updates)
