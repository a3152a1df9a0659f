"""Problem data types and the instance file format.

An instance bundles the published server resources, the submitted task
descriptions, and the two global constants: the intermediary fee rate
(``lambda``) and the channel noise (``delta``). Instances are immutable
after construction and validate themselves on creation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any

__all__ = [
    "UNASSIGNED",
    "TaskSpec",
    "ServerSpec",
    "Instance",
    "Allocation",
    "ValidationError",
    "InstanceFormatError",
    "parse_instance",
    "serialize_instance",
]

# Sentinel for "task not assigned to any server". Kept distinct from any
# server index; compares below index 0 so assignment vectors order cleanly.
UNASSIGNED = -1


class ValidationError(ValueError):
    """A field or cross-field invariant of the problem data is violated."""


class InstanceFormatError(ValueError):
    """An instance document is malformed (bad syntax, missing/typed field)."""


def _require_positive(owner: str, **fields: float) -> None:
    for name, value in fields.items():
        if not isinstance(value, (int, float)) or isinstance(value, bool):
            raise ValidationError(f"{owner}.{name} must be a number, got {value!r}")
        if not value > 0:
            raise ValidationError(f"{owner}.{name} must be > 0, got {value!r}")


@dataclass(frozen=True)
class TaskSpec:
    """One offloading task: payment rate, size, deadline, and submitting server."""

    id: int
    unit_price: float     # payment per CPU cycle
    data_size: float      # data units to process
    deadline: float       # seconds allowed to finish
    origin_server: int    # index of the server that received the task

    def __post_init__(self) -> None:
        if self.id < 0:
            raise ValidationError(f"task id must be >= 0, got {self.id}")
        _require_positive(
            f"task[{self.id}]",
            unit_price=self.unit_price,
            data_size=self.data_size,
            deadline=self.deadline,
        )
        if self.origin_server < 0:
            raise ValidationError(
                f"task[{self.id}].origin_server must be >= 0, got {self.origin_server}"
            )


@dataclass(frozen=True)
class ServerSpec:
    """One MEC server's published computing and communication resources."""

    id: int
    cpu_arch_coeff: float     # CPU architecture energy coefficient
    cycles_per_sample: float  # CPU cycles needed per data unit
    cpu_frequency: float      # cycles per second
    capacity: float           # max total CPU cycles per round
    bandwidth: float
    tx_power: float
    channel_gain: float

    def __post_init__(self) -> None:
        if self.id < 0:
            raise ValidationError(f"server id must be >= 0, got {self.id}")
        _require_positive(
            f"server[{self.id}]",
            cpu_arch_coeff=self.cpu_arch_coeff,
            cycles_per_sample=self.cycles_per_sample,
            cpu_frequency=self.cpu_frequency,
            capacity=self.capacity,
            bandwidth=self.bandwidth,
            tx_power=self.tx_power,
            channel_gain=self.channel_gain,
        )


@dataclass(frozen=True)
class Instance:
    """A full allocation problem: servers, tasks, and global constants."""

    servers: tuple[ServerSpec, ...]
    tasks: tuple[TaskSpec, ...]
    intermediary_rate: float  # fee fraction, in [0, 1)
    noise: float              # channel noise, in (0, 1]

    def __post_init__(self) -> None:
        object.__setattr__(self, "servers", tuple(self.servers))
        object.__setattr__(self, "tasks", tuple(self.tasks))
        n, m = len(self.servers), len(self.tasks)
        if not 0 < n <= m:
            raise ValidationError(
                f"C4 violated: need 0 < num_servers <= num_tasks, got n={n}, m={m}"
            )
        if not 0 <= self.intermediary_rate < 1:
            raise ValidationError(
                f"intermediary_rate must be in [0, 1), got {self.intermediary_rate!r}"
            )
        if not 0 < self.noise <= 1:
            raise ValidationError(f"noise must be in (0, 1], got {self.noise!r}")
        for i, server in enumerate(self.servers):
            if server.id != i:
                raise ValidationError(f"server at position {i} has id {server.id}")
        for j, task in enumerate(self.tasks):
            if task.id != j:
                raise ValidationError(f"task at position {j} has id {task.id}")
            if task.origin_server >= n:
                raise ValidationError(
                    f"task[{j}].origin_server={task.origin_server} "
                    f"out of range for {n} servers"
                )

    @property
    def num_servers(self) -> int:
        return len(self.servers)

    @property
    def num_tasks(self) -> int:
        return len(self.tasks)


@dataclass(frozen=True)
class Allocation:
    """A complete assignment: one server index (or UNASSIGNED) per task.

    ``total_utility`` is the allocation objective value of this assignment,
    as computed by :func:`edge_mta.allocation.evaluate`.
    """

    assignment: tuple[int, ...]
    total_utility: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "assignment", tuple(self.assignment))

    def assigned_pairs(self) -> list[tuple[int, int]]:
        """(server, task) pairs for the assigned tasks, in task order."""
        return [(a, j) for j, a in enumerate(self.assignment) if a != UNASSIGNED]


# --- instance document format -------------------------------------------
#
# Top level keys: lambda, delta, servers, tasks. Server objects carry
# alpha, theta, f, mu, B, H, G; task objects carry p, D, tau_e, origin.

_SERVER_KEYS = ("alpha", "theta", "f", "mu", "B", "H", "G")
_TASK_KEYS = ("p", "D", "tau_e", "origin")


def _pluck(obj: dict[str, Any], key: str, where: str) -> Any:
    if not isinstance(obj, dict):
        raise InstanceFormatError(f"{where} must be an object, got {type(obj).__name__}")
    if key not in obj:
        raise InstanceFormatError(f"missing field {where}.{key}")
    return obj[key]


def _number(obj: dict[str, Any], key: str, where: str) -> float:
    value = _pluck(obj, key, where)
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise InstanceFormatError(f"field {where}.{key} must be a number, got {value!r}")
    return float(value)


def parse_instance(text: str) -> Instance:
    """Parse an instance document; raise on malformed input or bad invariants.

    Raises ``InstanceFormatError`` for syntax/missing-field problems (the
    message names the offending line or field) and ``ValidationError`` when
    the parsed values violate a type invariant (the message names the
    constraint).
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceFormatError(
            f"malformed instance document at line {exc.lineno}, column {exc.colno}: "
            f"{exc.msg}"
        ) from exc
    if not isinstance(doc, dict):
        raise InstanceFormatError("instance document must be a top-level object")

    lam = _number(doc, "lambda", "$")
    delta = _number(doc, "delta", "$")
    raw_servers = _pluck(doc, "servers", "$")
    raw_tasks = _pluck(doc, "tasks", "$")
    if not isinstance(raw_servers, list):
        raise InstanceFormatError("field $.servers must be an array")
    if not isinstance(raw_tasks, list):
        raise InstanceFormatError("field $.tasks must be an array")

    servers = []
    for i, obj in enumerate(raw_servers):
        where = f"servers[{i}]"
        servers.append(
            ServerSpec(
                id=i,
                cpu_arch_coeff=_number(obj, "alpha", where),
                cycles_per_sample=_number(obj, "theta", where),
                cpu_frequency=_number(obj, "f", where),
                capacity=_number(obj, "mu", where),
                bandwidth=_number(obj, "B", where),
                tx_power=_number(obj, "H", where),
                channel_gain=_number(obj, "G", where),
            )
        )
    tasks = []
    for j, obj in enumerate(raw_tasks):
        where = f"tasks[{j}]"
        origin = _pluck(obj, "origin", where)
        if isinstance(origin, bool) or not isinstance(origin, int):
            raise InstanceFormatError(f"field {where}.origin must be an integer")
        tasks.append(
            TaskSpec(
                id=j,
                unit_price=_number(obj, "p", where),
                data_size=_number(obj, "D", where),
                deadline=_number(obj, "tau_e", where),
                origin_server=origin,
            )
        )
    return Instance(
        servers=tuple(servers),
        tasks=tuple(tasks),
        intermediary_rate=lam,
        noise=delta,
    )


def serialize_instance(inst: Instance) -> str:
    """Render an instance as a document that parses back to an equal instance.

    Output is deterministic: the same instance always serializes to the
    same bytes.
    """
    doc = {
        "lambda": inst.intermediary_rate,
        "delta": inst.noise,
        "servers": [
            {
                "alpha": s.cpu_arch_coeff,
                "theta": s.cycles_per_sample,
                "f": s.cpu_frequency,
                "mu": s.capacity,
                "B": s.bandwidth,
                "H": s.tx_power,
                "G": s.channel_gain,
            }
            for s in inst.servers
        ],
        "tasks": [
            {
                "p": t.unit_price,
                "D": t.data_size,
                "tau_e": t.deadline,
                "origin": t.origin_server,
            }
            for t in inst.tasks
        ],
    }
    return json.dumps(doc, indent=2) + "\n"
