"""Computing and communication cost quantities for a (server, task) pair.

All functions are pure and stateless. Energy and time follow the standard
edge-offloading cost model: computing energy scales with the CPU
architecture coefficient and the square of the clock frequency, and the
channel follows the Shannon bound with a flat noise floor.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .domain import ServerSpec, TaskSpec

__all__ = [
    "PairCosts",
    "cycles_required",
    "compute_energy",
    "compute_time",
    "transmission_rate",
    "comm_time",
    "comm_energy",
    "pair_costs",
]


def cycles_required(server: ServerSpec, task: TaskSpec) -> float:
    """Total CPU cycles needed to run the task on this server."""
    return task.data_size * server.cycles_per_sample


def compute_energy(server: ServerSpec, task: TaskSpec) -> float:
    """Energy cost of computing the task locally: alpha * cycles * f^2."""
    return server.cpu_arch_coeff * cycles_required(server, task) * server.cpu_frequency**2


def compute_time(server: ServerSpec, task: TaskSpec) -> float:
    """Wall time of computing the task locally: cycles / f."""
    return cycles_required(server, task) / server.cpu_frequency


def transmission_rate(server: ServerSpec, noise: float) -> float:
    """Shannon-bound data rate of the server's uplink: B * log2(1 + H*G/noise^2)."""
    snr = server.tx_power * server.channel_gain / noise**2
    return server.bandwidth * math.log2(1.0 + snr)


def comm_time(server: ServerSpec, task: TaskSpec, noise: float) -> float:
    """Time for this server to transmit the task's data: D / rate."""
    return task.data_size / transmission_rate(server, noise)


def comm_energy(server: ServerSpec, task: TaskSpec, noise: float) -> float:
    """Energy spent transmitting the task's data: tx_power * comm_time."""
    return server.tx_power * comm_time(server, task, noise)


@dataclass(frozen=True)
class PairCosts:
    """All cost quantities for one (server, task) pair at a given noise level."""

    cycles: float
    e_comp: float
    t_comp: float
    rate: float
    t_comm: float
    e_comm: float


def pair_costs(server: ServerSpec, task: TaskSpec, noise: float) -> PairCosts:
    """Bundle every scalar cost quantity for the pair."""
    return PairCosts(
        cycles=cycles_required(server, task),
        e_comp=compute_energy(server, task),
        t_comp=compute_time(server, task),
        rate=transmission_rate(server, noise),
        t_comm=comm_time(server, task, noise),
        e_comm=comm_energy(server, task, noise),
    )
