"""One allocation round, end to end, with payment settlement.

A round publishes server resources and task descriptions, allocates the
tasks with a chosen solver, and settles payments: the user of each
completed task pays the executing server per consumed cycle, and an
executing server that is not the task's origin forwards the intermediary
fee to the origin. Unassigned tasks settle nothing.

Records are append-only; a :class:`Ledger` keeps them in order and can
mirror them to a JSON-lines file.
"""

from __future__ import annotations

import json
import os
from dataclasses import asdict, dataclass
from typing import Iterable

from . import allocation, baselines, costs, qlearning
from .domain import UNASSIGNED, Allocation, Instance, ServerSpec, TaskSpec, ValidationError

__all__ = [
    "TASK_PAYMENT",
    "INTERMEDIARY_FEE",
    "Payment",
    "LedgerRecord",
    "Ledger",
    "settle",
    "run_round",
    "solve_with",
    "server_net_income",
    "SOLVERS",
]

TASK_PAYMENT = "task_payment"
INTERMEDIARY_FEE = "intermediary_fee"


@dataclass(frozen=True)
class Payment:
    payer: str   # "user:<task>" or "server:<id>"
    payee: str   # "server:<id>"
    amount: float
    kind: str    # TASK_PAYMENT or INTERMEDIARY_FEE


@dataclass(frozen=True)
class LedgerRecord:
    round: int
    published_resources: tuple[ServerSpec, ...]
    task_descriptions: tuple[TaskSpec, ...]
    allocation: Allocation
    payments: tuple[Payment, ...]
    results: tuple[int, ...]   # per task: executing server id or UNASSIGNED
    intermediary_rate: float
    noise: float


def solve_with(inst: Instance, solver: str, cfg: qlearning.LearnConfig) -> Allocation:
    if solver == "qlearning":
        return qlearning.solve(inst, cfg).best_assignment
    if solver == "greedy":
        return baselines.solve_greedy(inst)
    if solver == "random":
        return baselines.solve_random(inst, cfg.seed)
    if solver == "exact":
        return baselines.solve_exact(inst)
    raise ValidationError(f"unknown solver {solver!r}; expected one of {sorted(SOLVERS)}")


SOLVERS = ("qlearning", "greedy", "random", "exact")


def settle(inst: Instance, alloc: Allocation) -> tuple[Payment, ...]:
    """Payment flows for an allocation.

    Each completed task's user pays the executing server per consumed
    cycle; when the executor is not the origin, it forwards the
    intermediary fee (rate times the origin-side cycle payment) to the
    origin. Unassigned tasks generate no flows.
    """
    payments: list[Payment] = []
    for j, k in enumerate(alloc.assignment):
        if k == UNASSIGNED:
            continue
        tsk = inst.tasks[j]
        executed = inst.servers[k]
        payments.append(
            Payment(
                payer=f"user:{j}",
                payee=f"server:{k}",
                amount=tsk.unit_price * costs.cycles_required(executed, tsk),
                kind=TASK_PAYMENT,
            )
        )
        if k != tsk.origin_server:
            origin = inst.servers[tsk.origin_server]
            payments.append(
                Payment(
                    payer=f"server:{k}",
                    payee=f"server:{tsk.origin_server}",
                    amount=inst.intermediary_rate
                    * tsk.unit_price
                    * costs.cycles_required(origin, tsk),
                    kind=INTERMEDIARY_FEE,
                )
            )
    return tuple(payments)


def run_round(
    inst: Instance,
    solver: str = "greedy",
    cfg: qlearning.LearnConfig | None = None,
    round_no: int = 0,
) -> LedgerRecord:
    """Allocate one round's tasks and settle the resulting payments."""
    cfg = cfg or qlearning.LearnConfig()
    result = solve_with(inst, solver, cfg)
    return LedgerRecord(
        round=round_no,
        published_resources=inst.servers,
        task_descriptions=inst.tasks,
        allocation=result,
        payments=settle(inst, result),
        results=result.assignment,
        intermediary_rate=inst.intermediary_rate,
        noise=inst.noise,
    )


def server_net_income(record: LedgerRecord, server: int) -> float:
    """Payments received minus payments made minus energy spent by a server."""
    me = f"server:{server}"
    received = sum(p.amount for p in record.payments if p.payee == me)
    paid = sum(p.amount for p in record.payments if p.payer == me)

    energy = 0.0
    srv = record.published_resources[server]
    for j, k in enumerate(record.results):
        tsk = record.task_descriptions[j]
        if k == server:
            energy += costs.compute_energy(srv, tsk)
        elif k != UNASSIGNED and tsk.origin_server == server:
            energy += costs.comm_energy(srv, tsk, record.noise)
    return received - paid - energy


def record_to_json(record: LedgerRecord) -> str:
    """One-line JSON rendering of a record."""
    doc = asdict(record)
    return json.dumps(doc, separators=(",", ":"), sort_keys=True)


def record_from_json(line: str) -> LedgerRecord:
    doc = json.loads(line)
    return LedgerRecord(
        round=doc["round"],
        published_resources=tuple(ServerSpec(**s) for s in doc["published_resources"]),
        task_descriptions=tuple(TaskSpec(**t) for t in doc["task_descriptions"]),
        allocation=Allocation(
            assignment=tuple(doc["allocation"]["assignment"]),
            total_utility=doc["allocation"]["total_utility"],
        ),
        payments=tuple(Payment(**p) for p in doc["payments"]),
        results=tuple(doc["results"]),
        intermediary_rate=doc["intermediary_rate"],
        noise=doc["noise"],
    )


class Ledger:
    """Append-only sequence of round records, optionally mirrored to a file.

    Round numbers must increase by exactly one; the first appended record
    continues from whatever the backing file already holds.
    """

    def __init__(self, path: str | os.PathLike[str] | None = None):
        self._path = os.fspath(path) if path is not None else None
        self._records: list[LedgerRecord] = []
        if self._path and os.path.exists(self._path):
            with open(self._path, encoding="utf-8") as fh:
                for line in fh:
                    if line.strip():
                        self._records.append(record_from_json(line))

    @property
    def records(self) -> tuple[LedgerRecord, ...]:
        return tuple(self._records)

    def next_round(self) -> int:
        return self._records[-1].round + 1 if self._records else 0

    def append(self, record: LedgerRecord) -> None:
        expected = self.next_round()
        if record.round != expected:
            raise ValidationError(
                f"ledger expects round {expected}, got record for round {record.round}"
            )
        self._records.append(record)
        if self._path:
            with open(self._path, "a", encoding="utf-8") as fh:
                fh.write(record_to_json(record) + "\n")

    def extend(self, records: Iterable[LedgerRecord]) -> None:
        for record in records:
            self.append(record)
