"""Task allocation engine and round simulator for edge resource sharing."""

from .allocation import FeasibilityReport, Violation, check_feasible, evaluate
from .baselines import (
    EnumerationBudgetError,
    solve_exact,
    solve_greedy,
    solve_random,
)
from .costs import (
    PairCosts,
    comm_energy,
    comm_time,
    compute_energy,
    compute_time,
    cycles_required,
    pair_costs,
    transmission_rate,
)
from .domain import (
    UNASSIGNED,
    Allocation,
    Instance,
    InstanceFormatError,
    ServerSpec,
    TaskSpec,
    ValidationError,
    parse_instance,
    serialize_instance,
)
from .harness import (
    GeneratorParams,
    SweepSpec,
    generate_instance,
    run_sweep,
    scale_data_sizes,
    scale_prices,
    table_reward,
)
from .ledger import Ledger, LedgerRecord, Payment, run_round, server_net_income
from .qlearning import LearnConfig, QTable, SolveResult, solve
from .rewards import RewardTable, build_reward_table, pair_reward, pair_time

__version__ = "0.1.0"

__all__ = [
    "UNASSIGNED",
    "Allocation",
    "EnumerationBudgetError",
    "FeasibilityReport",
    "GeneratorParams",
    "Instance",
    "InstanceFormatError",
    "LearnConfig",
    "Ledger",
    "LedgerRecord",
    "PairCosts",
    "Payment",
    "QTable",
    "RewardTable",
    "ServerSpec",
    "SolveResult",
    "SweepSpec",
    "TaskSpec",
    "ValidationError",
    "Violation",
    "build_reward_table",
    "check_feasible",
    "comm_energy",
    "comm_time",
    "compute_energy",
    "compute_time",
    "cycles_required",
    "evaluate",
    "generate_instance",
    "pair_costs",
    "pair_reward",
    "pair_time",
    "parse_instance",
    "run_round",
    "run_sweep",
    "scale_data_sizes",
    "scale_prices",
    "serialize_instance",
    "server_net_income",
    "solve",
    "solve_exact",
    "solve_greedy",
    "solve_random",
    "table_reward",
    "transmission_rate",
]
