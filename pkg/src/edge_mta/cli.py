"""Command-line driver: generate instances, solve, sweep, and settle rounds."""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import replace

from . import baselines, harness, ledger
from .baselines import EnumerationBudgetError
from .domain import InstanceFormatError, ValidationError, parse_instance, serialize_instance
from .harness import GeneratorParams, SweepSpec
from .qlearning import LearnConfig

USAGE_ERROR = 2


def _default_seed() -> int:
    return int(os.environ.get("EDGE_MTA_SEED", "0"))


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--seed", type=int, default=None, help="RNG seed")
    parser.add_argument("--config", help="flat key = value config file")


def _add_learn_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--episodes", type=int, default=None)
    parser.add_argument("--alpha", type=float, default=None, help="learning rate")
    parser.add_argument("--gamma", type=float, default=None, help="discount factor")
    parser.add_argument("--epsilon", type=float, default=None, help="exploit probability")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="edge-mta",
        description="Task allocation for edge resource sharing",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a random instance document")
    _add_common(gen)
    gen.add_argument("--out", help="output path (default: stdout)")
    gen.add_argument("--servers", type=int, default=None)
    gen.add_argument("--tasks", type=int, default=None)

    solve = sub.add_parser("solve", help="solve a saved instance")
    solve.add_argument("instance", help="instance document path")
    _add_common(solve)
    _add_learn_flags(solve)
    solve.add_argument(
        "--solver", choices=ledger.SOLVERS, default="qlearning"
    )

    oracle = sub.add_parser("oracle", help="exact optimum by enumeration")
    oracle.add_argument("instance")
    _add_common(oracle)
    oracle.add_argument(
        "--max-bits", type=float, default=40.0,
        help="refuse when log2(search space) exceeds this",
    )

    rnd = sub.add_parser("round", help="run one settlement round")
    rnd.add_argument("instance")
    _add_common(rnd)
    _add_learn_flags(rnd)
    rnd.add_argument("--solver", choices=ledger.SOLVERS, default="greedy")
    rnd.add_argument("--out", help="append-only ledger file (JSON lines)")

    sweep = sub.add_parser("sweep", help="run a one-axis experiment sweep")
    _add_common(sweep)
    _add_learn_flags(sweep)
    sweep.add_argument("--axis", choices=harness.SWEEP_AXES, required=True)
    sweep.add_argument("--values", required=True, help="comma-separated axis values")
    sweep.add_argument("--seeds", required=True, help="comma-separated seeds")
    sweep.add_argument("--out", help="sweep CSV path (default: stdout)")
    sweep.add_argument("--trace-out", help="per-episode convergence CSV path")

    return parser


def _load_configs(args: argparse.Namespace) -> tuple[LearnConfig, GeneratorParams]:
    learn, gen = LearnConfig(), GeneratorParams()
    if getattr(args, "config", None):
        with open(args.config, encoding="utf-8") as fh:
            mapping = harness.read_flat_config(fh.read())
        learn, gen = harness.configs_from_mapping(mapping, learn, gen)
    seed = args.seed if args.seed is not None else _default_seed()
    learn = replace(learn, seed=seed)
    for flag, name in (
        ("episodes", "episodes"),
        ("alpha", "learning_rate"),
        ("gamma", "discount"),
        ("epsilon", "epsilon"),
    ):
        value = getattr(args, flag, None)
        if value is not None:
            learn = replace(learn, **{name: value})
    return learn, gen


def _read_instance(path: str):
    with open(path, encoding="utf-8") as fh:
        return parse_instance(fh.read())


def _cmd_gen(args: argparse.Namespace) -> int:
    learn, gen = _load_configs(args)
    if args.servers is not None:
        gen = replace(gen, num_servers=args.servers)
    if args.tasks is not None:
        gen = replace(gen, num_tasks=args.tasks)
    inst = harness.generate_instance(gen, learn.seed)
    text = serialize_instance(inst)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_solve(args: argparse.Namespace) -> int:
    learn, _ = _load_configs(args)
    inst = _read_instance(args.instance)
    alloc = ledger.solve_with(inst, args.solver, learn)
    reward = harness.table_reward(inst, alloc)
    assigned = sum(1 for a in alloc.assignment if a >= 0)
    print(f"solver {args.solver}")
    print(f"total_reward {reward!r}")
    print(f"objective {alloc.total_utility!r}")
    print(f"assigned {assigned}/{inst.num_tasks}")
    return 0


def _cmd_oracle(args: argparse.Namespace) -> int:
    inst = _read_instance(args.instance)
    alloc = baselines.solve_exact(inst, max_bits=args.max_bits)
    print(f"optimum {alloc.total_utility!r}")
    print("assignment " + ",".join(str(a) for a in alloc.assignment))
    return 0


def _cmd_round(args: argparse.Namespace) -> int:
    learn, _ = _load_configs(args)
    inst = _read_instance(args.instance)
    book = ledger.Ledger(args.out)
    record = ledger.run_round(inst, args.solver, learn, round_no=book.next_round())
    book.append(record)
    total = sum(ledger.server_net_income(record, i) for i in range(inst.num_servers))
    print(f"round {record.round}")
    print(f"payments {len(record.payments)}")
    print(f"net_income_total {total!r}")
    return 0


def _parse_floats(text: str, what: str) -> tuple[float, ...]:
    try:
        return tuple(float(x) for x in text.split(",") if x.strip())
    except ValueError as exc:
        raise ValidationError(f"bad {what} list {text!r}") from exc


def _cmd_sweep(args: argparse.Namespace) -> int:
    learn, gen = _load_configs(args)
    spec = SweepSpec(
        axis=args.axis,
        values=_parse_floats(args.values, "values"),
        seeds=tuple(int(s) for s in _parse_floats(args.seeds, "seeds")),
        learn=learn,
        gen=gen,
    )
    rows, traces = harness.run_sweep(spec, collect_traces=bool(args.trace_out))
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            harness.write_sweep_csv(rows, fh)
    else:
        harness.write_sweep_csv(rows, sys.stdout)
    if args.trace_out:
        with open(args.trace_out, "w", encoding="utf-8", newline="") as fh:
            harness.write_trace_csv(traces, fh)
    return 0


_COMMANDS = {
    "gen": _cmd_gen,
    "solve": _cmd_solve,
    "oracle": _cmd_oracle,
    "round": _cmd_round,
    "sweep": _cmd_sweep,
}


def cli_main(argv: list[str] | None = None) -> int:
    """Entry point; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE_ERROR
    try:
        return _COMMANDS[args.command](args)
    except (
        ValidationError,
        InstanceFormatError,
        EnumerationBudgetError,
        OSError,
    ) as exc:
        print(f"edge-mta: error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
