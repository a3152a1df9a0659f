"""
A full experiment sweep
=======================

Vary the number of servers available to a fixed batch of tasks, run all
three solvers per (value, seed) cell, and aggregate like the figure
scripts do: mean total reward per solver per axis value. With capacity
this tight, extra servers mean more tasks actually get placed.

Writes ``sweep_servers.csv`` in the harness schema; the same file feeds
the plotting frontend.
"""

from collections import defaultdict

from edge_mta import GeneratorParams, LearnConfig, SweepSpec, run_sweep
from edge_mta.harness import write_sweep_csv

spec = SweepSpec(
    axis="num_servers",
    values=(4.0, 8.0, 12.0),
    seeds=(0, 1, 2, 3),
    learn=LearnConfig(episodes=300, learning_rate=0.9, discount=0.9,
                      epsilon=0.9),
    gen=GeneratorParams(num_servers=8, num_tasks=30,
                        capacity_min=0.2, capacity_max=0.45),
)
rows, _ = run_sweep(spec)

############################################################
# Aggregate: mean over seeds for each (value, solver) cell

cells = defaultdict(list)
for row in rows:
    cells[(row.value, row.solver)].append(row.total_reward)

print(f"{'servers':>7} {'learning':>10} {'greedy':>10} {'random':>10}")
for value in spec.values:
    means = {
        solver: sum(cells[(value, solver)]) / len(cells[(value, solver)])
        for solver in ("learning", "greedy", "random")
    }
    print(f"{value:7.0f} {means['learning']:10.3f} {means['greedy']:10.3f} "
          f"{means['random']:10.3f}")

############################################################
# Timing is recorded per cell as well

slowest = max(rows, key=lambda r: r.wall_ms)
print(f"\nslowest cell: {slowest.solver} at {slowest.value:.0f} servers, "
      f"seed {slowest.seed}: {slowest.wall_ms:.1f} ms")

with open("sweep_servers.csv", "w", encoding="utf-8", newline="") as fh:
    write_sweep_csv(rows, fh)
print(f"wrote {len(rows)} rows to sweep_servers.csv")
