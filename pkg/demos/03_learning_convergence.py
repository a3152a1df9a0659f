"""
Convergence behaviour of the learning solver
============================================

Run the same capacity-bound instances under two discount factors and
watch the best-so-far curves: the forward-looking agent (gamma=0.9)
locks onto good joint assignments sooner than the myopic one.

Writes the per-episode traces to ``convergence.csv`` in the harness
trace schema so they can be plotted later.
"""

import numpy as np

from edge_mta import GeneratorParams, LearnConfig, generate_instance, solve
from edge_mta.harness import TraceRow, write_trace_csv

params = GeneratorParams(num_servers=10, num_tasks=30,
                         capacity_min=0.25, capacity_max=0.5)
SEEDS = range(12)
EPISODES = 500

traces = []
for gamma in (0.1, 0.9):
    to_95 = []
    for seed in SEEDS:
        inst = generate_instance(params, seed)
        cfg = LearnConfig(episodes=EPISODES, learning_rate=0.5,
                          discount=gamma, epsilon=0.9, seed=seed)
        result = solve(inst, cfg)
        best = result.best_so_far_trajectory
        target = 0.95 * best[-1]
        to_95.append(next(k for k, v in enumerate(best) if v >= target))
        traces.extend(
            TraceRow(episode=k, reward=r, best_so_far=best[k],
                     alpha=cfg.learning_rate, gamma=gamma, seed=seed)
            for k, r in enumerate(result.reward_trajectory)
        )
    print(f"gamma={gamma}: episodes to reach 95% of final best "
          f"per seed {to_95}, median {np.median(to_95):.0f}")

############################################################
# A compact text rendering of one pair of curves

for gamma in (0.1, 0.9):
    curve = [t.best_so_far for t in traces if t.gamma == gamma and t.seed == 0]
    samples = [curve[k] for k in range(0, EPISODES, EPISODES // 10)]
    line = " ".join(f"{v:6.2f}" for v in samples)
    print(f"gamma={gamma} best-so-far every {EPISODES // 10} episodes: {line}")

with open("convergence.csv", "w", encoding="utf-8", newline="") as fh:
    write_trace_csv(traces, fh)
print(f"\nwrote {len(traces)} trace rows to convergence.csv")
