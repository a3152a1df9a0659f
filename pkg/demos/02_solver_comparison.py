"""
Four solvers on one small instance
==================================

Generate a capacity-bound instance small enough for the exact oracle,
then compare: exhaustive search, the learning solver, greedy, random.
"""

from edge_mta import (
    GeneratorParams,
    LearnConfig,
    check_feasible,
    generate_instance,
    solve,
    solve_exact,
    solve_greedy,
    solve_random,
    table_reward,
)

params = GeneratorParams(
    num_servers=3,
    num_tasks=7,
    capacity_min=0.2,     # each server fits only one or two tasks
    capacity_max=0.45,
)
inst = generate_instance(params, seed=11)
print(f"instance: {inst.num_servers} servers, {inst.num_tasks} tasks")
for s in inst.servers:
    print(f"  server {s.id}: capacity {s.capacity:.2f} cycles, "
          f"f={s.cpu_frequency:.2f}")

############################################################
# Ground truth first

exact = solve_exact(inst)
print(f"\nexact     : objective {exact.total_utility:+.4f}  "
      f"assignment {exact.assignment}")

############################################################
# The learning solver explores episode by episode

result = solve(inst, LearnConfig(episodes=800, learning_rate=0.9,
                                 discount=0.9, epsilon=0.9, seed=11))
alloc = result.best_assignment
print(f"learning  : objective {alloc.total_utility:+.4f}  "
      f"assignment {alloc.assignment}")
print(f"            best episode reward {result.best_reward:.4f} "
      f"(found at episode "
      f"{result.reward_trajectory.index(result.best_reward)})")

############################################################
# Benchmarks

greedy = solve_greedy(inst)
random_ = solve_random(inst, seed=11)
print(f"greedy    : objective {greedy.total_utility:+.4f}  "
      f"assignment {greedy.assignment}")
print(f"random    : objective {random_.total_utility:+.4f}  "
      f"assignment {random_.assignment}")

############################################################
# Everyone plays by the rules, and the shared table metric lines up

for name, a in [("exact", exact), ("learning", alloc),
                ("greedy", greedy), ("random", random_)]:
    report = check_feasible(inst, a.assignment)
    print(f"{name:9s}: feasible={report.ok}  "
          f"table reward {table_reward(inst, a):.4f}")
