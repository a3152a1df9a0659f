"""
Cost quantities and the reward table
====================================

Walk through every per-pair quantity for a tiny hand-built scenario:
two servers, two tasks, both tasks submitted through server 0.
"""

from edge_mta import (
    Instance,
    ServerSpec,
    TaskSpec,
    build_reward_table,
    pair_costs,
    pair_reward,
    pair_time,
)

server_a = ServerSpec(
    id=0,
    cpu_arch_coeff=0.01,
    cycles_per_sample=0.01,
    cpu_frequency=2.0,
    capacity=1.0,
    bandwidth=5.0,
    tx_power=10.0,
    channel_gain=10.0,
)
server_b = ServerSpec(
    id=1,
    cpu_arch_coeff=0.01,
    cycles_per_sample=0.01,
    cpu_frequency=8.0,    # faster clock, much higher energy bill
    capacity=1.0,
    bandwidth=5.0,
    tx_power=5.0,
    channel_gain=20.0,
)
tasks = (
    TaskSpec(id=0, unit_price=5.0, data_size=10.0, deadline=50.0, origin_server=0),
    TaskSpec(id=1, unit_price=2.0, data_size=20.0, deadline=0.08, origin_server=0),
)
inst = Instance(servers=(server_a, server_b), tasks=tasks,
                intermediary_rate=0.1, noise=0.01)

############################################################
# Per-pair cost quantities

for server in inst.servers:
    for task in inst.tasks:
        bundle = pair_costs(server, task, inst.noise)
        print(f"server {server.id} / task {task.id}: "
              f"cycles={bundle.cycles:.3f} e_comp={bundle.e_comp:.4f} "
              f"t_comp={bundle.t_comp:.4f} rate={bundle.rate:.2f} "
              f"t_comm={bundle.t_comm:.4f} e_comm={bundle.e_comm:.4f}")

############################################################
# Completion times under both assignment hypotheses
#
# Task 1 has a 0.08 s deadline. Server 0 computes it in 0.1 s, so even
# its own server cannot finish it in time.

for i in (0, 1):
    for j in (0, 1):
        assigned = pair_time(inst, i, j, assigned=True)
        idle = pair_time(inst, i, j, assigned=False)
        print(f"pair ({i},{j}): time if assigned {assigned:.4f}, "
              f"if not {idle:.4f}, deadline {inst.tasks[j].deadline}")

############################################################
# Rewards, branch by branch
#
# Task 0 on its own server: full payment minus compute energy.
# Task 0 on server 1: fee-reduced payment minus server 1's energy.
# Task 1 anywhere: infeasible; the origin sees the handoff branch
# (fee income minus transmission energy, here a loss), foreigners see 0.

for i in (0, 1):
    for j in (0, 1):
        print(f"reward({i},{j}) = {pair_reward(inst, i, j):+.4f}")

table = build_reward_table(inst)
print("\nreward table (rows = servers, columns = tasks):")
print(table.values.round(4))
print("feasible pairs:")
print(table.feasible)
