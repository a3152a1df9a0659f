"""
One round, from allocation to payments
======================================

Run a full round on a small instance and follow the money: users pay
executing servers per consumed cycle; an executor that is not the
task's origin forwards the intermediary fee back to the origin. The
sum of all net incomes reproduces the allocation objective exactly.
"""

from edge_mta import (
    GeneratorParams,
    LearnConfig,
    Ledger,
    evaluate,
    generate_instance,
    run_round,
    server_net_income,
)

params = GeneratorParams(num_servers=3, num_tasks=6,
                         capacity_min=0.25, capacity_max=0.5)
inst = generate_instance(params, seed=3)

book = Ledger()   # in-memory; pass a path to mirror to a JSON-lines file
record = run_round(inst, solver="exact", round_no=book.next_round())
book.append(record)

print(f"round {record.round}: assignment {record.allocation.assignment}")

############################################################
# Payment flows

for payment in record.payments:
    print(f"  {payment.kind:16s} {payment.payer:9s} -> {payment.payee:9s} "
          f"{payment.amount:8.4f}")

############################################################
# Per-server profit and the books balancing

total = 0.0
for i in range(inst.num_servers):
    net = server_net_income(record, i)
    total += net
    origin_tasks = [t.id for t in inst.tasks if t.origin_server == i]
    print(f"server {i}: net income {net:+.4f}  (submitted tasks {origin_tasks})")

objective = evaluate(inst, record.allocation.assignment)
print(f"\nsum of net incomes  {total:+.6f}")
print(f"allocation objective {objective:+.6f}")

############################################################
# A second round appends to the same ledger

second = run_round(inst, solver="random", cfg=LearnConfig(seed=5),
                   round_no=book.next_round())
book.append(second)
print(f"\nledger now holds rounds {[r.round for r in book.records]}")
