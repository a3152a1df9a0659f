import numpy as np
import pytest

from edge_mta.allocation import check_feasible, evaluate, task_contribution
from edge_mta.baselines import solve_exact
from edge_mta.domain import UNASSIGNED, Instance, ValidationError
from edge_mta.harness import GeneratorParams, generate_instance
from edge_mta.rewards import build_reward_table

from conftest import make_server, make_task

REL_TOL = 1e-9

OWN_FEASIBLE = 0.496
ORIGIN_TERM = -0.9534332462490533   # 0.1*5*0.1 - 1.00343...
FOREIGN_TOTAL = ORIGIN_TERM + 0.446


class TestCheckFeasible:
    def test_all_unassigned_ok(self, two_servers):
        report = check_feasible(two_servers, (UNASSIGNED, UNASSIGNED))
        assert report.ok
        assert report.violations == ()

    def test_capacity_violation_reports_measured_load(self):
        inst = Instance(
            servers=(make_server(mu=0.15),),
            tasks=(make_task(id=0), make_task(id=1)),
            intermediary_rate=0.1,
            noise=0.01,
        )
        report = check_feasible(inst, (0, 0))
        assert not report.ok
        [violation] = report.violations
        assert violation.constraint == "C1"
        assert violation.index == 0
        assert violation.measured == pytest.approx(0.2, rel=REL_TOL)
        assert violation.bound == 0.15

    def test_deadline_violation_on_foreign_assignment(self):
        # 0.05 compute + 0.10034 origin transmission > 0.1 deadline
        inst = Instance(
            servers=(make_server(id=0), make_server(id=1)),
            tasks=(make_task(id=0, tau=0.1), make_task(id=1)),
            intermediary_rate=0.1,
            noise=0.01,
        )
        report = check_feasible(inst, (1, UNASSIGNED))
        assert not report.ok
        [violation] = report.violations
        assert violation.constraint == "C2"
        assert violation.index == 0
        assert violation.measured == pytest.approx(0.15034332462490533, rel=REL_TOL)
        assert violation.bound == 0.1

    def test_invalid_index_raises(self, single_pair):
        with pytest.raises(ValidationError):
            check_feasible(single_pair, (3,))
        with pytest.raises(ValidationError):
            check_feasible(single_pair, (0, 0))


class TestEvaluate:
    def test_single_own_assignment(self, single_pair):
        assert evaluate(single_pair, (0,)) == pytest.approx(OWN_FEASIBLE, rel=REL_TOL)

    def test_foreign_assignment_sums_both_sides(self, two_servers):
        value = evaluate(two_servers, (1, UNASSIGNED))
        assert value == pytest.approx(FOREIGN_TOTAL, rel=REL_TOL)

    def test_all_unassigned_is_zero(self, two_servers):
        assert evaluate(two_servers, (UNASSIGNED, UNASSIGNED)) == 0.0

    def test_invalid_index_raises(self, single_pair):
        with pytest.raises(ValidationError):
            evaluate(single_pair, (1,))


class TestProperties:
    def _instance(self, seed):
        return generate_instance(
            GeneratorParams(num_servers=4, num_tasks=9, capacity_min=0.3,
                            capacity_max=0.8), seed
        )

    def test_additivity_over_task_subsets(self):
        rng = np.random.default_rng(0)
        for seed in range(10):
            inst = self._instance(seed)
            assignment = [int(rng.integers(-1, inst.num_servers))
                          for _ in range(inst.num_tasks)]
            half = [a if j % 2 == 0 else UNASSIGNED for j, a in enumerate(assignment)]
            other = [a if j % 2 == 1 else UNASSIGNED for j, a in enumerate(assignment)]
            total = evaluate(inst, assignment)
            assert total == pytest.approx(
                evaluate(inst, half) + evaluate(inst, other), rel=1e-12, abs=1e-12
            )

    def test_matches_reward_table_plus_origin_terms(self):
        rng = np.random.default_rng(1)
        for seed in range(10):
            inst = self._instance(seed)
            table = build_reward_table(inst)
            assignment = [int(rng.integers(-1, inst.num_servers))
                          for _ in range(inst.num_tasks)]
            expected = 0.0
            for j, k in enumerate(assignment):
                if k == UNASSIGNED:
                    continue
                tsk = inst.tasks[j]
                if k == tsk.origin_server:
                    expected += task_contribution(inst, j, k)
                else:
                    # assignee side must be the foreign table entry when the
                    # pair is feasible; add the origin handoff term on top
                    origin = inst.servers[tsk.origin_server]
                    from edge_mta import costs

                    fee = (inst.intermediary_rate * tsk.unit_price
                           * costs.cycles_required(origin, tsk))
                    origin_term = fee - costs.comm_energy(origin, tsk, inst.noise)
                    if table.feasible[k, j]:
                        expected += float(table.values[k, j]) + origin_term
                    else:
                        expected += task_contribution(inst, j, k)
            assert evaluate(inst, assignment) == pytest.approx(
                expected, rel=1e-12, abs=1e-12
            )

    def test_oracle_argmax_invariant_under_uniform_scaling(self):
        # scaling prices and both energy channels by c > 0 rescales every
        # utility term, so the optimal assignment cannot change
        for seed in range(4):
            inst = generate_instance(
                GeneratorParams(num_servers=3, num_tasks=5, capacity_min=0.2,
                                capacity_max=0.5), seed
            )
            base = solve_exact(inst).assignment
            for c in (0.5, 3.0):
                scaled = Instance(
                    servers=tuple(
                        make_server(
                            id=s.id,
                            alpha=s.cpu_arch_coeff * c,
                            theta=s.cycles_per_sample,
                            f=s.cpu_frequency,
                            mu=s.capacity,
                            B=s.bandwidth,
                            H=s.tx_power * c,
                            G=s.channel_gain / c,
                        )
                        for s in inst.servers
                    ),
                    tasks=tuple(
                        make_task(
                            id=t.id,
                            p=t.unit_price * c,
                            D=t.data_size,
                            tau=t.deadline,
                            origin=t.origin_server,
                        )
                        for t in inst.tasks
                    ),
                    intermediary_rate=inst.intermediary_rate,
                    noise=inst.noise,
                )
                assert solve_exact(scaled).assignment == base
