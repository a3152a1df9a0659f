import csv
import io

import pytest

from edge_mta.domain import ValidationError, parse_instance
from edge_mta.harness import (
    GeneratorParams,
    SweepSpec,
    configs_from_mapping,
    generate_instance,
    read_flat_config,
    run_sweep,
    scale_data_sizes,
    scale_prices,
    table_reward,
    write_sweep_csv,
    write_trace_csv,
)
from edge_mta.qlearning import LearnConfig, solve


class TestGenerator:
    def test_defaults_respect_ranges(self):
        params = GeneratorParams()
        inst = generate_instance(params, 42)
        assert inst.num_servers == 20
        assert inst.num_tasks == 50
        assert inst.intermediary_rate == 0.1
        assert inst.noise == 0.01
        for s in inst.servers:
            assert 1.0 <= s.cpu_frequency <= 10.0
            assert 200.0 <= s.capacity <= 400.0
            assert 5.0 <= s.bandwidth <= 10.0
            assert 5.0 <= s.tx_power <= 10.0
            assert 5.0 <= s.channel_gain <= 10.0
            assert s.cycles_per_sample == 0.01
            assert s.cpu_arch_coeff == 0.01
        for t in inst.tasks:
            assert 1.0 <= t.unit_price <= 10.0
            assert 10.0 <= t.data_size <= 20.0
            assert 1.0 <= t.deadline <= 100.0
            assert 0 <= t.origin_server < 20

    def test_deterministic_per_seed(self):
        params = GeneratorParams()
        assert generate_instance(params, 7) == generate_instance(params, 7)
        assert generate_instance(params, 7) != generate_instance(params, 8)

    def test_minimal_size(self):
        inst = generate_instance(GeneratorParams(num_servers=1, num_tasks=1), 0)
        assert (inst.num_servers, inst.num_tasks) == (1, 1)

    def test_bad_ranges_rejected(self):
        with pytest.raises(ValidationError):
            GeneratorParams(price_min=5.0, price_max=1.0)
        with pytest.raises(ValidationError):
            GeneratorParams(num_servers=10, num_tasks=5)

    def test_scaling_helpers(self):
        inst = generate_instance(GeneratorParams(num_servers=2, num_tasks=4), 0)
        priced = scale_prices(inst, 2.0)
        assert all(
            p.unit_price == pytest.approx(2 * t.unit_price)
            for p, t in zip(priced.tasks, inst.tasks)
        )
        sized = scale_data_sizes(inst, 1.5)
        assert all(
            s.data_size == pytest.approx(1.5 * t.data_size)
            for s, t in zip(sized.tasks, inst.tasks)
        )


class TestSweep:
    def small_spec(self, **kwargs):
        defaults = dict(
            axis="num_servers",
            values=(2.0, 3.0, 4.0),
            seeds=(0, 1, 2),
            learn=LearnConfig(episodes=20, seed=0),
            gen=GeneratorParams(num_servers=2, num_tasks=6, capacity_min=0.3,
                                capacity_max=0.6),
        )
        defaults.update(kwargs)
        return SweepSpec(**defaults)

    def test_cardinality(self):
        rows, _ = run_sweep(self.small_spec())
        assert len(rows) == 3 * 3 * 3

    def test_rows_sorted_by_key(self):
        rows, _ = run_sweep(self.small_spec())
        keys = [(r.value, r.seed, r.solver) for r in rows]
        solver_order = {"learning": 0, "greedy": 1, "random": 2}
        normalized = [(v, s, solver_order[sol]) for v, s, sol in keys]
        assert normalized == sorted(normalized)

    def test_csv_schema(self):
        rows, _ = run_sweep(self.small_spec())
        out = io.StringIO()
        write_sweep_csv(rows, out)
        reader = csv.reader(io.StringIO(out.getvalue()))
        header = next(reader)
        assert header == ["axis", "value", "seed", "solver", "total_reward", "wall_ms"]
        body = list(reader)
        assert len(body) == len(rows)
        assert all(len(line) == 6 for line in body)

    def test_rows_reproducible_by_rerunning_solver(self):
        spec = self.small_spec(axis="num_tasks", values=(4.0, 6.0), seeds=(1, 3))
        rows, _ = run_sweep(spec)
        from dataclasses import replace

        for row in rows:
            if row.solver != "learning":
                continue
            inst = generate_instance(
                replace(spec.gen, num_tasks=int(row.value)), row.seed
            )
            again = solve(inst, replace(spec.learn, seed=row.seed))
            assert again.best_reward == row.total_reward

    def test_price_scale_rows_increase(self):
        spec = self.small_spec(
            axis="price_scale", values=(1.0, 2.0), seeds=(0,),
            learn=LearnConfig(episodes=150, seed=0),
        )
        rows, _ = run_sweep(spec)
        learning = {r.value: r.total_reward for r in rows if r.solver == "learning"}
        assert learning[2.0] > learning[1.0]

    def test_validation_failures_become_error_rows(self):
        # axis pushes num_servers above num_tasks: instances are invalid
        spec = self.small_spec(values=(4.0, 8.0), seeds=(0,))
        rows, _ = run_sweep(spec)
        bad = [r for r in rows if r.value == 8.0]
        assert len(bad) == 3
        assert all(r.total_reward is None for r in bad)
        out = io.StringIO()
        write_sweep_csv(bad, out)
        for line in out.getvalue().strip().splitlines()[1:]:
            assert line.split(",")[4] == ""

    def test_traces_emitted_for_discount_axis(self):
        spec = self.small_spec(
            axis="discount", values=(0.1, 0.9), seeds=(0,),
            learn=LearnConfig(episodes=25, seed=0),
        )
        rows, traces = run_sweep(spec, collect_traces=True)
        gammas = {t.gamma for t in traces}
        assert gammas == {0.1, 0.9}
        per_gamma = [t for t in traces if t.gamma == 0.1]
        assert len(per_gamma) == 25
        assert [t.episode for t in per_gamma] == list(range(25))
        best = [t.best_so_far for t in per_gamma]
        assert all(b2 >= b1 for b1, b2 in zip(best, best[1:]))
        out = io.StringIO()
        write_trace_csv(traces, out)
        header = out.getvalue().splitlines()[0]
        assert header == "episode,reward,best_so_far,alpha,gamma,seed"

    def test_spec_validation(self):
        with pytest.raises(ValidationError, match="axis"):
            self.small_spec(axis="bogus")
        with pytest.raises(ValidationError, match="values"):
            self.small_spec(values=())
        with pytest.raises(ValidationError, match="increasing"):
            self.small_spec(values=(3.0, 2.0))
        with pytest.raises(ValidationError, match="seeds"):
            self.small_spec(seeds=())


class TestFlatConfig:
    def test_parse_and_overlay(self):
        text = """
        # experiment settings
        episodes = 40
        learning_rate = 0.5
        num_servers = 4
        num_tasks = 9
        capacity_min = 0.2   # binding
        capacity_max = 0.4
        """
        mapping = read_flat_config(text)
        learn, gen = configs_from_mapping(mapping)
        assert learn.episodes == 40
        assert learn.learning_rate == 0.5
        assert gen.num_servers == 4
        assert gen.capacity_min == 0.2

    def test_bad_lines(self):
        with pytest.raises(ValidationError, match="line 1"):
            read_flat_config("episodes 40")
        with pytest.raises(ValidationError, match="not a number"):
            read_flat_config("episodes = many")

    def test_unknown_keys_rejected(self):
        with pytest.raises(ValidationError, match="unknown config keys"):
            configs_from_mapping({"episodez": 1.0})


def test_table_reward_matches_solver_metric():
    inst = generate_instance(
        GeneratorParams(num_servers=3, num_tasks=8, capacity_min=0.2,
                        capacity_max=0.4), 4
    )
    result = solve(inst, LearnConfig(episodes=80, seed=4))
    assert table_reward(inst, result.best_assignment) == result.best_reward
