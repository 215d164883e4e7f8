from fractions import Fraction

import pytest

from kgreedy.crashing import (
    cost_ratio_bound,
    decompose,
    greedy_crash,
    optimal_one_crash,
    verify_trace,
)
from kgreedy.errors import (
    ConvexNotSupportedError,
    NotCrashableError,
    NotKCrashingError,
)
from kgreedy.generators import (
    RandomNetSpec,
    counterexample_network,
    random_network,
    with_convex_schedules,
)
from kgreedy.network import (
    Edge,
    Plan,
    ProjectNetwork,
    apply_plan,
    duration,
    k_max,
    linear_schedule,
    plan_cost,
)
from kgreedy.oracle import exact_crash_cost
from support import removing_disconnects


def small_nets(count=60):
    for seed in range(count):
        yield random_network(RandomNetSpec(node_count=4 + seed % 2, edge_count=7, seed=seed))


class TestOptimalOneCrash:
    def test_counterexample_first_step(self):
        plan, cost = optimal_one_crash(counterexample_network())
        assert plan == Plan({"j3": 1})
        assert cost == 9

    def test_counterexample_second_step(self):
        net = apply_plan(counterexample_network(), Plan({"j3": 1}))
        plan, cost = optimal_one_crash(net)
        assert plan == Plan({"j1": 1, "j2": 1})
        assert cost == 19

    def test_single_edge(self):
        e = Edge("e", "s", "t", 1, 3, linear_schedule(5, 2))
        net = ProjectNetwork(("s", "t"), "s", "t", (e,))
        assert optimal_one_crash(net) == (Plan({"e": 1}), Fraction(5))

    def test_rigid_network_not_crashable(self):
        e = Edge("e", "s", "t", 3, 3, ())
        with pytest.raises(NotCrashableError):
            optimal_one_crash(ProjectNetwork(("s", "t"), "s", "t", (e,)))

    def test_jobless_network_not_crashable(self):
        with pytest.raises(NotCrashableError):
            optimal_one_crash(ProjectNetwork(("s",), "s", "s", ()))

    def test_reduces_duration_by_exactly_one(self):
        for net in small_nets(40):
            if k_max(net) < 1:
                continue
            plan, _ = optimal_one_crash(net)
            assert duration(apply_plan(net, plan)) == duration(net) - 1


class TestGreedyCrash:
    def test_counterexample_total(self):
        result = greedy_crash(counterexample_network(), 2)
        assert result.total_cost == 28
        assert [sorted(s.edges) for s in result.steps] == [["j3"], ["j1", "j2"]]
        assert result.durations == (8, 7)

    def test_k_one_matches_single_step(self):
        for net in small_nets(20):
            if k_max(net) < 1:
                continue
            plan, cost = optimal_one_crash(net)
            result = greedy_crash(net, 1)
            assert result.plan == plan
            assert result.total_cost == cost

    def test_infeasible_k_reports_failing_iteration(self):
        net = counterexample_network()
        with pytest.raises(NotCrashableError) as exc:
            greedy_crash(net, 99)
        assert exc.value.iteration == k_max(net) + 1

    def test_accumulated_plan_is_i_crashing_each_step(self):
        for net in small_nets(20):
            km = min(3, k_max(net))
            if km < 1:
                continue
            result = greedy_crash(net, km)
            base = duration(net)
            partial = Plan()
            for i, step in enumerate(result.steps, start=1):
                partial = partial.merge(Plan({e: 1 for e in step.edges}))
                assert duration(apply_plan(net, partial)) == base - i

    def test_total_cost_equals_plan_cost(self):
        for net in small_nets(20):
            km = min(3, k_max(net))
            if km < 1:
                continue
            result = greedy_crash(net, km)
            assert result.total_cost == sum((s.cost for s in result.steps), Fraction(0))
            assert result.total_cost == plan_cost(net, result.plan)

    def test_within_harmonic_factor_of_oracle(self):
        for net in small_nets(40):
            for k in range(1, min(3, k_max(net)) + 1):
                greedy = greedy_crash(net, k).total_cost
                _, opt = exact_crash_cost(net, k)
                assert greedy <= cost_ratio_bound(k) * opt

    def test_convex_schedules_within_bound(self):
        for seed in range(40):
            net = with_convex_schedules(
                random_network(RandomNetSpec(node_count=5, edge_count=8, seed=seed)),
                seed=seed + 1000,
            )
            if k_max(net) < 2:
                continue
            result = greedy_crash(net, 2)
            # marginal step costs must add up to the plan's prefix-sum cost
            assert result.total_cost == plan_cost(net, result.plan)
            _, opt = exact_crash_cost(net, 2)
            assert result.total_cost <= cost_ratio_bound(2) * opt

    def test_convex_marginals_switch_edges(self):
        # day one of e1 is cheap, day two is prohibitive: the second greedy
        # step must move to e2 and match the exact optimum
        e1 = Edge("e1", "s", "u", 0, 2, (Fraction(1), Fraction(100)))
        e2 = Edge("e2", "u", "t", 0, 2, (Fraction(3), Fraction(3)))
        net = ProjectNetwork(("s", "u", "t"), "s", "t", (e1, e2))
        result = greedy_crash(net, 2)
        assert [sorted(s.edges) for s in result.steps] == [["e1"], ["e2"]]
        assert result.total_cost == 4
        assert exact_crash_cost(net, 2)[1] == 4

    def test_exact_cost_at_least_k_times_one_step(self):
        # the key lower bound: any k-day plan costs at least k single steps
        for net in small_nets(40):
            km = min(3, k_max(net))
            if km < 1:
                continue
            _, one = optimal_one_crash(net)
            for k in range(1, km + 1):
                _, opt = exact_crash_cost(net, k)
                assert opt >= k * one


class TestDecompose:
    def test_counterexample_trace(self):
        net = counterexample_network()
        trace = decompose(net, Plan({"j1": 1, "j5": 1}), 2)
        cuts = [level.cut for level in trace.levels]
        assert sorted(map(sorted, cuts)) == [["j1"], ["j5"]]
        assert [level.cut_cost for level in trace.levels] == [10, 10]
        assert trace.levels[0].cut_cost <= trace.levels[1].cut_cost

    def test_single_level_is_cheapest_cut_within_plan(self):
        net = counterexample_network()
        trace = decompose(net, Plan({"j1": 1, "j5": 1}), 1)
        assert len(trace.levels) == 1
        level = trace.levels[0]
        assert level.cut <= Plan({"j1": 1, "j5": 1}).support()
        assert level.cut_cost == 10
        assert removing_disconnects(level.critical, level.cut)

    def test_rejects_insufficient_plan(self):
        with pytest.raises(NotKCrashingError):
            decompose(counterexample_network(), Plan({"j3": 1}), 2)

    def test_rejects_convex_schedules(self):
        e = Edge("e", "s", "t", 1, 3, (Fraction(2), Fraction(5)))
        net = ProjectNetwork(("s", "t"), "s", "t", (e,))
        with pytest.raises(ConvexNotSupportedError):
            decompose(net, Plan({"e": 2}), 2)

    def test_overcrashing_plan_accepted_at_stated_k(self):
        net = counterexample_network()
        plan, _ = exact_crash_cost(net, 3)
        trace = decompose(net, plan, 2)
        assert len(trace.levels) == 2
        assert verify_trace(trace).passed

    def test_residual_plans_shrink_by_cut_units(self):
        net = counterexample_network()
        plan, _ = exact_crash_cost(net, 3)
        trace = decompose(net, plan, 3)
        for cur, nxt in zip(trace.levels, trace.levels[1:]):
            assert nxt.remaining_plan == cur.remaining_plan.subtract_units(cur.cut)


class TestVerifyTrace:
    def test_counterexample_trace_passes(self):
        net = counterexample_network()
        trace = decompose(net, Plan({"j1": 1, "j5": 1}), 2)
        report = verify_trace(trace)
        assert report.passed
        assert report.failures() == ()

    def test_random_oracle_plans_all_pass(self):
        # 200 seeded instances, oracle-optimal plans, every claim checked
        checked = 0
        seed = 0
        while checked < 200:
            net = random_network(
                RandomNetSpec(node_count=4 + seed % 2, edge_count=7, max_crashable=2, seed=seed)
            )
            seed += 1
            km = min(3, k_max(net))
            if km < 1:
                continue
            for k in range(1, km + 1):
                plan, _ = exact_crash_cost(net, k)
                report = verify_trace(decompose(net, plan, k))
                assert report.passed, report.failures()
                checked += 1

    def test_greedy_plans_also_decompose_cleanly(self):
        for net in small_nets(30):
            km = min(3, k_max(net))
            if km < 1:
                continue
            result = greedy_crash(net, km)
            report = verify_trace(decompose(net, result.plan, km))
            assert report.passed, report.failures()
