"""Greedy project crashing and its minimum-cut decomposition.

The greedy algorithm shortens the project one day at a time: each step
computes the critical graph, prices every still-crashable critical edge at
its next marginal cost (exhausted edges get unbounded capacity), and takes a
minimum s-t cut as the cheapest one-day plan.  Convex schedules work
transparently because the next marginal cost is always the head of the
remaining schedule.

``decompose``/``verify_trace`` rebuild, from any k-day plan, the chain of
residual plans and restricted minimum cuts whose costs are provably
monotone, together with the cut-overlap partitions that witness it.  They
are the machine-checkable counterpart of the greedy cost bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import flow
from .errors import ConvexNotSupportedError, NotCrashableError, NotKCrashingError
from .network import (
    EdgeId,
    Plan,
    ProjectNetwork,
    apply_plan,
    critical_graph,
    duration,
    is_k_crashing,
)


def cost_ratio_bound(k: int) -> Fraction:
    """Guaranteed worst-case factor between the greedy and the optimal cost.

    The greedy k-day plan costs at most (1/1 + 1/2 + ... + 1/k) times the
    cheapest k-day plan, for linear and convex schedules alike.
    """
    return sum((Fraction(1, i) for i in range(1, k + 1)), Fraction(0))


@dataclass(frozen=True)
class CrashStep:
    """One greedy iteration: the chosen cut and the day's cost."""

    edges: frozenset[EdgeId]
    cost: Fraction


@dataclass(frozen=True)
class GreedyCrashResult:
    steps: tuple[CrashStep, ...]
    plan: Plan
    total_cost: Fraction
    durations: tuple[int, ...]


def _crash_flow_graph(critical: ProjectNetwork) -> flow.FlowGraph:
    arcs = []
    for e in critical.edges:
        if e.normal_len > e.min_len:
            cap = e.cost_schedule[0]
        else:
            cap = flow.UNBOUNDED
        arcs.append(flow.Arc(id=e.id, src=e.src, dst=e.dst, capacity=cap))
    return flow.FlowGraph(
        nodes=critical.nodes, source=critical.source, sink=critical.sink, arcs=tuple(arcs)
    )


def optimal_one_crash(net: ProjectNetwork) -> tuple[Plan, Fraction]:
    """Cheapest plan shortening the project by exactly one day.

    Realized as a minimum cut of the critical graph where each crashable
    edge is priced at its next marginal cost.
    """
    if net.source == net.sink:
        raise NotCrashableError("the project has no jobs")
    cut = flow.min_cut(_crash_flow_graph(critical_graph(net)))
    if flow.is_unbounded(cut.cost):
        raise NotCrashableError("every critical path contains a fully crashed edge")
    return Plan({edge_id: 1 for edge_id in cut.cut_arcs}), cut.cost


def greedy_crash(net: ProjectNetwork, k: int) -> GreedyCrashResult:
    """Run the one-day greedy k times, accumulating the plan as a multiset."""
    if k < 1:
        raise ValueError("k must be at least 1")
    current = net
    accumulated = Plan()
    steps: list[CrashStep] = []
    durations: list[int] = []
    total = Fraction(0)
    for i in range(1, k + 1):
        try:
            step_plan, step_cost = optimal_one_crash(current)
        except NotCrashableError:
            raise NotCrashableError(
                f"no {k}-day plan exists: day {i} cannot be saved", iteration=i
            ) from None
        current = apply_plan(current, step_plan)
        accumulated = accumulated.merge(step_plan)
        steps.append(CrashStep(edges=frozenset(step_plan.amounts), cost=step_cost))
        durations.append(duration(current))
        total += step_cost
    return GreedyCrashResult(
        steps=tuple(steps),
        plan=accumulated,
        total_cost=total,
        durations=tuple(durations),
    )


# -- decomposition trace ------------------------------------------------------

@dataclass(frozen=True)
class TraceLevel:
    """One level of the decomposition.

    ``network`` is the level's project, ``critical`` its critical graph, and
    ``cut`` the minimum cut of ``critical`` restricted to the edges still
    carried by ``remaining_plan``.  The partition sides and the edge classes
    (within the source side, within the sink side, crossing backwards) are
    taken from the same cut.
    """

    network: ProjectNetwork
    critical: ProjectNetwork
    remaining_plan: Plan
    cut: frozenset[EdgeId]
    cut_cost: Fraction
    source_side: frozenset[str]
    sink_side: frozenset[str]
    source_side_edges: frozenset[EdgeId]
    sink_side_edges: frozenset[EdgeId]
    reverse_edges: frozenset[EdgeId]


@dataclass(frozen=True)
class LevelPair:
    """How two consecutive cuts overlap.

    The next cut splits into the parts ahead of, shared with, and behind the
    current cut; the current cut splits the same way against the next level,
    plus the part that crosses the next partition backwards.
    """

    next_cut_ahead: frozenset[EdgeId]
    next_cut_shared: frozenset[EdgeId]
    next_cut_behind: frozenset[EdgeId]
    cur_cut_ahead: frozenset[EdgeId]
    cur_cut_shared: frozenset[EdgeId]
    cur_cut_behind: frozenset[EdgeId]
    cur_cut_reverse: frozenset[EdgeId]


@dataclass(frozen=True)
class DecompositionTrace:
    network: ProjectNetwork
    plan: Plan
    k: int
    levels: tuple[TraceLevel, ...]
    pairs: tuple[LevelPair, ...]


def _restricted_cut_graph(critical: ProjectNetwork, remaining: Plan) -> flow.FlowGraph:
    # Edges outside the plan get unbounded capacity, so a finite minimum cut
    # consists of plan edges only.
    arcs = []
    for e in critical.edges:
        if remaining.amount(e.id) >= 1:
            cap = e.cost_schedule[0]
        else:
            cap = flow.UNBOUNDED
        arcs.append(flow.Arc(id=e.id, src=e.src, dst=e.dst, capacity=cap))
    return flow.FlowGraph(
        nodes=critical.nodes, source=critical.source, sink=critical.sink, arcs=tuple(arcs)
    )


def _edge_classes(critical: ProjectNetwork, source_side: frozenset[str]):
    within_src, within_snk, reverse = set(), set(), set()
    for e in critical.edges:
        src_in = e.src in source_side
        dst_in = e.dst in source_side
        if src_in and dst_in:
            within_src.add(e.id)
        elif not src_in and not dst_in:
            within_snk.add(e.id)
        elif not src_in and dst_in:
            reverse.add(e.id)
    return frozenset(within_src), frozenset(within_snk), frozenset(reverse)


def decompose(net: ProjectNetwork, plan: Plan, k: int) -> DecompositionTrace:
    """Build the k-level cut decomposition of a k-day plan.

    Linear schedules only: the cost of a cut must not depend on the order in
    which plan units are consumed.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    for e in net.edges:
        if not e.is_linear():
            raise ConvexNotSupportedError(f"edge {e.id!r} has a non-constant schedule")
    if not is_k_crashing(net, plan, k):
        raise NotKCrashingError(f"plan shortens the project by fewer than {k} days")

    levels: list[TraceLevel] = []
    current = net
    remaining = plan
    for i in range(1, k + 1):
        critical = critical_graph(current)
        cut = flow.min_cut(_restricted_cut_graph(critical, remaining))
        if flow.is_unbounded(cut.cost):
            raise NotKCrashingError(
                f"level {i}: the remaining plan contains no cut of the critical graph"
            )
        within_src, within_snk, reverse = _edge_classes(critical, cut.source_side)
        levels.append(
            TraceLevel(
                network=current,
                critical=critical,
                remaining_plan=remaining,
                cut=cut.cut_arcs,
                cut_cost=cut.cost,
                source_side=cut.source_side,
                sink_side=cut.sink_side,
                source_side_edges=within_src,
                sink_side_edges=within_snk,
                reverse_edges=reverse,
            )
        )
        current = apply_plan(critical, Plan({edge_id: 1 for edge_id in cut.cut_arcs}))
        remaining = remaining.subtract_units(cut.cut_arcs)

    pairs: list[LevelPair] = []
    for cur, nxt in zip(levels, levels[1:]):
        pairs.append(
            LevelPair(
                next_cut_ahead=nxt.cut & cur.sink_side_edges,
                next_cut_shared=nxt.cut & cur.cut,
                next_cut_behind=nxt.cut & cur.source_side_edges,
                cur_cut_ahead=cur.cut & nxt.sink_side_edges,
                cur_cut_shared=cur.cut & nxt.cut,
                cur_cut_behind=cur.cut & nxt.source_side_edges,
                cur_cut_reverse=cur.cut & nxt.reverse_edges,
            )
        )
    return DecompositionTrace(network=net, plan=plan, k=k, levels=tuple(levels), pairs=tuple(pairs))


# -- trace verification -------------------------------------------------------

@dataclass(frozen=True)
class TraceCheck:
    name: str
    level: int
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class TraceReport:
    checks: tuple[TraceCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> tuple[TraceCheck, ...]:
        return tuple(c for c in self.checks if not c.passed)


def _disconnects(g: ProjectNetwork, removed: frozenset[EdgeId]) -> bool:
    out: dict[str, list[str]] = {v: [] for v in g.nodes}
    for e in g.edges:
        if e.id not in removed:
            out[e.src].append(e.dst)
    seen = {g.source}
    stack = [g.source]
    while stack:
        u = stack.pop()
        for v in out[u]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return g.sink not in seen


def verify_trace(trace: DecompositionTrace) -> TraceReport:
    """Check every structural claim the decomposition is supposed to satisfy.

    Failures are reported rather than raised: a genuine failure would mean
    the monotone-cut argument itself is broken, which is exactly what the
    report is for.
    """
    checks: list[TraceCheck] = []
    base = duration(trace.levels[0].network)

    for i, level in enumerate(trace.levels, start=1):
        got = duration(level.network)
        want = base - (i - 1)
        checks.append(
            TraceCheck(
                "duration-decrement", i, got == want,
                f"duration {got}, expected {want}",
            )
        )
        not_in_plan = level.cut - level.remaining_plan.support()
        checks.append(
            TraceCheck(
                "cut-within-plan", i, not not_in_plan,
                f"cut edges outside the remaining plan: {sorted(not_in_plan)}",
            )
        )
        checks.append(
            TraceCheck(
                "cut-disconnects", i, _disconnects(level.critical, level.cut),
                "removing the cut must disconnect the critical graph",
            )
        )

    for i, (cur, nxt, pair) in enumerate(
        zip(trace.levels, trace.levels[1:], trace.pairs), start=1
    ):
        checks.append(
            TraceCheck(
                "reverse-cut-disjoint", i, not (nxt.cut & cur.reverse_edges),
                "next cut must avoid arcs crossing the current partition backwards",
            )
        )
        next_critical_ids = frozenset(e.id for e in nxt.critical.edges)
        checks.append(
            TraceCheck(
                "cut-stays-critical", i, cur.cut <= next_critical_ids,
                f"cut edges dropped from the next critical graph: "
                f"{sorted(cur.cut - next_critical_ids)}",
            )
        )
        checks.append(
            TraceCheck(
                "cut-cost-monotone", i, cur.cut_cost <= nxt.cut_cost,
                f"cost {cur.cut_cost} then {nxt.cut_cost}",
            )
        )
        parts_next = (pair.next_cut_ahead, pair.next_cut_shared, pair.next_cut_behind)
        checks.append(
            TraceCheck(
                "next-cut-partitioned", i,
                _is_partition(parts_next, nxt.cut),
                "ahead/shared/behind must partition the next cut",
            )
        )
        parts_cur = (
            pair.cur_cut_ahead, pair.cur_cut_shared, pair.cur_cut_behind, pair.cur_cut_reverse,
        )
        checks.append(
            TraceCheck(
                "cur-cut-partitioned", i,
                _is_partition(parts_cur, cur.cut),
                "ahead/shared/behind/reverse must partition the current cut",
            )
        )
        checks.append(
            TraceCheck(
                "shared-classes-equal", i, pair.next_cut_shared == pair.cur_cut_shared,
                "both cuts must agree on their shared part",
            )
        )
        forward = pair.next_cut_ahead | pair.cur_cut_shared | pair.cur_cut_ahead
        checks.append(
            TraceCheck(
                "forward-mix-contains-cut", i, _disconnects(cur.critical, forward),
                "next-ahead + shared + cur-ahead must contain a cut of the current critical graph",
            )
        )
        backward = pair.next_cut_behind | pair.cur_cut_shared | pair.cur_cut_behind
        checks.append(
            TraceCheck(
                "backward-mix-contains-cut", i, _disconnects(cur.critical, backward),
                "next-behind + shared + cur-behind must contain a cut of the current critical graph",
            )
        )

    return TraceReport(tuple(checks))


def _is_partition(parts, whole: frozenset) -> bool:
    union: set = set()
    total = 0
    for p in parts:
        union |= p
        total += len(p)
    return union == set(whole) and total == len(whole)
