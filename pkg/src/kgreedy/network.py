"""Activity-on-edge project networks and crash plans.

A project is a DAG with a single source and a single sink whose edges are
jobs.  Each job has a normal length, a technological minimum length, and a
per-day marginal cost schedule.  Shortening jobs ("crashing") reduces the
project duration, which is the length of the longest source-to-sink path.

All types are immutable after construction and all operations are pure, so
values can be shared freely between workers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import (
    BadCostScheduleError,
    BadEdgeBoundsError,
    CyclicGraphError,
    DuplicateEdgeIdError,
    MultipleSinksError,
    MultipleSourcesError,
    PlanOutOfBoundsError,
    UnknownNodeError,
    UnreachableNodeError,
)

NodeId = str
EdgeId = str


def as_cost(value) -> Fraction:
    """Coerce a cost literal to an exact Fraction.

    Accepts ints, Fractions, and strings ("3", "0.1", "7/2").  Floats are
    converted through their decimal repr so that 0.1 means one tenth.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        return Fraction(repr(value))
    return Fraction(value)


def linear_schedule(cost, days: int) -> tuple[Fraction, ...]:
    """Constant marginal-cost schedule: every shortened day costs the same."""
    return (as_cost(cost),) * days


@dataclass(frozen=True)
class Edge:
    """One job: a directed edge with crashing bounds and a cost schedule.

    ``normal_len`` is the uncrashed length in days, ``min_len`` the
    technological lower bound.  ``cost_schedule[d]`` is the marginal cost of
    the (d+1)-th day of shortening; its length must equal
    ``normal_len - min_len``.
    """

    id: EdgeId
    src: NodeId
    dst: NodeId
    min_len: int
    normal_len: int
    cost_schedule: tuple[Fraction, ...]

    @property
    def crashable_days(self) -> int:
        return self.normal_len - self.min_len

    def is_linear(self) -> bool:
        return len(set(self.cost_schedule)) <= 1


@dataclass(frozen=True)
class ProjectNetwork:
    """An AOE project network.  Parallel edges between two nodes are allowed."""

    nodes: tuple[NodeId, ...]
    source: NodeId
    sink: NodeId
    edges: tuple[Edge, ...]

    def edge(self, edge_id: EdgeId) -> Edge:
        for e in self.edges:
            if e.id == edge_id:
                return e
        raise KeyError(edge_id)

    def edge_ids(self) -> tuple[EdgeId, ...]:
        return tuple(e.id for e in self.edges)


@dataclass(frozen=True)
class Plan:
    """Integer crash amounts per edge; edges absent from the map are uncrashed."""

    amounts: Mapping[EdgeId, int] = field(default_factory=dict)

    def __post_init__(self):
        cleaned = {}
        for edge_id, x in self.amounts.items():
            if x < 0:
                raise PlanOutOfBoundsError(f"negative crash amount {x} for edge {edge_id!r}")
            if x > 0:
                cleaned[edge_id] = int(x)
        object.__setattr__(self, "amounts", cleaned)

    def amount(self, edge_id: EdgeId) -> int:
        return self.amounts.get(edge_id, 0)

    def total_units(self) -> int:
        return sum(self.amounts.values())

    def merge(self, other: "Plan") -> "Plan":
        """Multiset union: add crash amounts edge by edge."""
        merged = dict(self.amounts)
        for edge_id, x in other.amounts.items():
            merged[edge_id] = merged.get(edge_id, 0) + x
        return Plan(merged)

    def subtract_units(self, edge_ids: Iterable[EdgeId]) -> "Plan":
        """Multiset difference: remove one unit per listed edge."""
        reduced = dict(self.amounts)
        for edge_id in edge_ids:
            left = reduced.get(edge_id, 0) - 1
            if left < 0:
                raise PlanOutOfBoundsError(f"edge {edge_id!r} has no unit left to remove")
            if left == 0:
                reduced.pop(edge_id, None)
            else:
                reduced[edge_id] = left
        return Plan(reduced)

    def support(self) -> frozenset[EdgeId]:
        return frozenset(self.amounts)


def full_plan(net: ProjectNetwork) -> Plan:
    """The maximal plan: every edge crashed to its minimum length."""
    return Plan({e.id: e.crashable_days for e in net.edges if e.crashable_days > 0})


# -- validation ---------------------------------------------------------------

def _topological_order(net: ProjectNetwork) -> list[NodeId]:
    indeg = {v: 0 for v in net.nodes}
    out: dict[NodeId, list[NodeId]] = {v: [] for v in net.nodes}
    for e in net.edges:
        indeg[e.dst] += 1
        out[e.src].append(e.dst)
    queue = [v for v in net.nodes if indeg[v] == 0]
    order: list[NodeId] = []
    while queue:
        v = queue.pop()
        order.append(v)
        for w in out[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    if len(order) != len(net.nodes):
        stuck = sorted(v for v, d in indeg.items() if d > 0)
        raise CyclicGraphError(f"cycle through nodes {stuck}")
    return order


def validate(net: ProjectNetwork) -> None:
    """Check every structural invariant; raise a NetworkValidationError otherwise."""
    node_set = set(net.nodes)
    if len(node_set) != len(net.nodes):
        raise UnknownNodeError("duplicate node ids")
    for endpoint in (net.source, net.sink):
        if endpoint not in node_set:
            raise UnknownNodeError(f"declared endpoint {endpoint!r} is not a node")
    seen_ids = set()
    for e in net.edges:
        if e.id in seen_ids:
            raise DuplicateEdgeIdError(f"edge id {e.id!r} appears twice")
        seen_ids.add(e.id)
        if e.src not in node_set or e.dst not in node_set:
            raise UnknownNodeError(f"edge {e.id!r} references an unknown node")
        if e.min_len < 0 or e.min_len > e.normal_len:
            raise BadEdgeBoundsError(
                f"edge {e.id!r}: need 0 <= min_len <= normal_len, got ({e.min_len}, {e.normal_len})"
            )
        if len(e.cost_schedule) != e.crashable_days:
            raise BadCostScheduleError(
                f"edge {e.id!r}: schedule has {len(e.cost_schedule)} entries, "
                f"expected {e.crashable_days}"
            )
        for d, c in enumerate(e.cost_schedule):
            if c < 0:
                raise BadCostScheduleError(f"edge {e.id!r}: negative cost at day {d}")
            if d > 0 and c < e.cost_schedule[d - 1]:
                raise BadCostScheduleError(
                    f"edge {e.id!r}: schedule must be non-decreasing (convex), "
                    f"day {d} is cheaper than day {d - 1}"
                )

    _topological_order(net)  # raises CyclicGraphError

    has_in = {e.dst for e in net.edges}
    has_out = {e.src for e in net.edges}
    sources = [v for v in net.nodes if v not in has_in]
    sinks = [v for v in net.nodes if v not in has_out]
    if len(sources) != 1 or sources[0] != net.source:
        raise MultipleSourcesError(
            f"nodes without incoming edges: {sorted(sources)}, declared source: {net.source!r}"
        )
    if len(sinks) != 1 or sinks[0] != net.sink:
        raise MultipleSinksError(
            f"nodes without outgoing edges: {sorted(sinks)}, declared sink: {net.sink!r}"
        )

    reach_fwd = _reachable(net.nodes, [(e.src, e.dst) for e in net.edges], net.source)
    reach_bwd = _reachable(net.nodes, [(e.dst, e.src) for e in net.edges], net.sink)
    for v in net.nodes:
        if v not in reach_fwd or v not in reach_bwd:
            raise UnreachableNodeError(f"node {v!r} lies on no source-to-sink path")


def _reachable(nodes, arcs, start) -> set[NodeId]:
    out: dict[NodeId, list[NodeId]] = {v: [] for v in nodes}
    for u, v in arcs:
        out[u].append(v)
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for v in out[u]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return seen


# -- duration and criticality -------------------------------------------------

def _longest_dists(net: ProjectNetwork) -> tuple[dict[NodeId, int], dict[NodeId, int]]:
    """Longest-path distances from the source and to the sink, per node."""
    order = _topological_order(net)
    incoming: dict[NodeId, list[Edge]] = {v: [] for v in net.nodes}
    outgoing: dict[NodeId, list[Edge]] = {v: [] for v in net.nodes}
    for e in net.edges:
        incoming[e.dst].append(e)
        outgoing[e.src].append(e)
    from_src = {v: 0 for v in net.nodes}
    for v in order:
        for e in incoming[v]:
            cand = from_src[e.src] + e.normal_len
            if cand > from_src[v]:
                from_src[v] = cand
    to_sink = {v: 0 for v in net.nodes}
    for v in reversed(order):
        for e in outgoing[v]:
            cand = to_sink[e.dst] + e.normal_len
            if cand > to_sink[v]:
                to_sink[v] = cand
    return from_src, to_sink


def duration(net: ProjectNetwork) -> int:
    """Project duration: length of the longest source-to-sink path, in days."""
    from_src, _ = _longest_dists(net)
    return from_src[net.sink]


def critical_graph(net: ProjectNetwork) -> ProjectNetwork:
    """The subnetwork of edges lying on some longest source-to-sink path."""
    from_src, to_sink = _longest_dists(net)
    total = from_src[net.sink]
    kept = tuple(
        e for e in net.edges
        if from_src[e.src] + e.normal_len + to_sink[e.dst] == total
    )
    used_nodes = {net.source, net.sink}
    for e in kept:
        used_nodes.add(e.src)
        used_nodes.add(e.dst)
    return ProjectNetwork(
        nodes=tuple(v for v in net.nodes if v in used_nodes),
        source=net.source,
        sink=net.sink,
        edges=kept,
    )


# -- plan application ---------------------------------------------------------

def _check_plan(net: ProjectNetwork, plan: Plan) -> None:
    by_id = {e.id: e for e in net.edges}
    for edge_id, x in plan.amounts.items():
        e = by_id.get(edge_id)
        if e is None:
            raise PlanOutOfBoundsError(f"plan names unknown edge {edge_id!r}")
        if x > e.crashable_days:
            raise PlanOutOfBoundsError(
                f"edge {edge_id!r}: amount {x} exceeds crashable days {e.crashable_days}"
            )


def apply_plan(net: ProjectNetwork, plan: Plan) -> ProjectNetwork:
    """The network with each edge shortened by its plan amount.

    Consumed schedule entries are dropped, so the next marginal cost of a
    partially crashed edge is always ``cost_schedule[0]``.
    """
    _check_plan(net, plan)
    new_edges = []
    for e in net.edges:
        x = plan.amount(e.id)
        if x == 0:
            new_edges.append(e)
        else:
            new_edges.append(
                Edge(
                    id=e.id,
                    src=e.src,
                    dst=e.dst,
                    min_len=e.min_len,
                    normal_len=e.normal_len - x,
                    cost_schedule=e.cost_schedule[x:],
                )
            )
    return ProjectNetwork(net.nodes, net.source, net.sink, tuple(new_edges))


def plan_cost(net: ProjectNetwork, plan: Plan) -> Fraction:
    """Exact cost of a plan: the first x_i schedule entries of each edge, summed."""
    _check_plan(net, plan)
    by_id = {e.id: e for e in net.edges}
    total = Fraction(0)
    for edge_id, x in plan.amounts.items():
        total += sum(by_id[edge_id].cost_schedule[:x], Fraction(0))
    return total


def k_max(net: ProjectNetwork) -> int:
    """Largest achievable duration reduction."""
    return duration(net) - duration(apply_plan(net, full_plan(net)))


def is_k_crashing(net: ProjectNetwork, plan: Plan, k: int) -> bool:
    """True iff applying the plan shortens the project by at least k days."""
    return duration(apply_plan(net, plan)) <= duration(net) - k


# -- JSON interchange ---------------------------------------------------------

def _cost_to_json(c: Fraction):
    return int(c) if c.denominator == 1 else str(c)


def network_to_json(net: ProjectNetwork) -> dict:
    edges = []
    for e in net.edges:
        if e.crashable_days == 0:
            c = 0
        elif e.is_linear():
            c = _cost_to_json(e.cost_schedule[0])
        else:
            c = [_cost_to_json(x) for x in e.cost_schedule]
        edges.append(
            {"id": e.id, "from": e.src, "to": e.dst, "a": e.min_len, "b": e.normal_len, "c": c}
        )
    return {
        "nodes": list(net.nodes),
        "source": net.source,
        "sink": net.sink,
        "edges": edges,
    }


def network_from_json(data: dict) -> ProjectNetwork:
    """Build a network from the project JSON format (not yet validated).

    A scalar "c" is a constant per-day cost; a list gives the convex schedule
    explicitly and must have b - a entries.  Costs given as strings are
    parsed exactly.
    """
    edges = []
    for rec in data["edges"]:
        a, b = int(rec["a"]), int(rec["b"])
        c = rec["c"]
        if isinstance(c, list):
            schedule = tuple(as_cost(x) for x in c)
        else:
            schedule = linear_schedule(c, max(b - a, 0))
        edges.append(
            Edge(
                id=str(rec["id"]),
                src=str(rec["from"]),
                dst=str(rec["to"]),
                min_len=a,
                normal_len=b,
                cost_schedule=schedule,
            )
        )
    return ProjectNetwork(
        nodes=tuple(str(v) for v in data["nodes"]),
        source=str(data["source"]),
        sink=str(data["sink"]),
        edges=tuple(edges),
    )


def plan_to_json(plan: Plan) -> dict:
    return {"amounts": {edge_id: x for edge_id, x in sorted(plan.amounts.items())}}


def plan_from_json(data: dict) -> Plan:
    return Plan({str(k): int(v) for k, v in data["amounts"].items()})
