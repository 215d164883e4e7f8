"""Independent brute-force reference computations used across the tests.

Everything here enumerates: paths for durations and criticality, node
partitions for cuts, index subsets for subsequences.  None of it shares code
with the library's fast paths, so agreement is meaningful.
"""

import itertools
import random
from fractions import Fraction

from kgreedy.flow import Arc, FlowGraph, is_unbounded, UNBOUNDED


def random_flow_graph(seed, max_nodes=7, max_arcs=12, unbounded_share=0.15):
    rng = random.Random(seed)
    n = rng.randint(2, max_nodes)
    nodes = tuple(f"v{i}" for i in range(n))
    arcs = []
    for j in range(rng.randint(1, max_arcs)):
        u, v = rng.sample(range(n), 2)
        if rng.random() < unbounded_share:
            cap = UNBOUNDED
        else:
            cap = Fraction(rng.randint(1, 9))
        arcs.append(Arc(f"a{j}", nodes[u], nodes[v], cap))
    return FlowGraph(nodes, nodes[0], nodes[-1], tuple(arcs))


def all_st_paths(net):
    """Every source-to-sink path, as a list of Edge objects."""
    out = {v: [] for v in net.nodes}
    for e in net.edges:
        out[e.src].append(e)
    paths = []

    def walk(node, acc):
        if node == net.sink:
            paths.append(list(acc))
            return
        for e in out[node]:
            acc.append(e)
            walk(e.dst, acc)
            acc.pop()

    walk(net.source, [])
    return paths


def brute_duration(net):
    return max(sum(e.normal_len for e in p) for p in all_st_paths(net))


def brute_critical_edge_ids(net):
    paths = all_st_paths(net)
    longest = max(sum(e.normal_len for e in p) for p in paths)
    ids = set()
    for p in paths:
        if sum(e.normal_len for e in p) == longest:
            ids.update(e.id for e in p)
    return ids


def brute_min_cut_cost(g):
    """Minimum cut cost over every (S, T) partition with s in S, t in T."""
    middle = [v for v in g.nodes if v not in (g.source, g.sink)]
    best = None
    for bits in itertools.product((0, 1), repeat=len(middle)):
        src_side = {g.source} | {v for v, b in zip(middle, bits) if b == 0}
        cost = Fraction(0)
        unbounded = False
        for a in g.arcs:
            if a.src in src_side and a.dst not in src_side:
                if is_unbounded(a.capacity):
                    unbounded = True
                    break
                cost += a.capacity
        if unbounded:
            continue
        if best is None or cost < best:
            best = cost
    return UNBOUNDED if best is None else best


def brute_lis_length(values):
    """Longest strictly increasing subsequence length via subset scan."""
    n = len(values)
    best = 0
    for mask in range(1 << n):
        picked = [values[i] for i in range(n) if mask >> i & 1]
        if all(a < b for a, b in zip(picked, picked[1:])):
            best = max(best, len(picked))
    return best


def all_max_lis_index_lists(values):
    """Every maximum-length strictly increasing subsequence, as index tuples."""
    n = len(values)
    found = []
    for mask in range(1 << n):
        idx = [i for i in range(n) if mask >> i & 1]
        vals = [values[i] for i in idx]
        if all(a < b for a, b in zip(vals, vals[1:])):
            found.append(tuple(idx))
    top = max(len(t) for t in found)
    return sorted(t for t in found if len(t) == top)


def assert_valid_selection(selection, values, k):
    """Disjoint index lists, each strictly increasing in position and value."""
    assert len(selection.rounds) == k
    seen = set()
    for part in selection.rounds:
        for a, b in zip(part, part[1:]):
            assert a < b
            assert values[a] < values[b]
        for i in part:
            assert 0 <= i < len(values)
            assert i not in seen
            seen.add(i)
    assert selection.total_length == sum(len(r) for r in selection.rounds)


def removing_disconnects(net, removed_ids):
    out = {v: [] for v in net.nodes}
    for e in net.edges:
        if e.id not in removed_ids:
            out[e.src].append(e.dst)
    seen, stack = {net.source}, [net.source]
    while stack:
        u = stack.pop()
        for v in out[u]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return net.sink not in seen
