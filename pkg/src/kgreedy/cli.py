"""Command-line front end and ratio-experiment harness.

Exit codes are part of the contract so shell harnesses need no JSON parsing:
0 success, 2 the requested reduction is infeasible, 3 bad input, 4 a scripted
round failed validation.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import crashing, generators, klis, network, oracle
from .errors import (
    BudgetExceededError,
    KGreedyError,
    NetworkValidationError,
    NoPlanError,
    NotCrashableError,
    ScriptError,
)

EXIT_OK = 0
EXIT_INFEASIBLE = 2
EXIT_INPUT = 3
EXIT_SCRIPT = 4


def _frac(value: Fraction) -> str:
    return str(int(value)) if value.denominator == 1 else str(value)


def _emit(payload: dict) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


def _load_network(path: str) -> network.ProjectNetwork:
    with open(path) as fh:
        data = json.load(fh, parse_float=str)
    net = network.network_from_json(data)
    network.validate(net)
    return net


def _read_sequence(args) -> list[int]:
    if args.input:
        with open(args.input) as fh:
            text = fh.read()
    else:
        text = sys.stdin.read()
    return klis.parse_sequence(text)


# -- crash ----------------------------------------------------------------------

def _cmd_crash(args) -> int:
    net = _load_network(args.input)
    if args.exact:
        plan, cost = oracle.exact_crash_cost(net, args.k)
        payload = {
            "mode": "exact",
            "k": args.k,
            "plan": network.plan_to_json(plan),
            "total_cost": _frac(cost),
        }
    else:
        result = crashing.greedy_crash(net, args.k)
        plan = result.plan
        payload = {
            "mode": "greedy",
            "k": args.k,
            "plan": network.plan_to_json(result.plan),
            "steps": [
                {"edges": sorted(step.edges), "cost": _frac(step.cost)}
                for step in result.steps
            ],
            "durations": list(result.durations),
            "total_cost": _frac(result.total_cost),
        }
    if args.trace:
        trace = crashing.decompose(net, plan, args.k)
        report = crashing.verify_trace(trace)
        payload["trace"] = {
            "cuts": [sorted(level.cut) for level in trace.levels],
            "cut_costs": [_frac(level.cut_cost) for level in trace.levels],
            "report": {
                "passed": report.passed,
                "checks": [
                    {"name": c.name, "level": c.level, "passed": c.passed, "detail": c.detail}
                    for c in report.checks
                ],
            },
        }
    _emit(payload)
    return EXIT_OK


# -- klis / lis -----------------------------------------------------------------

def _cmd_klis(args) -> int:
    values = _read_sequence(args)
    if args.script:
        with open(args.script) as fh:
            script = json.load(fh)
        selection = klis.greedy_klis_scripted(values, args.k, script)
    elif args.exact:
        selection = oracle.exact_klis(values, args.k)
    else:
        selection = klis.greedy_klis(values, args.k)
    _emit(klis.selection_to_json(selection, values))
    return EXIT_OK


def _cmd_lis(args) -> int:
    values = _read_sequence(args)
    indices = klis.lis(values)
    _emit({
        "indices": indices,
        "values": [values[i] for i in indices],
        "length": len(indices),
    })
    return EXIT_OK


# -- gen ------------------------------------------------------------------------

def _cmd_gen(args) -> int:
    if args.what == "fig2":
        _emit(network.network_to_json(generators.counterexample_network()))
    elif args.what == "matrix":
        values, script = generators.matrix_sequence(args.k)
        print(klis.format_sequence(values))
        if args.script:
            with open(args.script, "w") as fh:
                json.dump(script, fh)
                fh.write("\n")
    elif args.what == "random-dag":
        spec = generators.RandomNetSpec(
            node_count=args.nodes,
            edge_count=args.edges,
            max_normal_len=args.max_len,
            max_crashable=args.max_crashable,
            cost_range=(args.cost_min, args.cost_max),
            seed=args.seed,
        )
        _emit(network.network_to_json(generators.random_network(spec)))
    elif args.what == "random-seq":
        print(klis.format_sequence(generators.random_sequence(args.n, args.range, args.seed)))
    return EXIT_OK


# -- experiment -------------------------------------------------------------------

def _crashing_trial(args, seed: int):
    spec = generators.RandomNetSpec(
        node_count=args.nodes,
        edge_count=args.edges,
        max_normal_len=args.max_len,
        max_crashable=args.max_crashable,
        cost_range=(args.cost_min, args.cost_max),
        seed=seed,
    )
    net = generators.random_network(spec)
    if network.k_max(net) < args.k:
        return None
    greedy = crashing.greedy_crash(net, args.k).total_cost
    _, opt = oracle.exact_crash_cost(net, args.k)
    ratio = greedy / opt
    bound = crashing.cost_ratio_bound(args.k)
    return greedy, opt, ratio, bound, ratio <= bound


def _klis_trial(args, seed: int):
    if args.generator == "matrix":
        k = args.k
        values, script = generators.matrix_sequence(k)
        greedy = klis.greedy_klis_scripted(values, k, script).total_length
        try:
            opt = oracle.exact_klis(values, k).total_length
        except BudgetExceededError:
            # certified constructively: k disjoint increasing copies of 1..k
            parts = generators.matrix_optimal_parts(k)
            assert sorted(i for p in parts for i in p) == list(range(k * k))
            assert all(
                a < b and values[a] < values[b]
                for p in parts for a, b in zip(p, p[1:])
            )
            opt = k * k
    else:
        values = generators.random_sequence(args.length, args.range, seed)
        greedy = klis.greedy_klis(values, args.k).total_length
        opt = oracle.exact_klis(values, args.k).total_length
    ratio = Fraction(greedy, opt) if opt else Fraction(1)
    bound = klis.total_ratio_bound(args.k)
    return Fraction(greedy), Fraction(opt), ratio, bound, ratio >= bound


def _cmd_experiment(args) -> int:
    if args.trials < 1:
        raise ValueError("need at least one trial")
    if args.problem == "crashing" and args.generator != "random":
        raise ValueError("the matrix generator applies to the klis problem only")
    if args.problem == "crashing":
        provenance = (
            f"# problem=crashing trials={args.trials} k={args.k} seed={args.seed} "
            f"nodes={args.nodes} edges={args.edges} max-len={args.max_len} "
            f"max-crashable={args.max_crashable} cost={args.cost_min}..{args.cost_max}"
        )
        run_trial = _crashing_trial
    elif args.generator == "matrix":
        provenance = f"# problem=klis generator=matrix trials={args.trials} k={args.k}"
        run_trial = _klis_trial
    else:
        provenance = (
            f"# problem=klis trials={args.trials} k={args.k} seed={args.seed} "
            f"length={args.length} range={args.range}"
        )
        run_trial = _klis_trial

    lines = [provenance, "instance,seed,k,greedy,opt,ratio,bound,ok"]
    violations = 0
    max_ratio: Fraction | None = None
    for t in range(args.trials):
        seed = args.seed + t
        try:
            outcome = run_trial(args, seed)
        except KGreedyError:
            outcome = None
        if outcome is None:
            lines.append(f"{t},{seed},{args.k},,,,,skip")
            continue
        greedy, opt, ratio, bound, ok = outcome
        if not ok:
            violations += 1
        if max_ratio is None or ratio > max_ratio:
            max_ratio = ratio
        lines.append(
            f"{t},{seed},{args.k},{_frac(greedy)},{_frac(opt)},"
            f"{_frac(ratio)},{_frac(bound)},{'yes' if ok else 'no'}"
        )
    if max_ratio is not None:
        lines.append(f"# max_ratio={_frac(max_ratio)}={float(max_ratio):.6f}")
    text = "\n".join(lines) + "\n"
    if args.output:
        with open(args.output, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK if violations == 0 else 1


# -- argument wiring ----------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kgreedy",
        description="Greedy project crashing and repeated subsequence extraction, "
        "with exact oracles and a ratio-experiment harness.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    crash = sub.add_parser("crash", help="find a plan shortening a project by k days")
    crash.add_argument("--input", required=True, help="project JSON file")
    crash.add_argument("-k", type=int, required=True, help="days to save")
    crash.add_argument("--exact", action="store_true", help="exhaustive optimum instead of greedy")
    crash.add_argument("--trace", action="store_true",
                       help="decompose the produced plan and verify the cut chain")

    kl = sub.add_parser("klis", help="extract k disjoint increasing subsequences")
    kl.add_argument("-k", type=int, required=True)
    kl.add_argument("--input", help="sequence file (default: stdin)")
    kl.add_argument("--exact", action="store_true", help="exhaustive optimum instead of greedy")
    kl.add_argument("--script", help="JSON file with one index list per round to replay")

    li = sub.add_parser("lis", help="one longest increasing subsequence")
    li.add_argument("--input", help="sequence file (default: stdin)")

    gen = sub.add_parser("gen", help="emit example and random instances")
    gsub = gen.add_subparsers(dest="what", required=True)
    gsub.add_parser("fig2", help="the bundled 5-job project where greedy overpays")
    gm = gsub.add_parser("matrix", help="staircase sequence with its adversarial script")
    gm.add_argument("-k", type=int, required=True)
    gm.add_argument("--script", help="also write the per-round removal script to this file")
    gd = gsub.add_parser("random-dag", help="seeded random project network")
    gd.add_argument("--nodes", type=int, required=True)
    gd.add_argument("--edges", type=int, required=True)
    gd.add_argument("--max-len", type=int, default=5)
    gd.add_argument("--max-crashable", type=int, default=2)
    gd.add_argument("--cost-min", type=int, default=1)
    gd.add_argument("--cost-max", type=int, default=9)
    gd.add_argument("--seed", type=int, default=0)
    gs = gsub.add_parser("random-seq", help="seeded random integer sequence")
    gs.add_argument("-n", type=int, required=True)
    gs.add_argument("--range", type=int, default=9)
    gs.add_argument("--seed", type=int, default=0)

    exp = sub.add_parser("experiment", help="greedy-vs-oracle ratio runs, CSV output")
    exp.add_argument("--problem", choices=["crashing", "klis"], required=True)
    exp.add_argument("--trials", type=int, required=True)
    exp.add_argument("-k", type=int, required=True)
    exp.add_argument("--seed", type=int, default=0)
    exp.add_argument("--generator", choices=["random", "matrix"], default="random",
                     help="klis instances: seeded random sequences, or the fixed "
                     "staircase instance for k with its adversarial script")
    exp.add_argument("--output", help="CSV path (default: stdout)")
    exp.add_argument("--nodes", type=int, default=5)
    exp.add_argument("--edges", type=int, default=8)
    exp.add_argument("--max-len", type=int, default=5)
    exp.add_argument("--max-crashable", type=int, default=2)
    exp.add_argument("--cost-min", type=int, default=1)
    exp.add_argument("--cost-max", type=int, default=9)
    exp.add_argument("--length", type=int, default=12)
    exp.add_argument("--range", type=int, default=9)
    return parser


_HANDLERS = {
    "crash": _cmd_crash,
    "klis": _cmd_klis,
    "lis": _cmd_lis,
    "gen": _cmd_gen,
    "experiment": _cmd_experiment,
}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except (NotCrashableError, NoPlanError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except ScriptError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SCRIPT
    except (NetworkValidationError, KGreedyError, OSError, ValueError, KeyError,
            json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
