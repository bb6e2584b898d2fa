"""Command-line entry point: one `frob` command, six subcommands.

compute          exact F for one vector
bounds           all bounds of a regime for one vector
simulate         the Monte Carlo comparison, writing trials/summary/ratios CSVs
counterexamples  exhaustive triple search for Selmer failures
subquadratic     F(p, p+1) against C*(p(p+1))^(1-eps) over a prime range
ratio            the same comparison as a ratio series

Ranges are inclusive `lo:hi`, lists comma-separated. Exit codes: 0 on
success, 1 on validation errors (including bad flags), 2 on runtime
errors. The seed comes from --seed, else the FROB_SEED environment
variable, else 42. Every CSV starts with `# key=value` lines echoing the
producing configuration; no timestamps, so identical flags give
byte-identical files regardless of --threads.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import List, Sequence, Tuple

from .bounds import BoundKind, evaluate_all
from .counterexamples import search_selmer_failures, write_counterexamples_csv
from .csvio import format_cell
from .frobenius import frobenius_exact
from .montecarlo import (
    best_kinds_for,
    collect_ratios,
    dimension_seed,
    run_experiment,
    summarize,
    write_ratios_csv,
    write_summary_csv,
    write_trials_csv,
)
from .sampling import SamplerConfig
from .subquadratic import (
    build_table,
    ratio_series,
    write_prime_ratios_csv,
    write_subquadratic_csv,
)
from .vectors import ConditionKind, make_coin_vector

DEFAULT_SEED = 42
DEFAULT_EPSILONS = "0.005,0.01,0.02,0.05,0.1,0.2"


def _parse_ints(text: str, what: str) -> Tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"{what} must be comma-separated integers, got {text!r}") from None


def _parse_floats(text: str, what: str) -> Tuple[float, ...]:
    try:
        return tuple(float(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"{what} must be comma-separated numbers, got {text!r}") from None


def _parse_range(text: str, what: str) -> List[int]:
    """`lo:hi` inclusive, or a single integer."""
    parts = text.split(":")
    try:
        if len(parts) == 1:
            lo = hi = int(parts[0])
        elif len(parts) == 2:
            lo, hi = int(parts[0]), int(parts[1])
        else:
            raise ValueError
    except ValueError:
        raise ValueError(f"{what} must be an integer or lo:hi, got {text!r}") from None
    if lo > hi:
        raise ValueError(f"{what} range is empty: {text!r}")
    return list(range(lo, hi + 1))


def _regime(text: str) -> ConditionKind:
    return ConditionKind(text)


def _resolve_seed(flag_value) -> int:
    if flag_value is not None:
        return flag_value
    env = os.environ.get("FROB_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"FROB_SEED must be an integer, got {env!r}") from None
    return DEFAULT_SEED


def _print_table(headers: Sequence[str], rows: Sequence[Sequence[str]]) -> None:
    widths = [
        max(len(headers[i]), max((len(r[i]) for r in rows), default=0))
        for i in range(len(headers))
    ]
    print("  ".join(h.rjust(widths[i]) for i, h in enumerate(headers)))
    for row in rows:
        print("  ".join(cell.rjust(widths[i]) for i, cell in enumerate(row)))


def _fmt(x) -> str:
    if isinstance(x, float):
        return f"{x:.6g}"
    return format_cell(x)


def cmd_compute(args) -> int:
    v = make_coin_vector(_parse_ints(args.vector, "--vector"))
    result = frobenius_exact(v)
    print(f"F = {result.value}")
    return 0


def cmd_bounds(args) -> int:
    v = make_coin_vector(_parse_ints(args.vector, "--vector"))
    regime = _regime(args.regime)
    evaluations = evaluate_all(v, regime)
    print(f"F = {frobenius_exact(v).value}")
    rows = [
        [ev.kind.value, _fmt(ev.value), "yes" if ev.applicable else "no", ev.reason]
        for ev in evaluations
    ]
    _print_table(["bound", "value", "applicable", "note"], rows)
    return 0


def cmd_simulate(args) -> int:
    ns = _parse_range(args.n, "--n")
    regime = _regime(args.regime)
    seed = _resolve_seed(args.seed)
    if args.trials < 1:
        raise ValueError(f"--trials must be >= 1, got {args.trials}")
    threads = args.threads if args.threads is not None else (os.cpu_count() or 1)
    if threads < 1:
        raise ValueError(f"--threads must be >= 1, got {threads}")
    os.makedirs(args.out, exist_ok=True)

    preamble = {
        "seed": seed,
        "n": args.n,
        "k": args.k if args.k is not None else "n",
        "m": args.m,
        "condition": regime.value,
        "trials": args.trials,
    }

    all_records = []
    summary_rows = []
    for n in ns:
        cfg = SamplerConfig(
            n=n,
            m=args.m,
            condition=regime,
            master_seed=dimension_seed(seed, n),
            k=args.k,
        )
        records = run_experiment(cfg, args.trials, workers=threads)
        all_records.extend(records)
        for kind in (ev.kind for ev in records[0].evaluations):
            if any(r.diff(kind) is not None for r in records):
                summary_rows.append((n, kind, summarize(records, kind)))

    write_trials_csv(os.path.join(args.out, "trials.csv"), all_records, preamble)
    write_summary_csv(os.path.join(args.out, "summary.csv"), summary_rows, preamble)
    written = ["trials.csv", "summary.csv"]
    if regime is ConditionKind.PAIRWISE_COPRIME:
        ratio_rows, excluded = collect_ratios(all_records)
        ratio_preamble = dict(preamble)
        ratio_preamble["excluded_zero_denominator"] = excluded
        write_ratios_csv(
            os.path.join(args.out, "ratios.csv"), ratio_rows, ratio_preamble
        )
        written.append("ratios.csv")

    table = [
        [str(n), kind.value] + [_fmt(x) for x in (s.count, s.mean, s.min, s.q1, s.median, s.q3, s.max)]
        for n, kind, s in summary_rows
    ]
    _print_table(
        ["n", "bound", "count", "mean", "min", "q1", "median", "q3", "max"], table
    )
    for name in written:
        print(f"wrote {os.path.join(args.out, name)}")
    return 0


def cmd_counterexamples(args) -> int:
    a1s = _parse_range(args.a1, "--a1")
    rows = search_selmer_failures(a1s, args.max)
    os.makedirs(args.out, exist_ok=True)
    preamble = {"a1": args.a1, "max_entry": args.max}
    path = os.path.join(args.out, "counterexamples.csv")
    write_counterexamples_csv(path, rows, preamble)
    table = [
        [
            str(r.vector.entries[0]),
            str(r.vector.entries[1]),
            str(r.vector.entries[2]),
            str(r.frobenius),
            str(r.selmer_value),
            _fmt(r.pairwise_coprime),
        ]
        for r in rows
    ]
    _print_table(["a1", "a2", "a3", "F", "selmer", "pairwise_coprime"], table)
    print(f"{len(rows)} failing triples")
    print(f"wrote {path}")
    return 0


def cmd_subquadratic(args) -> int:
    epsilons = _parse_floats(args.eps, "--eps")
    rows = build_table(args.primes, args.c, epsilons)
    os.makedirs(args.out, exist_ok=True)
    preamble = {"c": args.c, "eps": args.eps, "prime_limit": args.primes}
    path = os.path.join(args.out, "subquadratic.csv")
    write_subquadratic_csv(path, rows, preamble)
    table = [
        [str(r.p), _fmt(r.epsilon), str(r.frobenius), f"{r.test_bound:.2f}", _fmt(r.violated)]
        for r in rows
    ]
    _print_table(["p", "epsilon", "F", "bound", "violated"], table)
    print(f"wrote {path}")
    return 0


def cmd_ratio(args) -> int:
    epsilons = _parse_floats(args.eps, "--eps")
    rows = ratio_series(args.primes, args.c, epsilons)
    os.makedirs(args.out, exist_ok=True)
    preamble = {"c": args.c, "eps": args.eps, "prime_limit": args.primes}
    path = os.path.join(args.out, "ratios_primes.csv")
    write_prime_ratios_csv(path, rows, args.c, preamble)
    table = [[str(p), _fmt(eps), f"{ratio:.4f}"] for p, eps, ratio in rows]
    _print_table(["p", "epsilon", "ratio"], table)
    print(f"wrote {path}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="frob",
        description="Exact Frobenius numbers, upper bounds, and their comparison experiments.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("compute", help="exact F for one vector")
    p.add_argument("--vector", required=True, help="comma-separated entries, e.g. 8,32,59")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("bounds", help="evaluate a regime's bounds on one vector")
    p.add_argument("--vector", required=True, help="comma-separated entries")
    p.add_argument(
        "--regime",
        choices=[c.value for c in ConditionKind],
        default=ConditionKind.GCD_ONE.value,
        help="gcd: gcd-one bounds only; coprime: all eight",
    )
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("simulate", help="Monte Carlo bound comparison")
    p.add_argument("--n", required=True, help="dimension or inclusive range lo:hi")
    p.add_argument("--m", type=int, required=True, help="largest entry value")
    p.add_argument("--k", type=int, default=None, help="smallest entry value (default: n)")
    p.add_argument("--trials", type=int, default=1000, help="trials per dimension")
    p.add_argument(
        "--regime",
        choices=[c.value for c in ConditionKind],
        default=ConditionKind.GCD_ONE.value,
    )
    p.add_argument("--seed", type=int, default=None, help="master seed (default: FROB_SEED or 42)")
    p.add_argument("--threads", type=int, default=None, help="worker processes (default: cores)")
    p.add_argument("--out", required=True, help="output directory for CSV artifacts")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("counterexamples", help="search triples where Selmer's formula fails")
    p.add_argument("--a1", required=True, help="a_1 values, integer or range lo:hi")
    p.add_argument("--max", type=int, required=True, help="largest allowed entry")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_counterexamples)

    p = sub.add_parser("subquadratic", help="F(p, p+1) against C*(p(p+1))^(1-eps)")
    p.add_argument("--c", type=float, default=1.0, help="constant C")
    p.add_argument("--eps", default=DEFAULT_EPSILONS, help="comma-separated epsilons in (0, 1)")
    p.add_argument("--primes", type=int, required=True, help="prime limit (inclusive)")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_subquadratic)

    p = sub.add_parser("ratio", help="ratio series F(p, p+1) / test bound")
    p.add_argument("--c", type=float, default=2.0, help="constant C")
    p.add_argument("--eps", default=DEFAULT_EPSILONS, help="comma-separated epsilons in (0, 1)")
    p.add_argument("--primes", type=int, required=True, help="prime limit (inclusive)")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_ratio)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 0 for --help and 2 for flag errors; fold the
        # latter into the validation-error code
        return 0 if not exc.code else 1
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # runtime failures: sampling, I/O, overflow
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
