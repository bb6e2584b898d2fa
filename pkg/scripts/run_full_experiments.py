#!/usr/bin/env python3
"""Full-scale Monte Carlo protocol: 100,000 trials per dimension for each
regime and each entry ceiling m in {100, 1000, 10000}.

This is hours of CPU time in pure Python; the desk-scale script covers
the same pipeline at 1,000 trials for day-to-day work. Scale down with
--trials or restrict --m-values when iterating.
"""

import argparse
import sys
import time

from frobbench.cli import main as frob


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", default="results_full")
    parser.add_argument("--seed", type=int, default=42)
    parser.add_argument("--trials", type=int, default=100_000)
    parser.add_argument(
        "--m-values", default="100,1000,10000",
        help="comma-separated entry ceilings",
    )
    parser.add_argument("--n", default="3:8", help="dimension range lo:hi")
    parser.add_argument("--threads", type=int, default=None)
    args = parser.parse_args()

    threads = [] if args.threads is None else ["--threads", str(args.threads)]
    started = time.perf_counter()
    for m in (int(part) for part in args.m_values.split(",")):
        for regime in ("gcd", "coprime"):
            argv = [
                "simulate",
                "--n", args.n,
                "--m", str(m),
                "--trials", str(args.trials),
                "--regime", regime,
                "--seed", str(args.seed),
                "--out", f"{args.out}/m{m}/{regime}",
                *threads,
            ]
            print("frob " + " ".join(argv), file=sys.stderr)
            code = frob(argv)
            if code != 0:
                return code
            print(f"elapsed {time.perf_counter() - started:.0f} s", file=sys.stderr)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
