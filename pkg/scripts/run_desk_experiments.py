#!/usr/bin/env python3
"""Desk-scale experiment run: every artifact the analysis consumes, at a
size that finishes on a laptop in a couple of minutes.

Writes under results/ (override with --out):

  gcd/        trials.csv, summary.csv        gcd-one regime
  coprime/    trials.csv, summary.csv, ratios.csv
  counterexamples.csv                        exhaustive triple search
  subquadratic/subquadratic.csv              F(p, p+1) vs C*(p(p+1))^(1-eps)
  ratio_c1/, ratio_c2/ ratios_primes.csv     the same comparison as ratios

All randomness flows from one master seed (default 42), so re-running
reproduces every file byte for byte.
"""

import argparse
import sys
import time

from frobbench.cli import main as frob


def run(argv):
    print("frob " + " ".join(argv), file=sys.stderr)
    code = frob(argv)
    if code != 0:
        sys.exit(code)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", default="results", help="output root directory")
    parser.add_argument("--seed", type=int, default=42)
    parser.add_argument("--trials", type=int, default=1000, help="trials per dimension")
    parser.add_argument("--threads", type=int, default=None)
    args = parser.parse_args()

    started = time.perf_counter()
    threads = [] if args.threads is None else ["--threads", str(args.threads)]

    for regime in ("gcd", "coprime"):
        run(
            [
                "simulate",
                "--n", "3:8",
                "--m", "1000",
                "--trials", str(args.trials),
                "--regime", regime,
                "--seed", str(args.seed),
                "--out", f"{args.out}/{regime}",
                *threads,
            ]
        )

    run(["counterexamples", "--a1", "4:8", "--max", "60", "--out", args.out])
    run(["subquadratic", "--primes", "59", "--c", "1", "--out", f"{args.out}/subquadratic"])
    run(["ratio", "--primes", "59", "--c", "1", "--out", f"{args.out}/ratio_c1"])
    run(["ratio", "--primes", "59", "--c", "2", "--eps", "0.2", "--out", f"{args.out}/ratio_c2"])

    print(f"done in {time.perf_counter() - started:.1f} s", file=sys.stderr)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
