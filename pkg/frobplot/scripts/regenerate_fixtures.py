"""Regenerate the checked-in CSV fixtures from the experiment CLI.

The plotting package consumes experiment artifacts strictly through
their CSV schemas, so fixtures come from running the `frob` command,
not from importing the experiment package. The trials fixture holds
100 rows (25 trials for each dimension 3 through 6) under the strong
coprimality regime, which populates every bound column; the same run
yields the error-ratio fixture, and a separate run produces the
prime-ratio table.
"""

from __future__ import annotations

import argparse
import shutil
import subprocess
import tempfile
from pathlib import Path

FIXTURES = Path(__file__).resolve().parent.parent / "tests" / "fixtures"


def run(args) -> None:
    print("+", " ".join(args))
    subprocess.run(args, check=True, stdout=subprocess.DEVNULL)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--out", default=str(FIXTURES), help="fixture directory (default: tests/fixtures)"
    )
    args = parser.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    with tempfile.TemporaryDirectory() as tmp:
        run(
            [
                "frob",
                "simulate",
                "--regime",
                "coprime",
                "--n",
                "3:6",
                "--m",
                "1000",
                "--trials",
                "25",
                "--seed",
                "42",
                "--out",
                tmp,
            ]
        )
        shutil.copy(Path(tmp) / "trials.csv", out / "trials.csv")
        shutil.copy(Path(tmp) / "ratios.csv", out / "ratios.csv")
        run(
            [
                "frob",
                "ratio",
                "--primes",
                "59",
                "--c",
                "2",
                "--eps",
                "0.05,0.1,0.2",
                "--out",
                tmp,
            ]
        )
        shutil.copy(Path(tmp) / "ratios_primes.csv", out / "ratios_primes.csv")
    print(f"fixtures written to {out}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
