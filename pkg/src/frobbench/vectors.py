"""Coin vectors and their coprimality conditions.

A coin vector is a sorted tuple of at least two positive integers whose
overall gcd is 1, the setting in which the Frobenius number exists. Two
strengths of coprimality matter downstream: gcd of the whole vector equal
to 1 (the weak condition), and pairwise coprimality of all entries (the
strong one). Duplicate entries are legal and meaningful: several bounds
depend on the dimension n, so nothing is deduplicated.
"""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterable, Tuple


class ConditionKind(Enum):
    """Coprimality regimes. PAIRWISE_COPRIME implies GCD_ONE; equal at n=2."""

    GCD_ONE = "gcd"
    PAIRWISE_COPRIME = "coprime"


@dataclass(frozen=True)
class CoinVector:
    """Validated input vector: entries sorted nondecreasing, n >= 2, gcd 1.

    Construct through make_coin_vector, which enforces the invariants.
    Instances are immutable and safe to share across threads or processes.
    """

    entries: Tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def a1(self) -> int:
        return self.entries[0]

    @property
    def an(self) -> int:
        return self.entries[-1]

    def csv_field(self) -> str:
        # semicolon-joined so the vector stays one CSV cell: "8;32;59"
        return ";".join(str(e) for e in self.entries)

    def __str__(self) -> str:
        return "(" + ", ".join(str(e) for e in self.entries) + ")"


def gcd_all(entries: Iterable[int]) -> int:
    """gcd of a nonempty sequence of positive integers."""
    values = list(entries)
    if not values:
        raise ValueError("gcd of an empty sequence is undefined")
    for e in values:
        if e < 1:
            raise ValueError(f"entries must be positive integers, got {e}")
    return math.gcd(*values)


def is_pairwise_coprime(entries: Iterable[int]) -> bool:
    values = list(entries)
    return all(math.gcd(a, b) == 1 for a, b in combinations(values, 2))


def satisfies_condition(v: CoinVector, kind: ConditionKind) -> bool:
    """Check the weak (gcd 1) or strong (pairwise coprime) condition."""
    if kind is ConditionKind.PAIRWISE_COPRIME:
        return is_pairwise_coprime(v.entries)
    return gcd_all(v.entries) == 1


def make_coin_vector(raw: Iterable[int]) -> CoinVector:
    """Validate and normalize: sort, keep duplicates, demand gcd 1.

    Raises ValueError when fewer than two entries, any entry is not a
    positive integer, or the gcd exceeds 1 (no Frobenius number exists).
    Idempotent on the entries of its own output.
    """
    try:
        entries = tuple(sorted(operator.index(e) for e in raw))
    except TypeError as exc:
        raise ValueError(f"entries must be integers: {exc}") from None
    if len(entries) < 2:
        raise ValueError(f"need at least two entries, got {len(entries)}")
    if entries[0] < 1:
        raise ValueError(f"entries must be positive integers, got {entries[0]}")
    g = math.gcd(*entries)
    if g != 1:
        raise ValueError(
            f"no Frobenius number exists: gcd of {entries} is {g}, not 1"
        )
    return CoinVector(entries)
