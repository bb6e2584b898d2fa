"""Exact Frobenius numbers by three independent routes.

F(a) is the largest integer not representable as a nonnegative integral
combination of the entries of a; it exists exactly when gcd(a) = 1. Routes:

* frobenius_sylvester: the n = 2 closed form a1*a2 - a1 - a2.
* frobenius_exact: shortest paths over residue classes modulo a1. The
  distance label of residue l is the smallest representable integer
  congruent to l mod a1, so F = max label - a1.
* frobenius_bruteforce: a dynamic-programming representability sweep,
  kept deliberately independent of the solver for cross-validation.

Convention: if some entry equals 1 then every nonnegative integer is
representable and F = -1.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from .vectors import CoinVector

# frobenius_bruteforce allocates one boolean cell per candidate value; the
# sweep is meant for small instances, the exact solver for everything else.
MEMORY_BUDGET_CELLS = 50_000_000


@dataclass(frozen=True)
class FrobeniusResult:
    """F(a) together with its per-residue witnesses.

    residue_minima has length a1; slot l holds the smallest representable
    integer congruent to l modulo a1. Invariants: slot 0 is 0, every slot
    is representable, and value = max(residue_minima) - a1 >= -1 with -1
    exactly when some entry equals 1.
    """

    value: int
    residue_minima: Tuple[int, ...]


def frobenius_sylvester(a1: int, a2: int) -> int:
    """Closed form for two coprime entries: a1*a2 - a1 - a2."""
    if a1 < 1 or a2 < 1:
        raise ValueError(f"entries must be positive, got ({a1}, {a2})")
    if a1 > a2:
        raise ValueError(f"entries must be nondecreasing, got ({a1}, {a2})")
    if math.gcd(a1, a2) != 1:
        raise ValueError(
            f"no Frobenius number exists: gcd({a1}, {a2}) = {math.gcd(a1, a2)}"
        )
    return a1 * a2 - a1 - a2


def frobenius_exact(v: CoinVector) -> FrobeniusResult:
    """Shortest-path solver over Z_{a1}; O(a1 * n * log a1).

    Node l carries the smallest representable integer congruent to l mod
    a1; using a coin c from label d reaches (l + c) mod a1 with label
    d + c. Entries congruent to 0 mod a1 produce self-loops, which can
    never relax anything and are simply carried along.
    """
    entries = v.entries
    a1 = entries[0]
    coins = sorted(set(entries[1:]))
    dist = [math.inf] * a1
    dist[0] = 0
    heap = [(0, 0)]
    while heap:
        d, label = heapq.heappop(heap)
        if d > dist[label]:
            continue  # stale queue entry
        for c in coins:
            nd = d + c
            nl = (label + c) % a1
            if nd < dist[nl]:
                dist[nl] = nd
                heapq.heappush(heap, (nd, nl))
    # gcd(a) = 1 makes every residue reachable, so all labels are finite.
    minima = tuple(int(d) for d in dist)
    return FrobeniusResult(value=max(minima) - a1, residue_minima=minima)


def is_representable(v: CoinVector, b: int) -> bool:
    """True iff b is a nonnegative integral combination of the entries.

    Independent forward DP over 0..b; shares no code with the solvers so
    it can serve as a witness check against them.
    """
    if b < 0:
        raise ValueError(f"b must be nonnegative, got {b}")
    reach = bytearray(b + 1)
    reach[0] = 1
    for c in sorted(set(v.entries)):
        if c > b:
            break
        for x in range(c, b + 1):
            if reach[x - c]:
                reach[x] = 1
    return bool(reach[b])


def frobenius_bruteforce(v: CoinVector) -> int:
    """DP representability sweep over 0..(a1-1)(an-1)-1; returns F(a).

    The cap is a valid truncation because F never exceeds
    (a1 - 1)(an - 1) - 1 for gcd-one vectors. Columns are closed coin by
    coin: for a coin c the update rep[x] |= rep[x - c] is a running
    logical-or along each residue class mod c, vectorized per class when
    c is small and by shifted or-passes when c is large.
    """
    entries = v.entries
    a1, an = entries[0], entries[-1]
    if a1 == 1:
        return -1
    cap = (a1 - 1) * (an - 1) - 1
    if cap + 1 > MEMORY_BUDGET_CELLS:
        raise ValueError(
            f"sweep needs {cap + 1} cells, over the {MEMORY_BUDGET_CELLS} "
            "budget; use frobenius_exact for instances this large"
        )
    rep = np.zeros(cap + 1, dtype=bool)
    rep[0] = True
    for c in sorted(set(entries)):
        if c > cap:
            continue  # a coin beyond the cap cannot appear in any value <= cap
        if c <= max(cap // 64, 1024):
            for r in range(c):
                np.logical_or.accumulate(rep[r::c], out=rep[r::c])
        else:
            # few copies of a large coin fit under the cap: one shifted
            # or-pass per copy; the copy() keeps input and output disjoint
            for _ in range(cap // c):
                np.logical_or(rep[c:], rep[:-c].copy(), out=rep[c:])
    gaps = np.flatnonzero(~rep)
    return int(gaps[-1]) if gaps.size else -1
