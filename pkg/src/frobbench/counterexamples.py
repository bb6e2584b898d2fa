"""Where Selmer's formula falls below F, and why more entries do not help.

The formula 2*a_n*floor(a_1/n) - a_1 needs pairwise coprimality; under
gcd-one alone it can undercut the true Frobenius number. This module
verifies single vectors, searches a triple range exhaustively for
failures, and builds higher-dimensional failing instances by embedding
multiples of a_1 between a_1 and a_n, which leaves F unchanged while
growing n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, List, Mapping, Sequence

from .bounds import bound_selmer
from .csvio import write_csv
from .frobenius import frobenius_exact
from .vectors import CoinVector, is_pairwise_coprime, make_coin_vector

COUNTEREXAMPLES_HEADER = (
    "a1",
    "a2",
    "a3",
    "frobenius",
    "selmer",
    "fails",
    "pairwise_coprime",
)


@dataclass(frozen=True)
class FailureRow:
    """One vector compared against Selmer's formula value.

    fails holds exactly when frobenius > selmer_value; pairwise_coprime
    records whether the formula's own precondition held on this vector.
    """

    vector: CoinVector
    frobenius: int
    selmer_value: int
    fails: bool
    pairwise_coprime: bool


def verify_failure(v: CoinVector) -> FailureRow:
    """Exact F versus the Selmer formula value for one vector.

    Demands n >= 3 and a_1 >= n, the shape where the comparison is
    meaningful; anything else is reported as inapplicable input rather
    than as a failure.
    """
    if v.n < 3 or v.a1 < v.n:
        raise ValueError(
            f"Selmer comparison inapplicable for {v}: needs n >= 3 and a_1 >= n"
        )
    frob = frobenius_exact(v).value
    selmer_value = bound_selmer(v).value
    return FailureRow(
        vector=v,
        frobenius=frob,
        selmer_value=selmer_value,
        fails=frob > selmer_value,
        pairwise_coprime=is_pairwise_coprime(v.entries),
    )


def search_selmer_failures(
    a1_values: Iterable[int], max_entry: int
) -> List[FailureRow]:
    """All failing sorted gcd-one triples with a_1 in a1_values, entries <= max_entry.

    Brute force over at most |a1_values| * max_entry^2 / 2 candidates;
    rows come back lexicographically sorted. No claim of minimality or
    curation: every failure in range is reported.
    """
    a1s = sorted(set(a1_values))
    if not a1s:
        raise ValueError("a1_values must be nonempty")
    if a1s[0] < 3:
        raise ValueError(f"a_1 values must be >= 3 (n = 3 here), got {a1s[0]}")
    if max_entry < a1s[-1]:
        raise ValueError(f"max_entry {max_entry} below largest a_1 {a1s[-1]}")
    rows: List[FailureRow] = []
    for a1 in a1s:
        for a2 in range(a1, max_entry + 1):
            g12 = math.gcd(a1, a2)
            for a3 in range(a2, max_entry + 1):
                if math.gcd(g12, a3) != 1:
                    continue
                row = verify_failure(make_coin_vector((a1, a2, a3)))
                if row.fails:
                    rows.append(row)
    return rows


def embed_multiples(a1: int, an: int, multipliers: Sequence[int]) -> CoinVector:
    """(a1, a1*k_2, ..., a1*k_{n-2}, an) sorted; F stays F(a1, an).

    Each multiplier k must satisfy 1 <= k <= floor(an/a1): the inserted
    entries are then representable by a1 alone, so they change the
    dimension without changing the set of representable integers.
    """
    if math.gcd(a1, an) != 1:
        raise ValueError(f"gcd({a1}, {an}) != 1, no Frobenius number")
    top = an // a1
    for k in multipliers:
        if not 1 <= k <= top:
            raise ValueError(
                f"multiplier {k} out of range: need 1 <= k <= floor({an}/{a1}) = {top}"
            )
    return make_coin_vector((a1, an, *(a1 * k for k in multipliers)))


def write_counterexamples_csv(
    path: str, rows: Sequence[FailureRow], preamble: Mapping
) -> None:
    csv_rows = [
        (
            r.vector.entries[0],
            r.vector.entries[1],
            r.vector.entries[2],
            r.frobenius,
            r.selmer_value,
            r.fails,
            r.pairwise_coprime,
        )
        for r in rows
    ]
    write_csv(path, COUNTEREXAMPLES_HEADER, csv_rows, preamble)
