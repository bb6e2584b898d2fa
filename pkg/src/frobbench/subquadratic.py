"""No bound of the shape C*(a_1*a_n)^(1-eps) can hold in general.

Witness family: consecutive coprime pairs (p, p+1) at primes p, where
F(p, p+1) = p^2 - p - 1 grows quadratically while the test bound grows
strictly slower. This module tabulates the comparison over prime ranges,
emits the ratio series F / bound, and constructs the padded instances
(p, p+1, r, ..., r) that carry the same conclusion to any dimension.

Epsilon is restricted to (0, 1): at eps >= 1 the test bound is at most C
for every pair, so nothing quadratic is needed to exceed it, and eps <= 0
is not sub-quadratic at all.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Mapping, Sequence, Tuple

from .csvio import write_csv
from .frobenius import frobenius_sylvester
from .vectors import CoinVector, make_coin_vector

SUBQUADRATIC_HEADER = ("p", "epsilon", "c", "frobenius", "bound", "violated")

PRIME_RATIOS_HEADER = ("p", "epsilon", "c", "ratio")


@dataclass(frozen=True)
class SubquadraticRow:
    """One (p, C, eps) comparison; violated holds when F exceeds the bound."""

    p: int
    epsilon: float
    c_const: float
    frobenius: int
    test_bound: float
    violated: bool


def primes_up_to(limit: int) -> List[int]:
    """Ascending primes <= limit by a byte sieve; empty below 2."""
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, int(limit**0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(range(p * p, limit + 1, p)))
    return [p for p in range(2, limit + 1) if sieve[p]]


def _validate_params(c_const: float, epsilon: float) -> None:
    if not c_const > 0:
        raise ValueError(f"C must be positive, got {c_const}")
    if not 0.0 < epsilon < 1.0:
        raise ValueError(
            f"epsilon must lie in (0, 1), got {epsilon}: the exponent "
            "1 - epsilon must stay positive, since at epsilon >= 1 the test "
            "bound never exceeds C and the comparison degenerates"
        )


def test_bound(p: int, c_const: float, epsilon: float) -> float:
    """C * (p*(p+1))^(1-eps) in double precision."""
    if p < 2:
        raise ValueError(f"p must be >= 2, got {p}")
    _validate_params(c_const, epsilon)
    return c_const * (p * (p + 1)) ** (1.0 - epsilon)


def build_table(
    prime_limit: int, c_const: float, epsilons: Sequence[float]
) -> List[SubquadraticRow]:
    """Rows for every (eps, prime <= limit), eps ascending then p ascending."""
    for eps in epsilons:
        _validate_params(c_const, eps)
    primes = primes_up_to(prime_limit)
    rows: List[SubquadraticRow] = []
    for eps in sorted(epsilons):
        for p in primes:
            frob = frobenius_sylvester(p, p + 1)
            bound = test_bound(p, c_const, eps)
            rows.append(
                SubquadraticRow(
                    p=p,
                    epsilon=eps,
                    c_const=c_const,
                    frobenius=frob,
                    test_bound=bound,
                    violated=frob > bound,
                )
            )
    return rows


def ratio_series(
    prime_limit: int, c_const: float, epsilons: Sequence[float]
) -> List[Tuple[int, float, float]]:
    """(p, eps, F/bound) rows in the same canonical order as build_table."""
    return [
        (row.p, row.epsilon, row.frobenius / row.test_bound)
        for row in build_table(prime_limit, c_const, epsilons)
    ]


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def construct_thm2_instance(p: int, n: int) -> CoinVector:
    """(p, p+1, r, ..., r) with r = 2p+1 repeated n-2 times; F = p^2 - p - 1.

    r = p + (p+1) is the smallest nontrivial value representable by the
    pair, so the padding entries change nothing about representability
    while pushing the dimension to any n >= 3.
    """
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    r = 2 * p + 1
    return make_coin_vector((p, p + 1, *([r] * (n - 2))))


def write_subquadratic_csv(
    path: str, rows: Sequence[SubquadraticRow], preamble: Mapping
) -> None:
    csv_rows = [
        (r.p, r.epsilon, r.c_const, r.frobenius, r.test_bound, r.violated)
        for r in rows
    ]
    write_csv(path, SUBQUADRATIC_HEADER, csv_rows, preamble)


def write_prime_ratios_csv(
    path: str,
    rows: Sequence[Tuple[int, float, float]],
    c_const: float,
    preamble: Mapping,
) -> None:
    csv_rows = [(p, eps, c_const, ratio) for p, eps, ratio in rows]
    write_csv(path, PRIME_RATIOS_HEADER, csv_rows, preamble)
