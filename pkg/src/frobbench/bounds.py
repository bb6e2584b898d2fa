"""The eight closed-form upper bounds on F(a) and their analytic support.

Four bounds need only gcd(a) = 1:

* Erdos-Graham   2*a_{n-1}*floor(a_n/n) - a_n
* Schur          (a_1 - 1)(a_n - 1) - 1
* Vitek          (a_2 - 1)(a_n - 2)/2 - 1          (n >= 3, exact rational)
* Fukshansky-Robins   floor(C(n) * S(a) + 1)

Four more need pairwise coprimality:

* Selmer         2*a_n*floor(a_1/n) - a_1          (needs a_1 >= n)
* Beck           (sqrt(a_1 a_2 a_3 (a_1+a_2+a_3)) - a_1-a_2-a_3) / 2
* WHCorr         (sqrt((a_1+a_2+a_3)(a_1+a_2+a_3 + 2 a_1 a_2 a_3)/3
                       + 8 (a_1 a_2 + a_2 a_3 + a_3 a_1)/3) - sum) / 2
* WHMinSyl       min over pairs of (a_i - 1)(a_j - 1) - 1

Beck and WHCorr are three-entry bounds; for n > 3 they are evaluated on
the three smallest entries, which is sound because appending generators
never increases F. C(n) = (n-1)^2 Gamma((n+1)/2) / pi^((n-1)/2) and
S(a) = sum a_i sqrt(|a|_2^2 - a_i^2) support the Fukshansky-Robins bound;
gamma at integer and half-integer arguments is evaluated by exact closed
forms, with log-space variants for dimensions where doubles overflow.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations
from typing import Optional, Tuple, Union

from .vectors import CoinVector, ConditionKind, is_pairwise_coprime, satisfies_condition

Value = Union[int, Fraction, float]


class BoundKind(Enum):
    """Closed enumeration of the bounds; values are the CSV column names."""

    ERDOS_GRAHAM = "erdos"
    SCHUR = "schur"
    VITEK = "vitek"
    FUKSHANSKY_ROBINS = "fukrob"
    SELMER = "selmer"
    BECK = "beck"
    WH_CORR = "whcorr"
    WH_MIN_SYL = "whminsyl"


GCD_ONE_KINDS = (
    BoundKind.ERDOS_GRAHAM,
    BoundKind.SCHUR,
    BoundKind.VITEK,
    BoundKind.FUKSHANSKY_ROBINS,
)

PAIRWISE_KINDS = (
    BoundKind.SELMER,
    BoundKind.BECK,
    BoundKind.WH_CORR,
    BoundKind.WH_MIN_SYL,
)


@dataclass(frozen=True)
class BoundEvaluation:
    """One bound's value and applicability verdict for one vector.

    value is exact where the formula is exact: int for Erdos-Graham,
    Schur, Selmer, WHMinSyl and Fukshansky-Robins, Fraction with
    denominator 1 or 2 for Vitek, float for the irrational Beck/WHCorr.
    applicable=False comes with the reason and, for every kind except
    Selmer, no value. Selmer keeps its numeric value when inapplicable
    because the counterexample analysis compares F against the formula
    value precisely where the preconditions fail.
    """

    kind: BoundKind
    value: Optional[Value]
    applicable: bool
    reason: str = ""


def _inapplicable(kind: BoundKind, reason: str, value: Optional[Value] = None) -> BoundEvaluation:
    return BoundEvaluation(kind=kind, value=value, applicable=False, reason=reason)


def bound_erdos_graham(v: CoinVector) -> BoundEvaluation:
    """2*a_{n-1}*floor(a_n/n) - a_n; valid for every gcd-one vector."""
    e = v.entries
    value = 2 * e[-2] * (e[-1] // v.n) - e[-1]
    return BoundEvaluation(BoundKind.ERDOS_GRAHAM, value, True)


def bound_schur(v: CoinVector) -> BoundEvaluation:
    """(a_1 - 1)(a_n - 1) - 1; valid for every gcd-one vector."""
    value = (v.a1 - 1) * (v.an - 1) - 1
    return BoundEvaluation(BoundKind.SCHUR, value, True)


def bound_vitek(v: CoinVector) -> BoundEvaluation:
    """(a_2 - 1)(a_n - 2)/2 - 1 for n >= 3, exact rational.

    The value is kept as a Fraction with denominator 1 or 2; comparisons
    against F stay exact instead of rounding the half.
    """
    if v.n < 3:
        return _inapplicable(BoundKind.VITEK, "requires n >= 3")
    value = Fraction((v.entries[1] - 1) * (v.an - 2), 2) - 1
    return BoundEvaluation(BoundKind.VITEK, value, True)


def bound_fukshansky_robins(v: CoinVector) -> BoundEvaluation:
    """floor(C(n) * S(a) + 1), double precision inside the floor.

    If the product overflows the double range the evaluation is flagged
    instead of raising; c_of_n_log supports diagnosing such dimensions.
    """
    product = c_of_n(v.n) * s_of_a(v)
    if not math.isfinite(product):
        return _inapplicable(
            BoundKind.FUKSHANSKY_ROBINS, "value exceeds double-precision range"
        )
    value = math.floor(product + 1.0)
    return BoundEvaluation(BoundKind.FUKSHANSKY_ROBINS, value, True)


def bound_selmer(v: CoinVector) -> BoundEvaluation:
    """2*a_n*floor(a_1/n) - a_1; stated for pairwise coprime, a_1 >= n.

    The formula value is always computed and returned, with
    applicable=False and a reason when the preconditions fail: the
    counterexample search reports F against this very value on vectors
    that are not pairwise coprime.
    """
    value = 2 * v.an * (v.a1 // v.n) - v.a1
    reasons = []
    if not is_pairwise_coprime(v.entries):
        reasons.append("not pairwise coprime")
    if v.a1 < v.n:
        reasons.append(f"a_1 = {v.a1} < n = {v.n}")
    if reasons:
        return _inapplicable(BoundKind.SELMER, "; ".join(reasons), value=value)
    return BoundEvaluation(BoundKind.SELMER, value, True)


def _three_smallest_coprime(v: CoinVector) -> Optional[Tuple[int, int, int]]:
    if v.n < 3:
        return None
    t = v.entries[:3]
    return t if is_pairwise_coprime(t) else None


def bound_beck(v: CoinVector) -> BoundEvaluation:
    """(sqrt(a_1 a_2 a_3 (a_1+a_2+a_3)) - a_1 - a_2 - a_3) / 2.

    For n > 3 the three smallest entries are used: any upper bound on
    F(a_1, a_2, a_3) also bounds F(a). Needs those three pairwise coprime.
    """
    if v.n < 3:
        return _inapplicable(BoundKind.BECK, "requires n >= 3")
    t = _three_smallest_coprime(v)
    if t is None:
        return _inapplicable(BoundKind.BECK, "three smallest entries not pairwise coprime")
    a, b, c = t
    s = a + b + c
    value = 0.5 * (math.sqrt(a * b * c * s) - s)
    return BoundEvaluation(BoundKind.BECK, value, True)


def bound_wh_corrected(v: CoinVector) -> BoundEvaluation:
    """Corrected three-entry bound; same entry choice and preconditions as Beck."""
    if v.n < 3:
        return _inapplicable(BoundKind.WH_CORR, "requires n >= 3")
    t = _three_smallest_coprime(v)
    if t is None:
        return _inapplicable(BoundKind.WH_CORR, "three smallest entries not pairwise coprime")
    a, b, c = t
    s = a + b + c
    q = a * b + b * c + c * a
    radicand = (s * (s + 2 * a * b * c) + 8 * q) / 3  # exact integer over 3
    value = 0.5 * (math.sqrt(radicand) - s)
    return BoundEvaluation(BoundKind.WH_CORR, value, True)


def bound_wh_min_sylvester(v: CoinVector) -> BoundEvaluation:
    """min over pairs i < j of (a_i - 1)(a_j - 1) - 1; pairwise coprime only."""
    if not is_pairwise_coprime(v.entries):
        return _inapplicable(BoundKind.WH_MIN_SYL, "not pairwise coprime")
    value = min((a - 1) * (b - 1) - 1 for a, b in combinations(v.entries, 2))
    return BoundEvaluation(BoundKind.WH_MIN_SYL, value, True)


def gamma_half_integer(twice_x: int) -> float:
    """Gamma(twice_x / 2) by the exact closed forms.

    Integer x gives (x-1)!; half-integer x = k + 1/2 gives
    (2k)! sqrt(pi) / (4^k k!). Returns inf when the value overflows a
    double; use log_gamma_half_integer past that point.
    """
    if twice_x < 1:
        raise ValueError(f"argument must be >= 1/2, got {twice_x}/2")
    try:
        if twice_x % 2 == 0:
            return float(math.factorial(twice_x // 2 - 1))
        k = (twice_x - 1) // 2
        # int/int true division rounds once and tolerates numerator and
        # denominator far beyond double range; only the ratio must fit
        ratio = math.factorial(2 * k) / (4**k * math.factorial(k))
        return ratio * math.sqrt(math.pi)
    except OverflowError:
        return math.inf


def log_gamma_half_integer(twice_x: int) -> float:
    """ln Gamma(twice_x / 2) from the same closed forms, safe for large x."""
    if twice_x < 1:
        raise ValueError(f"argument must be >= 1/2, got {twice_x}/2")
    if twice_x % 2 == 0:
        return _log_int(math.factorial(twice_x // 2 - 1))
    k = (twice_x - 1) // 2
    return (
        _log_int(math.factorial(2 * k))
        + 0.5 * math.log(math.pi)
        - _log_int(4**k * math.factorial(k))
    )


def _log_int(value: int) -> float:
    # math.log takes arbitrary-size ints without converting through float
    return math.log(value)


def _pi_power_half(exponent_twice: int) -> float:
    # pi^(exponent_twice / 2) with the half handled by an explicit sqrt,
    # so that n = 2 yields exactly sqrt(pi) and C(2) is exactly 0.5
    whole = math.pi ** (exponent_twice // 2)
    return whole * math.sqrt(math.pi) if exponent_twice % 2 else whole


def c_of_n(n: int) -> float:
    """C(n) = (n-1)^2 * Gamma((n+1)/2) / pi^((n-1)/2)."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    return (n - 1) ** 2 * gamma_half_integer(n + 1) / _pi_power_half(n - 1)


def c_of_n_log(n: int) -> float:
    """ln C(n); exact-gamma route, usable far beyond double overflow."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    return (
        2.0 * math.log(n - 1)
        + log_gamma_half_integer(n + 1)
        - 0.5 * (n - 1) * math.log(math.pi)
    )


def c_of_n_stirling_log(n: int) -> float:
    """ln of the Stirling approximation of C(n).

    Gamma((n+1)/2) = Gamma(x+1) with x = (n-1)/2 is replaced by
    sqrt(2 pi) x^(x + 1/2) e^(-x), i.e. sqrt(2 pi) ((n-1)/2)^(n/2)
    e^(-(n-1)/2); the ratio to c_of_n tends to 1 from above as n grows.
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    x = (n - 1) / 2.0
    log_gamma = 0.5 * math.log(2.0 * math.pi) + (x + 0.5) * math.log(x) - x
    return 2.0 * math.log(n - 1) + log_gamma - x * math.log(math.pi)


def c_of_n_stirling(n: int) -> float:
    """The Stirling approximation of C(n) itself (exp of the log form)."""
    return math.exp(c_of_n_stirling_log(n))


def s_of_a(v: CoinVector) -> float:
    """S(a) = sum over i of a_i * sqrt(|a|_2^2 - a_i^2), double precision."""
    norm_sq = sum(e * e for e in v.entries)  # exact integer
    return math.fsum(e * math.sqrt(norm_sq - e * e) for e in v.entries)


_DISPATCH = {
    BoundKind.ERDOS_GRAHAM: bound_erdos_graham,
    BoundKind.SCHUR: bound_schur,
    BoundKind.VITEK: bound_vitek,
    BoundKind.FUKSHANSKY_ROBINS: bound_fukshansky_robins,
    BoundKind.SELMER: bound_selmer,
    BoundKind.BECK: bound_beck,
    BoundKind.WH_CORR: bound_wh_corrected,
    BoundKind.WH_MIN_SYL: bound_wh_min_sylvester,
}


def evaluate_bound(v: CoinVector, kind: BoundKind) -> BoundEvaluation:
    return _DISPATCH[kind](v)


def evaluate_all(v: CoinVector, regime: ConditionKind) -> Tuple[BoundEvaluation, ...]:
    """Evaluate the regime's bound set; inapplicable kinds flagged, never dropped.

    GCD_ONE yields the four weak-condition bounds; PAIRWISE_COPRIME yields
    all eight. The vector must actually satisfy the requested regime.
    """
    if not satisfies_condition(v, regime):
        raise ValueError(f"regime mismatch: {v} does not satisfy {regime.value}")
    kinds = GCD_ONE_KINDS if regime is ConditionKind.GCD_ONE else GCD_ONE_KINDS + PAIRWISE_KINDS
    return tuple(_DISPATCH[k](v) for k in kinds)
