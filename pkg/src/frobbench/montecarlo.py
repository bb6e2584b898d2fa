"""Monte Carlo comparison of the bounds against exact Frobenius numbers.

One trial: sample a vector under the configured condition, solve for F
exactly, evaluate the regime's bound set, classify which bound is
tightest, and record the input ratio a_n/a_1. Aggregation produces
five-number summaries of the differences bound - F per (n, kind), the
ratio series R_n = (WHCorr - F)/(Selmer - F), and relative errors
(bound - F)/F.

Trials are independent and deterministic per (config, trial_index), so
the experiment can run on any number of workers and still produce
byte-identical artifacts; aggregation is a sequential fold in
trial_index order.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import List, Mapping, Optional, Sequence, Tuple

from .bounds import (
    GCD_ONE_KINDS,
    BoundEvaluation,
    BoundKind,
    Value,
    evaluate_all,
)
from .csvio import write_csv
from .frobenius import frobenius_exact
from .sampling import SamplerConfig, derive_trial_seed, sample_vector
from .vectors import CoinVector, ConditionKind

# Fixed tie precedence for best-bound classification. The strong-condition
# kinds come first in their plotting order; the weak-condition kinds
# follow in formula order for classifications restricted to that regime.
CLASSIFY_PRECEDENCE = (
    BoundKind.SELMER,
    BoundKind.WH_CORR,
    BoundKind.WH_MIN_SYL,
    BoundKind.BECK,
    BoundKind.ERDOS_GRAHAM,
    BoundKind.SCHUR,
    BoundKind.VITEK,
    BoundKind.FUKSHANSKY_ROBINS,
)

GCD_BEST_KINDS = GCD_ONE_KINDS
COPRIME_BEST_KINDS = (
    BoundKind.SELMER,
    BoundKind.WH_CORR,
    BoundKind.WH_MIN_SYL,
    BoundKind.BECK,
)

TRIALS_HEADER = (
    "trial",
    "n",
    "vector",
    "frobenius",
    "erdos",
    "schur",
    "vitek",
    "fukrob",
    "selmer",
    "beck",
    "whcorr",
    "whminsyl",
    "ratio_an_a1",
    "best",
    "best_tie",
)

SUMMARY_HEADER = ("n", "bound", "count", "mean", "min", "q1", "median", "q3", "max")

RATIOS_HEADER = ("trial", "n", "r_n", "flag")


@dataclass(frozen=True)
class TrialRecord:
    """One sampled vector with its exact F and bound evaluations."""

    trial_index: int
    n: int
    vector: CoinVector
    frobenius: int
    evaluations: Tuple[BoundEvaluation, ...]
    ratio_an_a1: float
    best_kind: BoundKind
    best_tie: bool

    def evaluation(self, kind: BoundKind) -> Optional[BoundEvaluation]:
        for ev in self.evaluations:
            if ev.kind is kind:
                return ev
        return None

    def value(self, kind: BoundKind) -> Optional[Value]:
        ev = self.evaluation(kind)
        return None if ev is None else ev.value

    def diff(self, kind: BoundKind) -> Optional[Value]:
        """bound - F; present exactly where the bound is applicable."""
        ev = self.evaluation(kind)
        if ev is None or not ev.applicable:
            return None
        return ev.value - self.frobenius


@dataclass(frozen=True)
class SummaryStats:
    """Five-number summary plus mean of the diffs of one (n, kind) cell."""

    count: int
    mean: float
    min: float
    q1: float
    median: float
    q3: float
    max: float


@dataclass(frozen=True)
class RatioRecord:
    """R_n = (WHCorr - F)/(Selmer - F) for one trial.

    flag is "ok" for positive denominators and "negdenom" where Selmer's
    value fell below F; zero denominators are excluded before this record
    is built and counted by the caller.
    """

    trial_index: int
    n: int
    r_n: float
    flag: str


def best_kinds_for(regime: ConditionKind) -> Tuple[BoundKind, ...]:
    if regime is ConditionKind.PAIRWISE_COPRIME:
        return COPRIME_BEST_KINDS
    return GCD_BEST_KINDS


def _classify(
    evaluations: Sequence[BoundEvaluation],
    frobenius: int,
    kinds: Sequence[BoundKind],
) -> Tuple[BoundKind, bool]:
    wanted = set(kinds)
    diffs = {
        ev.kind: ev.value - frobenius
        for ev in evaluations
        if ev.kind in wanted and ev.applicable
    }
    if not diffs:
        raise ValueError("no applicable bound among the requested kinds")
    smallest = min(diffs.values())
    winners = [k for k in CLASSIFY_PRECEDENCE if k in diffs and diffs[k] == smallest]
    return winners[0], len(winners) > 1


def classify_best(
    record: TrialRecord, kinds: Sequence[BoundKind]
) -> Tuple[BoundKind, bool]:
    """Tightest bound among `kinds` on this record, with a tie flag.

    Ties are broken by CLASSIFY_PRECEDENCE; a tie means two or more
    applicable kinds attain the minimal diff.
    """
    return _classify(record.evaluations, record.frobenius, kinds)


def _run_trial(cfg: SamplerConfig, trial_index: int) -> TrialRecord:
    v = sample_vector(cfg, trial_index)
    frob = frobenius_exact(v).value
    evaluations = evaluate_all(v, cfg.condition)
    best, tie = _classify(evaluations, frob, best_kinds_for(cfg.condition))
    return TrialRecord(
        trial_index=trial_index,
        n=v.n,
        vector=v,
        frobenius=frob,
        evaluations=evaluations,
        ratio_an_a1=v.an / v.a1,
        best_kind=best,
        best_tie=tie,
    )


def _trial_task(payload: Tuple[SamplerConfig, int]) -> TrialRecord:
    return _run_trial(*payload)


def run_experiment(
    cfg: SamplerConfig, trials: int, workers: int = 1
) -> List[TrialRecord]:
    """All trial records for one config, ordered by trial_index.

    The result is a pure function of (cfg, trials); `workers` only sets
    how many processes share the work.
    """
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    indices = range(trials)
    if workers <= 1 or trials == 1:
        return [_run_trial(cfg, i) for i in indices]
    chunk = max(1, trials // (workers * 8))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_trial_task, ((cfg, i) for i in indices), chunksize=chunk))


def quantile_type7(sorted_xs: Sequence[float], p: float) -> float:
    """Linear interpolation between order statistics (the type-7 rule).

    The interpolation anchors on whichever endpoint is nearer (the lower
    one below the midpoint, the upper one at or above it); the one-sided
    form can lose the fractional contribution entirely to rounding when
    the endpoints are large and p sits near 1.
    """
    if not sorted_xs:
        raise ValueError("quantile of an empty sequence")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must be in [0, 1], got {p}")
    last = len(sorted_xs) - 1
    h = last * p
    lo = int(h)
    if lo >= last:
        return float(sorted_xs[last])
    frac = h - lo
    span = sorted_xs[lo + 1] - sorted_xs[lo]
    if frac >= 0.5:
        return sorted_xs[lo + 1] - span * (1.0 - frac)
    return sorted_xs[lo] + span * frac


def summarize(records: Sequence[TrialRecord], kind: BoundKind) -> SummaryStats:
    """Summary of diffs for one kind over the records where it applies."""
    diffs = sorted(
        float(d) for d in (r.diff(kind) for r in records) if d is not None
    )
    if not diffs:
        raise ValueError(f"no applicable records for {kind.value}")
    return SummaryStats(
        count=len(diffs),
        mean=math.fsum(diffs) / len(diffs),
        min=diffs[0],
        q1=quantile_type7(diffs, 0.25),
        median=quantile_type7(diffs, 0.5),
        q3=quantile_type7(diffs, 0.75),
        max=diffs[-1],
    )


def ratio_whcorr_selmer(record: TrialRecord) -> Optional[RatioRecord]:
    """R_n for one record, or None (excluded) when Selmer's value equals F.

    Both bounds must be applicable on the record. A denominator below
    zero is kept and flagged "negdenom" so such anomalies stay visible.
    """
    whcorr = record.evaluation(BoundKind.WH_CORR)
    selmer = record.evaluation(BoundKind.SELMER)
    if whcorr is None or selmer is None or not (whcorr.applicable and selmer.applicable):
        raise ValueError("R_n needs both WHCorr and Selmer applicable")
    denominator = selmer.value - record.frobenius
    if denominator == 0:
        return None
    r_n = (whcorr.value - record.frobenius) / denominator
    return RatioRecord(
        trial_index=record.trial_index,
        n=record.n,
        r_n=r_n,
        flag="ok" if denominator > 0 else "negdenom",
    )


def collect_ratios(
    records: Sequence[TrialRecord],
) -> Tuple[List[RatioRecord], int]:
    """Ratio rows for the records carrying both bounds; returns (rows, excluded).

    `excluded` counts zero-denominator trials. Records where either bound
    is not applicable (n = 2 leaves WHCorr undefined) contribute nothing.
    """
    rows: List[RatioRecord] = []
    excluded = 0
    for record in records:
        whcorr = record.evaluation(BoundKind.WH_CORR)
        selmer = record.evaluation(BoundKind.SELMER)
        if whcorr is None or selmer is None:
            continue
        if not (whcorr.applicable and selmer.applicable):
            continue
        row = ratio_whcorr_selmer(record)
        if row is None:
            excluded += 1
        else:
            rows.append(row)
    return rows, excluded


def relative_error(record: TrialRecord, kind: BoundKind) -> Optional[float]:
    """(bound - F)/F, or None (excluded) when F <= 0."""
    diff = record.diff(kind)
    if diff is None:
        raise ValueError(f"{kind.value} is not applicable on this record")
    if record.frobenius <= 0:
        return None
    return float(diff) / record.frobenius


def dimension_seed(global_seed: int, n: int) -> int:
    """Per-dimension master seed: the documented trial-seed mix on (seed, n)."""
    return derive_trial_seed(global_seed, n)


def trials_csv_rows(records: Sequence[TrialRecord]):
    for r in records:
        cells = [r.trial_index, r.n, r.vector.csv_field(), r.frobenius]
        for kind in BoundKind:
            ev = r.evaluation(kind)
            cells.append(ev.value if ev is not None and ev.applicable else None)
        cells.extend([r.ratio_an_a1, r.best_kind.value, r.best_tie])
        yield cells


def write_trials_csv(path: str, records: Sequence[TrialRecord], preamble: Mapping) -> None:
    write_csv(path, TRIALS_HEADER, trials_csv_rows(records), preamble)


def write_summary_csv(
    path: str,
    stats_rows: Sequence[Tuple[int, BoundKind, SummaryStats]],
    preamble: Mapping,
) -> None:
    rows = [
        (n, kind.value, s.count, s.mean, s.min, s.q1, s.median, s.q3, s.max)
        for n, kind, s in stats_rows
    ]
    write_csv(path, SUMMARY_HEADER, rows, preamble)


def write_ratios_csv(
    path: str, ratio_rows: Sequence[RatioRecord], preamble: Mapping
) -> None:
    rows = [(r.trial_index, r.n, r.r_n, r.flag) for r in ratio_rows]
    write_csv(path, RATIOS_HEADER, rows, preamble)
