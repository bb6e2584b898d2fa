"""Exact Frobenius numbers, closed-form upper bounds, and the experiments
that compare them: deterministic Monte Carlo trials, an exhaustive
counterexample search for Selmer's formula under the weak coprimality
condition, and the prime-pair tables showing no sub-quadratic bound can
hold in general.
"""

from .bounds import (
    BoundEvaluation,
    BoundKind,
    bound_beck,
    bound_erdos_graham,
    bound_fukshansky_robins,
    bound_schur,
    bound_selmer,
    bound_vitek,
    bound_wh_corrected,
    bound_wh_min_sylvester,
    c_of_n,
    c_of_n_log,
    c_of_n_stirling,
    c_of_n_stirling_log,
    evaluate_all,
    gamma_half_integer,
    log_gamma_half_integer,
    s_of_a,
)
from .counterexamples import (
    FailureRow,
    embed_multiples,
    search_selmer_failures,
    verify_failure,
)
from .frobenius import (
    FrobeniusResult,
    frobenius_bruteforce,
    frobenius_exact,
    frobenius_sylvester,
    is_representable,
)
from .montecarlo import (
    RatioRecord,
    SummaryStats,
    TrialRecord,
    classify_best,
    ratio_whcorr_selmer,
    relative_error,
    run_experiment,
    summarize,
)
from .sampling import (
    SamplerConfig,
    SamplingError,
    Xoshiro256StarStar,
    derive_trial_seed,
    sample_vector,
)
from .subquadratic import (
    SubquadraticRow,
    build_table,
    construct_thm2_instance,
    primes_up_to,
    ratio_series,
    test_bound,
)
from .vectors import (
    CoinVector,
    ConditionKind,
    gcd_all,
    is_pairwise_coprime,
    make_coin_vector,
    satisfies_condition,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
