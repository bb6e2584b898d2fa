"""Batch figure renderer for the Frobenius bound experiment artifacts.

The experiment CLI writes CSV files (trials, summaries, error ratios,
prime-ratio tables); this package turns them into the study's figures.
It talks to the experiment strictly through those CSV schemas and never
imports the experiment code itself.
"""

from .figures import KINDS, FigureSpec, render
from .io import (
    BOUND_ORDER,
    PRIME_RATIOS_COLUMNS,
    RATIOS_COLUMNS,
    TRIALS_COLUMNS,
    SchemaError,
    load_box_table,
    load_prime_ratios,
    load_trials,
    long_differences,
)
from .smoothing import ecdf, gaussian_kde, loess, silverman_bandwidth, tricube

__version__ = "0.1.0"

__all__ = [
    "BOUND_ORDER",
    "FigureSpec",
    "KINDS",
    "PRIME_RATIOS_COLUMNS",
    "RATIOS_COLUMNS",
    "SchemaError",
    "TRIALS_COLUMNS",
    "ecdf",
    "gaussian_kde",
    "load_box_table",
    "load_prime_ratios",
    "load_trials",
    "loess",
    "long_differences",
    "render",
    "silverman_bandwidth",
    "tricube",
]
