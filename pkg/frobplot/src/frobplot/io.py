"""CSV loading and schema validation.

Every artifact starts with `# key=value` preamble lines followed by one
header row, so readers skip comments and then check the header against
the expected schema. A figure is never rendered from a file that lacks
a required column or carries no data rows; the error names exactly what
is missing so a mismatched input is diagnosable from the message alone.
"""

from __future__ import annotations

from typing import Tuple

import pandas as pd

TRIALS_COLUMNS: Tuple[str, ...] = (
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

RATIOS_COLUMNS: Tuple[str, ...] = ("trial", "n", "r_n", "flag")

PRIME_RATIOS_COLUMNS: Tuple[str, ...] = ("p", "epsilon", "c", "ratio")

# canonical bound order: weak-condition bounds first, then the strong four;
# also fixes legend order and the colour assignment across all figures
BOUND_ORDER: Tuple[str, ...] = (
    "erdos",
    "schur",
    "vitek",
    "fukrob",
    "selmer",
    "beck",
    "whcorr",
    "whminsyl",
)


class SchemaError(ValueError):
    """The input CSV does not match the schema a figure kind expects."""


def read_raw(path: str) -> pd.DataFrame:
    """Parse a preamble-commented CSV, rejecting empty or row-less files."""
    try:
        frame = pd.read_csv(path, comment="#")
    except FileNotFoundError:
        raise SchemaError(f"input file not found: {path}") from None
    except pd.errors.EmptyDataError:
        raise SchemaError(f"{path}: empty file, nothing to plot") from None
    if frame.empty:
        raise SchemaError(f"{path}: no data rows")
    return frame


def read_table(path: str, columns: Tuple[str, ...]) -> pd.DataFrame:
    frame = read_raw(path)
    missing = [c for c in columns if c not in frame.columns]
    if missing:
        raise SchemaError(f"{path}: missing columns: {', '.join(missing)}")
    return frame


def _with_extremes(frame: pd.DataFrame) -> pd.DataFrame:
    # vector cells are semicolon-joined entries, e.g. "8;32;59"
    parts = frame["vector"].astype(str).str.split(";")
    frame = frame.copy()
    frame["a1"] = parts.map(lambda entries: min(int(v) for v in entries))
    frame["an"] = parts.map(lambda entries: max(int(v) for v in entries))
    return frame


def load_trials(path: str) -> pd.DataFrame:
    """Trial records with derived `a1`/`an` columns parsed from the vector."""
    return _with_extremes(read_table(path, TRIALS_COLUMNS))


def load_ratios(path: str) -> pd.DataFrame:
    return read_table(path, RATIOS_COLUMNS)


def load_prime_ratios(path: str) -> pd.DataFrame:
    return read_table(path, PRIME_RATIOS_COLUMNS)


def load_box_table(path: str) -> Tuple[str, pd.DataFrame]:
    """Box-style kinds accept either schema: trial records or error ratios.

    Returns ("trials", frame-with-extremes) or ("ratios", frame). A file
    matching neither is reported against the trials schema, the primary
    input for these kinds.
    """
    frame = read_raw(path)
    columns = set(frame.columns)
    if set(TRIALS_COLUMNS) <= columns:
        return "trials", _with_extremes(frame)
    if set(RATIOS_COLUMNS) <= columns:
        return "ratios", frame
    missing = [c for c in TRIALS_COLUMNS if c not in columns]
    raise SchemaError(f"{path}: missing columns: {', '.join(missing)}")


def long_differences(frame: pd.DataFrame) -> pd.DataFrame:
    """Melt trial records into one row per (trial, bound) with diff = bound - F.

    Inapplicable bounds (NA cells) are dropped, so downstream code sees
    only evaluated differences. Keeps n, a1, an for grouping.
    """
    present = [b for b in BOUND_ORDER if b in frame.columns]
    long = frame.melt(
        id_vars=["trial", "n", "frobenius", "a1", "an"],
        value_vars=present,
        var_name="bound",
        value_name="value",
    )
    long = long.dropna(subset=["value"])
    long["diff"] = long["value"] - long["frobenius"]
    return long.reset_index(drop=True)
