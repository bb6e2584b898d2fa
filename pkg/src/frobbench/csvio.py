"""CSV artifacts: config-echo preamble, canonical cell formats, atomic writes.

Every artifact starts with commented `# key=value` lines echoing the
configuration that produced it, then a header row. Cells use canonical
forms so identical runs produce byte-identical files: integers as plain
decimals, floats as their shortest round-trip repr, exact halves as x.5,
missing values as NA, booleans as True/False. Files are written to a
temporary name in the target directory and renamed into place, so readers
never observe a partially written artifact and failed runs leave nothing
behind.
"""

from __future__ import annotations

import csv
import io
import os
import tempfile
from fractions import Fraction
from typing import Iterable, Mapping, Sequence


def format_cell(x) -> str:
    if x is None:
        return "NA"
    if isinstance(x, bool):
        return "True" if x else "False"
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return str(x.numerator)
        return repr(float(x))  # denominator 2 only; exact in binary
    if isinstance(x, float):
        return repr(x)
    return str(x)


def write_csv(
    path: str,
    header: Sequence[str],
    rows: Iterable[Sequence],
    preamble: Mapping[str, object],
) -> None:
    buf = io.StringIO()
    for key, val in preamble.items():
        buf.write(f"# {key}={val}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_cell(cell) for cell in row])
    _atomic_write_text(path, buf.getvalue())


def _atomic_write_text(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".partial-", suffix=".csv")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise
