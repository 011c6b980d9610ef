"""CSV readers and writers shared by the command-line tools.

A series file holds one value per line, with an optional single header
line whose first token is not a number. Blank lines are ignored. ``-``
stands for stdin/stdout.
"""

import csv
import io
import sys
from contextlib import contextmanager
from pathlib import Path

import numpy as np

from .errors import InvalidSeries
from .projection import orthonormalize


@contextmanager
def _open(path, mode):
    if str(path) == "-":
        stream = sys.stdin if "r" in mode else sys.stdout
        yield stream
        if "w" in mode:
            stream.flush()
    else:
        with open(path, mode, newline="") as fh:
            yield fh


def _is_number(token):
    try:
        float(token)
    except ValueError:
        return False
    return True


def _rows(text):
    rows = [r for r in csv.reader(io.StringIO(text)) if any(c.strip() for c in r)]
    if rows and not _is_number(rows[0][0].strip()):
        return rows[0], rows[1:]
    return None, rows


def parse_series(text):
    header, rows = _rows(text)
    values = []
    for lineno, row in enumerate(rows, start=2 if header else 1):
        cells = [c.strip() for c in row]
        if len(cells) != 1 or not _is_number(cells[0]):
            raise InvalidSeries(f"line {lineno}: expected a single number, got {','.join(row)!r}")
        values.append(float(cells[0]))
    return np.array(values)


def read_series(path):
    with _open(path, "r") as fh:
        return parse_series(fh.read())


def format_series(values, header="value"):
    lines = [header] if header else []
    lines += [f"{v:.17g}" for v in values]
    return "\n".join(lines) + "\n"


def write_series(path, values, header="value"):
    with _open(path, "w") as fh:
        fh.write(format_series(values, header))


def read_basis(path):
    """Read basis vectors stored one per column and orthonormalize them."""
    with _open(path, "r") as fh:
        _, rows = _rows(fh.read())
    try:
        table = np.array([[float(c) for c in row] for row in rows])
    except ValueError as exc:
        raise InvalidSeries(f"{path}: basis file must be numeric ({exc})") from exc
    if table.ndim != 2 or table.size == 0:
        raise InvalidSeries(f"{path}: basis file must be a rectangular table")
    return orthonormalize(list(table.T))


def write_table(path, columns):
    """Write ``{header: column}`` as CSV; values with 17 significant digits."""
    names = list(columns)
    data = [np.asarray(columns[n]) for n in names]
    with _open(path, "w") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(names)
        for row in zip(*data):
            w.writerow([v if isinstance(v, (str, int, np.integer)) else f"{v:.17g}" for v in row])


def read_table(path):
    """Read a CSV with a header row into ``{header: list of strings}``."""
    text = Path(path).read_text() if str(path) != "-" else sys.stdin.read()
    rows = list(csv.reader(io.StringIO(text)))
    header, body = rows[0], [r for r in rows[1:] if r]
    return {h: [r[i] for r in body] for i, h in enumerate(header)}
