"""Tiny CSV helpers with round-trip float formatting."""

from __future__ import annotations

import csv
from pathlib import Path


def fmt(x) -> str:
    """Shortest exact decimal representation of a float."""
    return repr(float(x))


def write_csv(path, header, rows) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(header)
        for row in rows:
            w.writerow([c if isinstance(c, str) else fmt(c) for c in row])


def read_csv(path):
    with open(path, newline="") as fh:
        r = csv.reader(fh)
        header = next(r)
        rows = [[float(c) for c in row] for row in r if row]
    return header, rows
