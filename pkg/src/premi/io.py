"""CSV file formats.

Covariates: header ``id,x1,...,xQ`` with 1-based category codes.
Outcome: long format ``id,time,value``.
Fixed effects: header ``id,w1,...,wR``.

IDs are opaque strings; individual order is first appearance in the
covariates file. All floats are written with shortest round-trip formatting
so that identical runs produce byte-identical files.
"""

import csv
import os

import numpy as np

from .core import Dataset
from .errors import LengthMismatch

__all__ = [
    "fmt",
    "read_dataset",
    "write_covariates",
    "write_outcome",
    "write_fixed_effects",
    "write_labels",
    "read_labels",
]


def fmt(x) -> str:
    """Shortest decimal string that round-trips to the same float."""
    return repr(float(x))


def _read_rows(path):
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    if not rows:
        raise LengthMismatch(f"{path}: empty file")
    return rows[0], rows[1:]


def read_dataset(
    covariates_path,
    outcome_path=None,
    fixed_effects_path=None,
    category_counts=None,
) -> Dataset:
    """Assemble an unvalidated Dataset from CSV files.

    Category counts default to the per-column maximum observed code; pass
    category_counts to declare categories that never occur.
    """
    header, rows = _read_rows(covariates_path)
    n_cov = len(header) - 1
    ids, codes = [], []
    for row in rows:
        if len(row) != n_cov + 1:
            raise LengthMismatch(f"{covariates_path}: row has {len(row)} fields, expected {n_cov + 1}")
        ids.append(row[0])
        codes.append([int(v) for v in row[1:]])
    x = np.asarray(codes, dtype=np.int64) - 1  # 0-based internally
    if category_counts is None:
        counts = x.max(axis=0) + 1 if len(codes) else np.zeros(n_cov, dtype=np.int64)
    else:
        counts = np.asarray(category_counts, dtype=np.int64)
    index = {ident: i for i, ident in enumerate(ids)}
    if len(index) != len(ids):
        raise LengthMismatch(f"{covariates_path}: duplicate ids")

    per_y = [[] for _ in ids]
    per_t = [[] for _ in ids]
    if outcome_path is not None and os.path.exists(outcome_path):
        _, orows = _read_rows(outcome_path)
        for row in orows:
            ident, t, v = row[0], float(row[1]), float(row[2])
            if ident not in index:
                raise LengthMismatch(f"{outcome_path}: unknown id {ident!r}")
            per_t[index[ident]].append(t)
            per_y[index[ident]].append(v)
    outcome = [np.asarray(v, dtype=float) for v in per_y]
    times = [np.asarray(v, dtype=float) for v in per_t]

    fixed = None
    if fixed_effects_path is not None and os.path.exists(fixed_effects_path):
        fheader, frows = _read_rows(fixed_effects_path)
        n_fix = len(fheader) - 1
        fixed = np.full((len(ids), n_fix), np.nan)
        for row in frows:
            if row[0] not in index:
                raise LengthMismatch(f"{fixed_effects_path}: unknown id {row[0]!r}")
            fixed[index[row[0]]] = [float(v) for v in row[1:]]
        if np.isnan(fixed).any():
            missing = [ids[i] for i in np.nonzero(np.isnan(fixed).any(axis=1))[0][:5]]
            raise LengthMismatch(f"{fixed_effects_path}: no row for ids {missing}")

    return Dataset(
        covariates=x,
        category_counts=counts,
        outcome=outcome,
        times=times,
        fixed_effects=fixed,
        ids=ids,
    )


def write_covariates(path, dataset: Dataset):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["id"] + [f"x{q + 1}" for q in range(dataset.n_covariates)])
        for i, ident in enumerate(dataset.ids):
            w.writerow([ident] + [str(int(c) + 1) for c in dataset.covariates[i]])


def write_outcome(path, dataset: Dataset):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["id", "time", "value"])
        for ident, t_i, y_i in zip(dataset.ids, dataset.times, dataset.outcome):
            for t, y in zip(t_i, y_i):
                w.writerow([ident, fmt(t), fmt(y)])


def write_fixed_effects(path, dataset: Dataset):
    if dataset.fixed_effects is None:
        return
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["id"] + [f"w{r + 1}" for r in range(dataset.n_fixed_effects)])
        for ident, row in zip(dataset.ids, dataset.fixed_effects):
            w.writerow([ident] + [fmt(v) for v in row])


def write_labels(path, ids, labels):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["id", "cluster"])
        for ident, lab in zip(ids, labels):
            w.writerow([ident, str(int(lab))])


def read_labels(path):
    """Returns (ids, labels) from an id,cluster CSV."""
    _, rows = _read_rows(path)
    ids = [r[0] for r in rows]
    labels = np.asarray([int(r[1]) for r in rows], dtype=int)
    return ids, labels
