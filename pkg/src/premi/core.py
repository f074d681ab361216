"""Data model, validation, deterministic RNG streams, and the empirical variogram.

Covariate codes are 1-based in files and 0-based everywhere inside the
package; the CSV layer does the conversion.
"""

from dataclasses import dataclass, field, replace

import numpy as np

from .errors import (
    CategoryOutOfRange,
    InsufficientData,
    LengthMismatch,
    NonRectangularOutcomeForMVN,
    UnsortedTimes,
)

__all__ = [
    "RandomSource",
    "Dataset",
    "validate_dataset",
    "empirical_variogram",
    "suggest_gp_log_hyper_means",
]


@dataclass(frozen=True)
class RandomSource:
    """Deterministic random stream: identical (seed, stream) gives identical draws."""

    seed: int
    stream: int = 0

    def generator(self) -> np.random.Generator:
        ss = np.random.SeedSequence(entropy=self.seed, spawn_key=(self.stream,))
        return np.random.Generator(np.random.PCG64(ss))

    def child(self, stream: int) -> "RandomSource":
        return RandomSource(self.seed, stream)


@dataclass
class Dataset:
    """Validated inputs for one analysis.

    Parameters
    ----------
    covariates : (N, Q) int array
        Category codes, 0-based. Column q takes values in {0..category_counts[q]-1}.
    category_counts : (Q,) int array
        Number of categories per covariate.
    outcome : list of N float arrays
        Per-individual outcome vectors, possibly empty (GP only).
    times : list of N float arrays
        Observation times, strictly increasing within an individual.
    fixed_effects : (N, R) float array or None
        Optional confounder matrix; R may be 0.
    ids : list of N strings
        Opaque identifiers in first-appearance order from the covariates file.
    """

    covariates: np.ndarray
    category_counts: np.ndarray
    outcome: list
    times: list
    fixed_effects: np.ndarray | None = None
    ids: list = field(default_factory=list)
    validated_for: str | None = None

    @property
    def n_individuals(self) -> int:
        return self.covariates.shape[0]

    @property
    def n_covariates(self) -> int:
        return self.covariates.shape[1]

    @property
    def n_fixed_effects(self) -> int:
        return 0 if self.fixed_effects is None else self.fixed_effects.shape[1]

    @property
    def n_obs(self) -> np.ndarray:
        return np.array([len(y) for y in self.outcome], dtype=int)

    @property
    def total_obs(self) -> int:
        return int(self.n_obs.sum())

    def common_times(self) -> np.ndarray:
        """Shared time grid (rectangular outcomes only)."""
        return self.times[0]

    def outcome_matrix(self) -> np.ndarray:
        """(N, M) stacked outcomes; valid after mvn validation."""
        return np.asarray(self.outcome, dtype=float)


def validate_dataset(raw: Dataset, response_kind: str) -> Dataset:
    """Check invariants and return a normalized dataset.

    mvn requires a rectangular outcome on one shared grid; gp permits ragged
    outcomes including empty ones (covariates-only likelihood contribution).
    """
    if response_kind not in ("mvn", "gp"):
        raise ValueError(f"unknown response kind {response_kind!r}")

    x = np.asarray(raw.covariates, dtype=np.int64)
    counts = np.asarray(raw.category_counts, dtype=np.int64)
    n, q = x.shape
    if counts.shape != (q,):
        raise LengthMismatch(f"{q} covariate columns but {counts.shape} category counts")
    if np.any(x < 0) or np.any(x >= counts[None, :]):
        bad = np.argwhere((x < 0) | (x >= counts[None, :]))[0]
        raise CategoryOutOfRange(
            f"individual {bad[0]} covariate {bad[1]}: code {x[bad[0], bad[1]] + 1} "
            f"outside 1..{counts[bad[1]]}"
        )

    if len(raw.outcome) != n or len(raw.times) != n:
        raise LengthMismatch(
            f"{n} individuals but {len(raw.outcome)} outcome and {len(raw.times)} time vectors"
        )
    ys, ts = [], []
    for i, (y_i, t_i) in enumerate(zip(raw.outcome, raw.times)):
        y_i = np.asarray(y_i, dtype=float).ravel()
        t_i = np.asarray(t_i, dtype=float).ravel()
        if y_i.shape != t_i.shape:
            raise LengthMismatch(
                f"individual {i}: {y_i.size} outcome values vs {t_i.size} times"
            )
        if t_i.size > 1 and np.any(np.diff(t_i) <= 0):
            raise UnsortedTimes(f"individual {i}: times not strictly increasing")
        ys.append(y_i)
        ts.append(t_i)

    if response_kind == "mvn":
        lens = {len(t) for t in ts}
        if len(lens) != 1:
            raise NonRectangularOutcomeForMVN(
                f"observation counts vary across individuals: {sorted(lens)}"
            )
        m = lens.pop()
        if m == 0:
            raise NonRectangularOutcomeForMVN("mvn response requires at least one time point")
        grid = ts[0]
        for i, t_i in enumerate(ts):
            if not np.array_equal(t_i, grid):
                raise NonRectangularOutcomeForMVN(
                    f"individual {i} times differ from the shared grid"
                )

    w = raw.fixed_effects
    if w is not None:
        w = np.asarray(w, dtype=float)
        if w.ndim != 2 or w.shape[0] != n:
            raise LengthMismatch(f"fixed effects shape {w.shape} does not match N={n}")
        if w.shape[1] == 0:
            w = None

    ids = list(raw.ids) if raw.ids else [str(i) for i in range(n)]
    if len(ids) != n:
        raise LengthMismatch(f"{len(ids)} ids for {n} individuals")

    return replace(
        raw,
        covariates=x,
        category_counts=counts,
        outcome=ys,
        times=ts,
        fixed_effects=w,
        ids=ids,
        validated_for=response_kind,
    )


def empirical_variogram(dataset: Dataset, n_bins: int = 10):
    """Empirical semivariogram over within-individual observation pairs.

    Returns an array of (lag, semivariance) rows, one per non-empty bin, where
    semivariance(h) = mean of 0.5*(y(t) - y(t'))^2 over pairs whose lag |t-t'|
    falls in the bin. Bins are equal-width over the observed lag range; the
    reported lag is the bin midpoint.
    """
    lags, sq = [], []
    for y_i, t_i in zip(dataset.outcome, dataset.times):
        m = len(y_i)
        if m < 2:
            continue
        j, k = np.triu_indices(m, k=1)
        lags.append(t_i[k] - t_i[j])
        sq.append(0.5 * (y_i[k] - y_i[j]) ** 2)
    if not lags:
        raise InsufficientData("no individual has two or more observations")
    lags = np.concatenate(lags)
    sq = np.concatenate(sq)

    lo, hi = float(lags.min()), float(lags.max())
    if hi <= lo:  # all pairs share one lag
        return np.array([[lo, float(sq.mean())]])
    edges = np.linspace(lo, hi, n_bins + 1)
    which = np.clip(np.digitize(lags, edges) - 1, 0, n_bins - 1)
    out = []
    for b in range(n_bins):
        mask = which == b
        if mask.any():
            out.append([0.5 * (edges[b] + edges[b + 1]), float(sq[mask].mean())])
    return np.array(out)


def suggest_gp_log_hyper_means(variogram: np.ndarray):
    """Rough (log a, log l, log s2) prior means read off a variogram.

    Nugget (noise variance) from the shortest-lag bin, sill (signal+noise)
    from the variogram plateau, length scale from the lag where the curve
    reaches ~63% of the way from nugget to sill. Heuristic only.
    """
    gamma = variogram[:, 1]
    lag = variogram[:, 0]
    nugget = max(float(gamma[0]), 1e-8)
    sill = max(float(np.median(gamma[len(gamma) // 2:])), nugget * (1 + 1e-6))
    signal = max(sill - nugget, 1e-8)
    target = nugget + 0.63 * signal
    above = np.nonzero(gamma >= target)[0]
    range_lag = float(lag[above[0]]) if above.size else float(lag[-1])
    # gamma(h) ~ nugget + a(1 - exp(-h^2/(2l))): 63% recovery at h^2 ~ 2l
    log_l = np.log(max(range_lag**2 / 2.0, 1e-8))
    return float(np.log(signal)), float(log_l), float(np.log(nugget))
