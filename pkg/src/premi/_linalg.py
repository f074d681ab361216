"""Cholesky helpers with the shared jitter-escalation policy."""

import logging

import numpy as np
from scipy.linalg import cho_solve, solve_triangular

from .errors import NonSpdCovariance

log = logging.getLogger("premi")

# Jitter starts at 1e-8 * mean diagonal and escalates tenfold up to 1e-4.
_JITTER_START = 1e-8
_JITTER_CAP = 1e-4


def chol_jitter(mat):
    """Lower Cholesky factor of an SPD matrix, adding escalating jitter on failure.

    Returns (L, jitter_used). Raises NonSpdCovariance once the jitter cap
    (1e-4 times the mean diagonal) is exhausted.
    """
    if mat.shape[0] == 0:
        return np.zeros((0, 0)), 0.0
    try:
        return np.linalg.cholesky(mat), 0.0
    except np.linalg.LinAlgError:
        pass
    scale = float(np.mean(np.diag(mat)))
    if not np.isfinite(scale) or scale <= 0.0:
        raise NonSpdCovariance("matrix has non-positive or non-finite diagonal")
    eye = np.eye(mat.shape[0])
    level = _JITTER_START
    while level <= _JITTER_CAP * (1.0 + 1e-12):
        jitter = level * scale
        try:
            L = np.linalg.cholesky(mat + jitter * eye)
            log.debug("cholesky needed jitter %.3e", jitter)
            return L, jitter
        except np.linalg.LinAlgError:
            level *= 10.0
    raise NonSpdCovariance(
        f"cholesky failed at dimension {mat.shape[0]} even with jitter {_JITTER_CAP * scale:.3e}"
    )


def chol_logdet(L):
    """log det of the matrix whose lower Cholesky factor is L (0 for empty)."""
    if L.shape[0] == 0:
        return 0.0
    return 2.0 * float(np.sum(np.log(np.diag(L))))


def chol_inv(L):
    """Full inverse from a lower Cholesky factor."""
    if L.shape[0] == 0:
        return np.zeros((0, 0))
    return cho_solve((L, True), np.eye(L.shape[0]))


def solve_lower(L, b):
    """Solve L x = b for lower-triangular L."""
    if L.shape[0] == 0:
        return np.zeros_like(b)
    return solve_triangular(L, b, lower=True)


def mvn_logpdf_chol(x, mean, L):
    """Gaussian log density at x given mean and lower Cholesky factor of the covariance."""
    n = L.shape[0]
    if n == 0:
        return 0.0
    z = solve_lower(L, x - mean)
    return -0.5 * (n * np.log(2.0 * np.pi) + chol_logdet(L) + float(z @ z))


def symmetrize(mat):
    return 0.5 * (mat + mat.T)
