"""Exception types raised by validation and numerical routines."""


class PremiError(Exception):
    """Base class for all package-specific errors."""


class NonRectangularOutcomeForMVN(PremiError):
    """MVN response requires every individual to share one time grid."""


class CategoryOutOfRange(PremiError):
    """A covariate code falls outside 1..n_categories for its column."""


class UnsortedTimes(PremiError):
    """An individual's observation times are not strictly increasing."""


class LengthMismatch(PremiError):
    """Outcome and time vectors (or row counts across files) disagree."""


class InsufficientData(PremiError):
    """Not enough within-individual pairs to form a variogram."""


class NonSpdCovariance(PremiError):
    """A matrix required to be SPD failed Cholesky even after jitter."""


class SingularScatter(PremiError):
    """Empirical scatter matrix is singular; default prior undefined."""


class SingularSchurComplement(PremiError):
    """Woodbury block update hit a non-invertible Schur complement."""


class SingularGridKernel(PremiError):
    """Inducing-grid kernel matrix is singular; refine or shrink grid."""


class InvalidGrid(PremiError):
    """Sparse-approximation grid is empty, unsorted, or has duplicates."""


class AllComponentsZeroMass(PremiError):
    """Every mixture component got zero posterior mass for some row."""


class DegenerateSimilarity(PremiError):
    """All similarity entries identical; no partition is recoverable."""


class EmptyFinalCluster(PremiError):
    """A requested final cluster has no members in the reference partition."""


class EmptyPosterior(PremiError):
    """No recorded posterior samples to summarize or predict from."""


class ConfigError(PremiError):
    """Run configuration is malformed or internally inconsistent."""
