import numpy as np
from scipy import linalg

from mmvsdr.errors import DegenerateCovariance, InvalidConfiguration


def ar_covariance(p, rho):
    """ The p x p AR(1) correlation matrix, entry (i, j) = rho^|i - j|.

    Parameters
    ----------
    p: int
        Dimension (>= 1).
    rho: float
        Correlation between neighbouring coordinates, in (0, 1).
    """
    if not 0 < rho < 1:
        raise InvalidConfiguration(
            "rho must lie in (0, 1), got {0!r}".format(rho))
    if p < 1:
        raise InvalidConfiguration("p must be >= 1, got {0!r}".format(p))
    lags = np.abs(np.subtract.outer(np.arange(p), np.arange(p)))
    return np.power(float(rho), lags)


def cholesky_factor(covariance):
    """ Lower triangular L with L L^T = covariance."""
    try:
        return linalg.cholesky(covariance, lower=True)
    except linalg.LinAlgError as e:
        raise DegenerateCovariance(
            "Covariance is not positive definite: {0}".format(e))
