import numpy as np
from scipy import integrate, linalg
from scipy.special import ndtr
from scipy.stats import norm

from attr import attr, attributes

from mmvsdr.errors import (
    DimensionMismatch, InvalidModel, QuadratureFailure, ZeroDirection
)


QUADRATURE_TOLERANCE = 1e-10


def _frozen(value):
    array = np.array(value, dtype=float, copy=True)
    array.setflags(write=False)
    return array


@attributes(repr=False, frozen=True, eq=False)
class GaussianTwoClassModel(object):
    """ Two Gaussian classes X | Y ~ N(Y mu, Sigma), Y in {-1, 1}, with
    P(Y = 1) = p1.
    """
    mu = attr(converter=_frozen)
    sigma = attr(converter=_frozen)
    p1 = attr(converter=float)

    def __attrs_post_init__(self):
        p = self.mu.shape[0]
        if self.mu.ndim != 1:
            raise InvalidModel("mu must be a vector")
        if self.sigma.shape != (p, p):
            raise DimensionMismatch((p, p), self.sigma.shape)
        if np.max(np.abs(self.sigma - self.sigma.T)) > 1e-10:
            raise InvalidModel("sigma must be symmetric")
        if np.min(linalg.eigvalsh(self.sigma)) <= 0:
            raise InvalidModel("sigma must be positive definite")
        if not 0 < self.p1 < 1:
            raise InvalidModel(
                "p1 must lie in (0, 1), got {0!r}".format(self.p1))

    @property
    def p(self):
        return self.mu.shape[0]

    @property
    def p_minus(self):
        return 1.0 - self.p1

    def standardized_separation(self, beta):
        """ delta(beta) = beta^T mu / sqrt(beta^T Sigma beta)."""
        beta = np.asarray(beta, dtype=float).ravel()
        if beta.shape != (self.p,):
            raise DimensionMismatch(self.p, beta.shape)
        if not np.linalg.norm(beta) > 0:
            raise ZeroDirection()
        return float(beta @ self.mu / np.sqrt(beta @ self.sigma @ beta))

    def optimal_direction(self):
        """ Unit vector along Sigma^-1 mu, the population maximizer of the
        MV index and the Fisher LDA direction."""
        w = linalg.solve(self.sigma, self.mu, assume_a="pos")
        return w / np.linalg.norm(w)

    def __repr__(self):
        return "GaussianTwoClassModel(p={0.p}, p1={0.p1!r})".format(self)


def _squared_gap_integral(shift):
    """ int [Phi(t) - Phi(t + shift)]^2 dPhi(t)."""
    def integrand(t):
        return (ndtr(t) - ndtr(t + shift)) ** 2 * norm.pdf(t)

    value, abserr = integrate.quad(
        integrand, -np.inf, np.inf, epsabs=QUADRATURE_TOLERANCE,
        epsrel=QUADRATURE_TOLERANCE, limit=200)
    if abserr > 100 * QUADRATURE_TOLERANCE:
        raise QuadratureFailure(value, abserr, QUADRATURE_TOLERANCE)
    return value


def mv_population_gaussian(beta, model):
    """ Population MV index of beta^T X under a two-class Gaussian model:

        p1 p-1 { p1 int [Phi(t) - Phi(t + 2 delta)]^2 dPhi(t)
               + p-1 int [Phi(t) - Phi(t - 2 delta)]^2 dPhi(t) }

    with delta = beta^T mu / sqrt(beta^T Sigma beta).
    """
    delta = model.standardized_separation(beta)
    p1, p_minus = model.p1, model.p_minus
    return p1 * p_minus * (
        p1 * _squared_gap_integral(2 * delta)
        + p_minus * _squared_gap_integral(-2 * delta)
    )
