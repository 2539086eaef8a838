import enum
import logging

import numpy as np

from attr import attr, attributes
from attr.validators import instance_of

from mmvsdr.core import Purpose, RngStream, validate_dataset
from mmvsdr.errors import DimensionMismatch, InvalidModel, OddN
from .covariance import ar_covariance, cholesky_factor


logger = logging.getLogger(__name__)

#: Lag-one correlation of the predictors (Models II to IV) and of the
#: noise (Model I).
AR_RHO = 0.5

#: Scale of the label noise in Models III and IV.
LABEL_NOISE_SCALE = 0.2

BETA_1 = (1.0, 1.0, 1.0, 1.0)
BETA_2 = (1.0, -1.0, 1.0, -1.0)

_MIN_P = len(BETA_1)


def _padded(head, p):
    if p < _MIN_P:
        raise InvalidModel(
            "Simulation models need p >= {0}, got {1}".format(_MIN_P, p))
    beta = np.zeros(p)
    beta[:len(head)] = head
    return beta


def beta_1(p):
    """ (1, 1, 1, 1, 0, ..., 0) in dimension p."""
    return _padded(BETA_1, p)


def beta_2(p):
    """ (1, -1, 1, -1, 0, ..., 0) in dimension p."""
    return _padded(BETA_2, p)


def _check_n(n):
    if n < 2:
        raise InvalidModel("Sample size must be >= 2, got {0}".format(n))


def _predictors(n, p, generator, covariance):
    if covariance is None:
        covariance = ar_covariance(p, AR_RHO)
    covariance = np.asarray(covariance, dtype=float)
    if covariance.shape != (p, p):
        raise DimensionMismatch((p, p), covariance.shape)
    factor = cholesky_factor(covariance)
    return generator.standard_normal((n, p)) @ factor.T


def _label_noise(n, generator, epsilon):
    if epsilon is None:
        return generator.standard_normal(n)
    epsilon = np.broadcast_to(np.asarray(epsilon, dtype=float), (n,))
    return epsilon


def label_model_ii(features):
    """ Y = 1 iff 1 / (1 + exp(b1^T x)) >= 0.5, i.e. b1^T x <= 0."""
    features = np.asarray(features, dtype=float)
    return (features @ beta_1(features.shape[1]) <= 0).astype(int)


def label_model_iii(features, epsilon):
    """ Y = 1 iff b1^T x / (0.5 + (b2^T x + 1.5)^2) + 0.2 eps >= 0."""
    features = np.asarray(features, dtype=float)
    p = features.shape[1]
    ratio = (features @ beta_1(p)) \
        / (0.5 + (features @ beta_2(p) + 1.5) ** 2)
    return (ratio + LABEL_NOISE_SCALE * epsilon >= 0).astype(int)


def label_model_iv(features, epsilon):
    """ Y = 1 iff (b1^T x)^2 + (b2^T x)^2 + 0.2 eps >= 1."""
    features = np.asarray(features, dtype=float)
    p = features.shape[1]
    radius = (features @ beta_1(p)) ** 2 + (features @ beta_2(p)) ** 2
    return (radius + LABEL_NOISE_SCALE * epsilon >= 1).astype(int)


def gen_model_i(n, p, rng, noise=None):
    """ Model I: X = b1 Y + L eps, Y = +1 for the first n/2 rows and -1
    for the others, L being the Cholesky factor of the AR(0.5) matrix.

    Parameters
    ----------
    n: int
        Even sample size.
    p: int
    rng: RngStream
    noise: array, None
        (n, p) values used instead of the standard normal eps.
    """
    if n % 2 != 0:
        raise OddN(n)
    _check_n(n)
    beta = beta_1(p)
    labels = np.repeat([1, -1], n // 2)

    if noise is None:
        noise = rng.generator().standard_normal((n, p))
    else:
        noise = np.asarray(noise, dtype=float)
        if noise.shape != (n, p):
            raise DimensionMismatch((n, p), noise.shape)
    factor = cholesky_factor(ar_covariance(p, AR_RHO))
    features = labels[:, np.newaxis] * beta + noise @ factor.T
    return validate_dataset(features, labels)


def gen_model_ii(n, p, rng, covariance=None):
    """ Model II: X ~ N(0, Psi), Y = 1 iff b1^T X <= 0.

    ``covariance`` replaces the default AR(0.5) matrix Psi.
    """
    _check_n(n)
    beta_1(p)
    features = _predictors(n, p, rng.generator(), covariance)
    return validate_dataset(features, label_model_ii(features))


def gen_model_iii(n, p, rng, covariance=None, epsilon=None):
    """ Model III: X ~ N(0, Psi),
    Y = 1 iff b1^T X / (0.5 + (b2^T X + 1.5)^2) + 0.2 eps >= 0.

    ``epsilon`` replaces the standard normal label noise.
    """
    _check_n(n)
    beta_1(p)
    generator = rng.generator()
    features = _predictors(n, p, generator, covariance)
    epsilon = _label_noise(n, generator, epsilon)
    return validate_dataset(features, label_model_iii(features, epsilon))


def gen_model_iv(n, p, rng, covariance=None, epsilon=None):
    """ Model IV: X ~ N(0, Psi),
    Y = 1 iff (b1^T X)^2 + (b2^T X)^2 + 0.2 eps >= 1.
    """
    _check_n(n)
    beta_1(p)
    generator = rng.generator()
    features = _predictors(n, p, generator, covariance)
    epsilon = _label_noise(n, generator, epsilon)
    return validate_dataset(features, label_model_iv(features, epsilon))


def gen_gaussian_two_class(model, n, rng):
    """ n draws of Y = +1 with probability ``model.p1`` (-1 otherwise) and
    X | Y ~ N(Y mu, Sigma).

    Parameters
    ----------
    model: GaussianTwoClassModel
    n: int
    rng: RngStream
    """
    _check_n(n)
    generator = rng.generator()
    labels = np.where(generator.random(n) < model.p1, 1, -1)
    factor = cholesky_factor(model.sigma)
    noise = generator.standard_normal((n, model.p)) @ factor.T
    features = labels[:, np.newaxis] * model.mu + noise
    return validate_dataset(features, labels)


@enum.unique
class ModelKind(enum.Enum):
    I = 'I'
    II = 'II'
    III = 'III'
    IV = 'IV'

    @classmethod
    def from_string(cls, s):
        name = s.strip().upper()
        arabic = {"1": "I", "2": "II", "3": "III", "4": "IV"}
        try:
            return cls(arabic.get(name, name))
        except ValueError:
            raise InvalidModel(
                "Unsupported model: {0!r} (expected one of I, II, III, "
                "IV)".format(s))


_GENERATORS = {
    ModelKind.I: gen_model_i,
    ModelKind.II: gen_model_ii,
    ModelKind.III: gen_model_iii,
    ModelKind.IV: gen_model_iv,
}


def _check_p(instance, attribute, value):
    if value < _MIN_P:
        raise InvalidModel(
            "Simulation models need p >= {0}, got {1}".format(_MIN_P, value))


def _check_size(instance, attribute, value):
    if value < 2:
        raise InvalidModel("Sample size must be >= 2, got {0}".format(value))


@attributes(frozen=True)
class ModelSpec(object):
    """ One of the four simulation models at a given size.
    """
    model = attr(validator=instance_of(ModelKind))
    n = attr(validator=[instance_of(int), _check_size])
    p = attr(validator=[instance_of(int), _check_p])
    seed = attr(default=0, validator=instance_of(int))

    def __attrs_post_init__(self):
        if self.model == ModelKind.I and self.n % 2 != 0:
            raise OddN(self.n)

    def generate(self, rng=None):
        """ Draw a dataset.

        Parameters
        ----------
        rng: RngStream, None
            Stream to draw from. Defaults to the simulation stream of
            ``seed``, so that the same spec always gives the same data.
        """
        if rng is None:
            rng = RngStream(self.seed).child(Purpose.simulation)
        logger.debug("Generating model %s (n=%d, p=%d)",
                     self.model.value, self.n, self.p)
        return _GENERATORS[self.model](self.n, self.p, rng)

    def __str__(self):
        return "Model {0} (n={1}, p={2})".format(
            self.model.value, self.n, self.p)
