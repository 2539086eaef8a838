import logging

import numpy as np
from scipy import linalg
from scipy.special import expit

from attr import attr, attributes
from attr.validators import instance_of

from mmvsdr.errors import InvalidConfiguration
from ._base import ClassifierKind, ITrainedClassifier, check_binary, frozen


logger = logging.getLogger(__name__)

#: Ridge penalty on the slopes; the intercept is not penalized.
LOGISTIC_RIDGE = 1e-4

_MIN_STEP = 1e-10


@attributes(repr=False, frozen=True, eq=False)
class LogisticModel(ITrainedClassifier):
    """ Logistic regression P(Y = 1 | x) = expit(b0 + b^T x).
    """
    coefficients = attr(converter=frozen)
    "(q + 1,) array, intercept first."

    converged = attr(validator=instance_of(bool))
    loss_history = attr(validator=instance_of(tuple))
    "Penalized negative log-likelihood after each accepted iteration."

    kind = ClassifierKind.logistic

    @property
    def dimension(self):
        return self.coefficients.shape[0] - 1

    def predict_proba(self, features):
        """ Probability of class id 1 for each row."""
        features = np.asarray(features, dtype=float)
        return expit(self.coefficients[0] + features @ self.coefficients[1:])

    def _predict(self, features):
        return np.where(self.predict_proba(features) >= 0.5, 1, 0)

    def __repr__(self):
        return "LogisticModel(q={0}, converged={1!r})".format(
            self.dimension, self.converged)


def _penalized_loss(design, response, penalty, coefficients):
    eta = design @ coefficients
    return float(
        np.sum(np.logaddexp(0.0, eta) - response * eta)
        + 0.5 * coefficients @ (penalty * coefficients))


def fit_logistic(train, max_iters=100, tol=1e-8):
    """ Ridge penalized logistic regression fitted by iteratively reweighted
    least squares.

    Each Newton step is halved until the penalized loss does not increase,
    so the loss history is nonincreasing. Iterations stop when no
    coefficient moves by more than ``tol``; reaching ``max_iters`` instead
    returns the last iterate with ``converged=False``, which happens on
    separable data.
    """
    check_binary(train)
    if max_iters < 1:
        raise InvalidConfiguration(
            "max_iters must be >= 1, got {0!r}".format(max_iters))

    design = np.column_stack([np.ones(train.n), train.features])
    response = (train.labels == 1).astype(float)
    penalty = np.full(design.shape[1], LOGISTIC_RIDGE)
    penalty[0] = 0.0

    coefficients = np.zeros(design.shape[1])
    loss = _penalized_loss(design, response, penalty, coefficients)
    losses = [loss]
    converged = False

    for iteration in range(max_iters):
        mu = expit(design @ coefficients)
        weights = mu * (1.0 - mu)
        gradient = design.T @ (mu - response) + penalty * coefficients
        hessian = design.T @ (weights[:, np.newaxis] * design) \
            + np.diag(penalty)
        try:
            delta = linalg.solve(hessian, gradient, assume_a="pos")
        except (linalg.LinAlgError, ValueError):
            delta = linalg.lstsq(hessian, gradient)[0]

        step = 1.0
        candidate = coefficients - delta
        candidate_loss = _penalized_loss(
            design, response, penalty, candidate)
        while candidate_loss > loss and step > _MIN_STEP:
            step /= 2.0
            candidate = coefficients - step * delta
            candidate_loss = _penalized_loss(
                design, response, penalty, candidate)
        if candidate_loss > loss:
            break

        change = np.max(np.abs(candidate - coefficients))
        coefficients, loss = candidate, candidate_loss
        losses.append(loss)
        if change < tol:
            converged = True
            break

    if not converged:
        logger.warning(
            "Logistic regression did not converge in %d iterations "
            "(loss %.6g)", max_iters, loss)
    return LogisticModel(coefficients, converged, tuple(losses))
