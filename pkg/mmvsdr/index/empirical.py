import enum

import numpy as np

from mmvsdr.errors import (
    DimensionMismatch, EmptyClass, StepModeGradient, ZeroDirection
)


#: Relative step of the central differences: cube root of the machine
#: precision, optimal for a second-order scheme.
FINITE_DIFFERENCE_STEP = np.finfo(float).eps ** (1.0 / 3.0)


@enum.unique
class GradientMethod(enum.Enum):
    central_difference = 'central_difference'
    analytic = 'analytic'


def _checked_labels(scores, labels, n_classes):
    labels = np.asarray(labels, dtype=np.intp)
    if labels.shape != scores.shape:
        raise DimensionMismatch(scores.shape, labels.shape)
    if n_classes is None:
        n_classes = int(labels.max()) + 1
    counts = np.bincount(labels, minlength=n_classes)
    empty = np.flatnonzero(counts == 0)
    if len(empty) > 0:
        raise EmptyClass(int(empty[0]))
    return labels, counts


def _class_cdfs(scores, labels, counts, mode):
    """ (F(Z_i), F_r(Z_i)) at every observed score, as an (n,) and an
    (n, R) array."""
    n = len(scores)
    if mode.is_smoothed:
        kernel = mode.kernel
        cdf_matrix = kernel.integrated(
            (scores[:, np.newaxis] - scores[np.newaxis, :]) / kernel.bandwidth)
        one_hot = np.zeros((n, len(counts)))
        one_hot[np.arange(n), labels] = 1.0
        return cdf_matrix.mean(axis=1), (cdf_matrix @ one_hot) / counts
    else:
        cdf = np.searchsorted(np.sort(scores), scores, side="right") / n
        class_cdfs = np.empty((n, len(counts)))
        for r, n_r in enumerate(counts):
            members = np.sort(scores[labels == r])
            class_cdfs[:, r] = np.searchsorted(
                members, scores, side="right") / float(n_r)
        return cdf, class_cdfs


def _mv_value(scores, labels, counts, mode):
    n = len(scores)
    cdf, class_cdfs = _class_cdfs(scores, labels, counts, mode)
    proportions = counts / float(n)
    gaps = cdf[:, np.newaxis] - class_cdfs
    value = np.sum(proportions * np.sum(gaps ** 2, axis=0)) / n
    return float(min(max(value, 0.0), 1.0))


def mv_empirical(scores, labels, config, n_classes=None):
    """ Empirical MV index

        MV_n(Z|Y) = 1/n sum_r sum_i p_r [F(Z_i) - F_r(Z_i)]^2

    with F and F_r estimated as specified by ``config`` (empirical step
    functions, or kernel-smoothed CDFs sharing one bandwidth).

    Parameters
    ----------
    scores: array-like
        n real scores Z_i.
    labels: array-like
        n dense class ids.
    config: MvConfig
    n_classes: int, None
        Number of classes R, defaults to max(labels) + 1. Every class must
        occur.
    """
    scores = np.asarray(scores, dtype=float).ravel()
    labels, counts = _checked_labels(scores, labels, n_classes)
    return _mv_value(scores, labels, counts, config.resolve(scores))


def _checked_direction(data, beta):
    beta = np.asarray(beta, dtype=float).ravel()
    if beta.shape != (data.p,):
        raise DimensionMismatch(data.p, beta.shape)
    if not np.linalg.norm(beta) > 0:
        raise ZeroDirection()
    return beta


def mv_of_direction(data, beta, config):
    """ MV index of the projected scores beta^T X_i of a dataset."""
    beta = _checked_direction(data, beta)
    return mv_empirical(
        data.features @ beta, data.labels, config, data.n_classes)


def _smoothed_value_and_gradient(features, scores, labels, counts, kernel):
    """ Smoothed MV index of ``scores`` = ``features`` @ beta and its
    gradient with respect to beta, sharing the (n, n) kernel argument
    between both."""
    n = len(scores)
    u = (scores[:, np.newaxis] - scores[np.newaxis, :]) / kernel.bandwidth
    densities = kernel.density(u)
    densities /= kernel.bandwidth

    one_hot = np.zeros((n, len(counts)))
    one_hot[np.arange(n), labels] = 1.0
    # D[i, r] = F(Z_i) - F_r(Z_i) = sum_j (1/n - 1{Y_j = r}/n_r) Kbar(u_ij)
    mixture_weights = 1.0 / n - one_hot / counts
    gaps = kernel.integrated(u) @ mixture_weights

    proportions = counts / float(n)
    value = np.sum(proportions * np.sum(gaps ** 2, axis=0)) / n

    weighted_gaps = gaps * proportions
    rows = np.sum(weighted_gaps * (densities @ mixture_weights), axis=1)
    columns = np.sum(mixture_weights * (densities.T @ weighted_gaps), axis=1)
    gradient = 2.0 / n * ((rows - columns) @ features)
    return float(min(max(value, 0.0), 1.0)), gradient


def _central_difference(objective, beta):
    gradient = np.empty_like(beta)
    for j in range(len(beta)):
        step = FINITE_DIFFERENCE_STEP * max(1.0, abs(beta[j]))
        forward = beta.copy()
        forward[j] += step
        backward = beta.copy()
        backward[j] -= step
        gradient[j] = (objective(forward) - objective(backward)) / (2 * step)
    return gradient


def mv_gradient(data, beta, config,
                method=GradientMethod.central_difference):
    """ Gradient of beta -> MV_n(beta^T X | Y) for a smoothed configuration.

    The bandwidth is resolved once from the scores at ``beta`` and held
    fixed, so that the gradient is the one of a single smooth function.

    Parameters
    ----------
    data: Dataset
    beta: array-like
        p-vector, not necessarily of unit norm.
    config: MvConfig
        Must be smoothed.
    method: GradientMethod
        Central finite differences with per-coordinate step
        eps^(1/3) max(1, |beta_j|), or the exact derivative.
    """
    if not config.is_smoothed:
        raise StepModeGradient()
    beta = _checked_direction(data, beta)
    features = data.features
    labels, counts = _checked_labels(
        features @ beta, data.labels, data.n_classes)
    mode = config.resolve(features @ beta)

    if method == GradientMethod.analytic:
        _, gradient = _smoothed_value_and_gradient(
            features, features @ beta, labels, counts, mode.kernel)
        return gradient
    else:
        def objective(b):
            return _mv_value(features @ b, labels, counts, mode)
        return _central_difference(objective, beta)
