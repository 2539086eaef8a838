import logging

import numpy as np

from attr import attr, attributes
from attr.validators import instance_of

from mmvsdr.classifiers import fit_pipeline, fit_reduction, predict_many
from mmvsdr.core import Purpose, RngStream
from mmvsdr.errors import InvalidConfiguration, TooManyFolds
from mmvsdr.index import MvConfig
from mmvsdr.optimize import OptimizerConfig


logger = logging.getLogger(__name__)


def _at_least_two(instance, attribute, value):
    if value < 2:
        raise InvalidConfiguration(
            "folds must be >= 2, got {0!r}".format(value))


@attributes(frozen=True)
class CvPlan(object):
    folds = attr(default=10, validator=[instance_of(int), _at_least_two])
    stratified = attr(default=True, validator=instance_of(bool))
    seed = attr(default=0, validator=instance_of(int))


def kfold_indices(labels, plan, rng=None):
    """ Split 0, ..., n-1 into ``plan.folds`` (train, test) index pairs.

    In stratified mode, the members of each class are shuffled, the classes
    are laid end to end, and position i goes to fold i mod K: each fold
    then holds within one sample of its share of every class, and fold
    sizes differ by at most one.

    Parameters
    ----------
    labels: array
        Class ids.
    plan: CvPlan
    rng: RngStream, None
        Defaults to the folds stream of ``plan.seed``.
    """
    labels = np.asarray(labels)
    n = labels.shape[0]
    if rng is None:
        rng = RngStream(plan.seed).child(Purpose.folds)
    generator = rng.generator()

    if plan.stratified:
        counts = np.bincount(labels)
        limit = int(counts[counts > 0].min())
        if plan.folds > limit:
            raise TooManyFolds(plan.folds, limit)
        order = np.concatenate([
            generator.permutation(np.flatnonzero(labels == r))
            for r in range(len(counts)) if counts[r] > 0
        ])
    else:
        if plan.folds > n:
            raise TooManyFolds(plan.folds, n)
        order = generator.permutation(n)

    assignment = np.empty(n, dtype=np.intp)
    assignment[order] = np.arange(n) % plan.folds
    return [
        (np.flatnonzero(assignment != k), np.flatnonzero(assignment == k))
        for k in range(plan.folds)
    ]


def fit_fold(data, train, methods, mv_config, opt, rng):
    """ Fit every method on the training rows ``train`` of ``data``.

    Screening and MMV stages are fitted once per distinct (keep, reduce)
    pair and shared by the methods using them. Only ``data.take(train)``
    is ever looked at.
    """
    train_data = data.take(train)
    reductions = {}
    fits = []
    for method in methods:
        key = (method.keep, method.reduce)
        if key not in reductions:
            reductions[key] = fit_reduction(
                train_data, method.keep, method.reduce, mv_config, opt, rng)
        fits.append(fit_pipeline(
            train_data, method, mv_config, opt, rng,
            reduction=reductions[key]))
    return tuple(fits)


def _misclassified(data, methods, plan, rng, mv_config, opt):
    """ Number of misclassified observations of each method over all
    folds."""
    folds = kfold_indices(data.labels, plan, rng.child(Purpose.folds))
    totals = np.zeros(len(methods), dtype=int)
    for k, (train, test) in enumerate(folds):
        fits = fit_fold(
            data, train, methods, mv_config, opt,
            rng.child(Purpose.optimizer, k))
        test_features = data.features[test]
        for i, (pipeline, model) in enumerate(fits):
            predicted = predict_many(model, pipeline, test_features)
            totals[i] += int(np.sum(predicted != data.labels[test]))
    return totals


def cv_error(data, method, plan, rng=None, mv_config=None, opt=None):
    """ K-fold cross-validated misclassification rate of a method.

    Every stage of the method, MMV extraction and screening included, is
    refitted on each training fold.

    Parameters
    ----------
    data: Dataset
    method: MethodSpec
    plan: CvPlan
    rng: RngStream, None
        Defaults to ``RngStream(plan.seed)``.
    mv_config: MvConfig, None
        Defaults to the smoothed Gaussian configuration.
    opt: OptimizerConfig, None

    Returns
    -------
    error: float
        Total misclassified test observations divided by n.
    """
    if rng is None:
        rng = RngStream(plan.seed)
    if mv_config is None:
        mv_config = MvConfig.smoothed()
    if opt is None:
        opt = OptimizerConfig()
    totals = _misclassified(data, [method], plan, rng, mv_config, opt)
    return totals[0] / float(data.n)
