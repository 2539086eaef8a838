import logging

import numpy as np

from attr import attr, attributes
from attr.validators import instance_of, optional

from mmvsdr.core import DirectionBasis
from mmvsdr.errors import DimensionMismatch, InvalidConfiguration
from mmvsdr.index import screen_by_mv
from mmvsdr.optimize import fit_mmv
from ._base import ClassifierKind
from .knn import DEFAULT_K, fit_knn
from .lda import fit_lda
from .logistic import fit_logistic


logger = logging.getLogger(__name__)

_MMV_PREFIX = "mmv+"


@attributes(frozen=True)
class MethodSpec(object):
    """ A classification method: optional marginal screening, optional MMV
    reduction, then a classifier.
    """
    classifier = attr(validator=instance_of(ClassifierKind))
    reduce = attr(default=False, validator=instance_of(bool))
    "Whether the classifier runs on MMV scores instead of raw features."

    k = attr(default=DEFAULT_K, validator=instance_of(int))
    "Number of neighbours, only used by k-NN."

    keep = attr(default=None, validator=optional(instance_of(int)))
    "Number of predictors kept by marginal MV screening, None for all."

    @classmethod
    def from_string(cls, s, k=DEFAULT_K, keep=None):
        """ Parse method names such as ``lda`` or ``mmv+knn``."""
        name = s.strip().lower()
        reduce = name.startswith(_MMV_PREFIX)
        if reduce:
            name = name[len(_MMV_PREFIX):]
        return cls(ClassifierKind.from_string(name), reduce, k, keep)

    @property
    def name(self):
        if self.reduce:
            return _MMV_PREFIX + self.classifier.value
        return self.classifier.value

    def __str__(self):
        return self.name


@attributes(frozen=True, eq=False)
class Pipeline(object):
    """ The feature map fitted in front of a classifier: selection of the
    screened columns, then projection on an MMV basis.
    """
    p = attr(validator=instance_of(int))
    "Dimension of the raw feature vectors."

    columns = attr(default=None, validator=optional(instance_of(tuple)))
    "Screened column indices, None when no screening was done."

    basis = attr(default=None, validator=optional(instance_of(DirectionBasis)))
    "Basis in the screened coordinates, None for raw features."

    def __attrs_post_init__(self):
        inner = self.p if self.columns is None else len(self.columns)
        if self.basis is not None and self.basis.p != inner:
            raise DimensionMismatch(inner, self.basis.p)

    @property
    def dimension(self):
        """ Number q of features seen by the classifier."""
        if self.basis is not None:
            return self.basis.d
        elif self.columns is not None:
            return len(self.columns)
        return self.p

    def transform(self, features):
        features = np.asarray(features, dtype=float)
        if features.ndim != 2 or features.shape[1] != self.p:
            raise DimensionMismatch(self.p, features.shape)
        if self.columns is not None:
            features = features[:, list(self.columns)]
        if self.basis is not None:
            features = features @ self.basis.matrix
        return features

    def transform_dataset(self, data):
        selected = data if self.columns is None \
            else data.select_columns(self.columns)
        if self.basis is None:
            return selected
        return selected.project(self.basis.matrix)

    def full_basis(self):
        """ The MMV basis expressed in the raw p coordinates."""
        if self.basis is None:
            return None
        if self.columns is None:
            return self.basis
        return self.basis.embed(self.columns, self.p)


def fit_reduction(train, keep, reduce, mv_config, opt, rng):
    """ Fit the screening and MMV stages on a training sample.

    Parameters
    ----------
    train: Dataset
    keep: int, None
        Screening size, None to keep every predictor.
    reduce: bool
        Whether to extract an MMV basis.
    mv_config: MvConfig
    opt: OptimizerConfig
    rng: RngStream
    """
    columns = None
    selected = train
    if keep is not None:
        columns = tuple(screen_by_mv(train, keep))
        selected = train.select_columns(columns)
    basis = None
    if reduce:
        basis = fit_mmv(selected, mv_config, opt, rng).basis
    return Pipeline(train.p, columns, basis)


def fit_classifier(kind, train, k=DEFAULT_K):
    if kind == ClassifierKind.lda:
        return fit_lda(train)
    elif kind == ClassifierKind.logistic:
        return fit_logistic(train)
    elif kind == ClassifierKind.knn:
        return fit_knn(train, k)
    else:
        raise InvalidConfiguration(
            "Unsupported classifier: {0!r}".format(kind))


def fit_pipeline(train, method, mv_config, opt, rng, reduction=None):
    """ Fit a method on a training sample.

    Parameters
    ----------
    train: Dataset
    method: MethodSpec
    mv_config: MvConfig
    opt: OptimizerConfig
    rng: RngStream
        Stream for the MMV search.
    reduction: Pipeline, None
        Already fitted screening/MMV stages to reuse.

    Returns
    -------
    pipeline: Pipeline
    model: ITrainedClassifier
    """
    if reduction is None:
        reduction = fit_reduction(
            train, method.keep, method.reduce, mv_config, opt, rng)
    model = fit_classifier(
        method.classifier, reduction.transform_dataset(train), method.k)
    return reduction, model


def predict_many(model, pipeline, features):
    """ Class ids of the rows of an (m, p) matrix of raw features."""
    return model.predict_many(pipeline.transform(features))


def predict(model, pipeline, x):
    """ Class id predicted for a single raw p-vector."""
    x = np.asarray(x, dtype=float)
    if x.ndim != 1:
        raise DimensionMismatch(1, x.ndim)
    return int(predict_many(model, pipeline, x[np.newaxis, :])[0])
