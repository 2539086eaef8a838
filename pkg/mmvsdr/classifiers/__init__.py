# flake8: noqa
from ._base import ClassifierKind, ITrainedClassifier
from .knn import DEFAULT_K, KnnModel, fit_knn
from .lda import LdaModel, fit_lda
from .logistic import LogisticModel, fit_logistic
from .pipeline import (
    MethodSpec, Pipeline, fit_classifier, fit_pipeline, fit_reduction,
    predict, predict_many
)

__all__ = [
    "ClassifierKind", "DEFAULT_K", "ITrainedClassifier", "KnnModel",
    "LdaModel", "LogisticModel", "MethodSpec", "Pipeline", "fit_classifier",
    "fit_knn", "fit_lda", "fit_logistic", "fit_pipeline", "fit_reduction",
    "predict", "predict_many",
]
