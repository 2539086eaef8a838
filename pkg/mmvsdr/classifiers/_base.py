import abc
import enum

import numpy as np

from mmvsdr.errors import DimensionMismatch, InvalidConfiguration, NotBinary


@enum.unique
class ClassifierKind(enum.Enum):
    lda = 'lda'
    logistic = 'logistic'
    knn = 'knn'

    @classmethod
    def from_string(cls, s):
        try:
            return cls(s.lower())
        except ValueError:
            raise InvalidConfiguration(
                "Unsupported classifier: {0!r} (expected one of {1})".format(
                    s, ", ".join(k.value for k in cls)))


class ITrainedClassifier(metaclass=abc.ABCMeta):
    """ A classifier fitted on q-dimensional (possibly projected) features.
    """
    kind = None

    @abc.abstractproperty
    def dimension(self):
        """ Number q of features the classifier was trained on."""

    @abc.abstractmethod
    def _predict(self, features):
        """ Class ids of the rows of a validated (m, q) array."""

    def predict_many(self, features):
        """ Class ids of each row of an (m, q) feature matrix."""
        features = np.asarray(features, dtype=float)
        if features.ndim != 2 or features.shape[1] != self.dimension:
            raise DimensionMismatch(self.dimension, features.shape)
        return self._predict(features)


def check_binary(train):
    if train.n_classes != 2:
        raise NotBinary(train.n_classes)


def frozen(value):
    array = np.array(value, dtype=float, copy=True)
    array.setflags(write=False)
    return array
