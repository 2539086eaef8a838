import numpy as np
from scipy.spatial.distance import cdist

from attr import attr, attributes
from attr.validators import instance_of

from mmvsdr.errors import InvalidConfiguration, KTooLarge
from ._base import ClassifierKind, ITrainedClassifier, frozen


#: Number of neighbours used when none is given.
DEFAULT_K = 5


@attributes(repr=False, frozen=True, eq=False)
class KnnModel(ITrainedClassifier):
    features = attr(converter=frozen)
    labels = attr()
    k = attr(validator=instance_of(int))
    n_classes = attr(validator=instance_of(int))

    kind = ClassifierKind.knn

    @property
    def dimension(self):
        return self.features.shape[1]

    def _predict(self, features):
        distances = cdist(features, self.features)
        # stable sort: equal distances go to the lower training index
        nearest = np.argsort(distances, axis=1, kind="stable")[:, :self.k]
        votes = self.labels[nearest]
        # argmax returns the smallest class id among tied counts
        return np.array([
            np.argmax(np.bincount(row, minlength=self.n_classes))
            for row in votes
        ], dtype=np.intp)

    def __repr__(self):
        return "KnnModel(n={0}, q={1}, k={2})".format(
            self.features.shape[0], self.dimension, self.k)


def fit_knn(train, k=DEFAULT_K):
    """ k nearest neighbours majority vote in Euclidean distance.
    """
    if not isinstance(k, int) or k < 1:
        raise InvalidConfiguration(
            "k must be a positive integer, got {0!r}".format(k))
    if k > train.n:
        raise KTooLarge(k, train.n)
    return KnnModel(train.features, train.labels, k, train.n_classes)
