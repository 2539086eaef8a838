import numpy as np
from scipy import linalg

from attr import attr, attributes
from attr.validators import instance_of

from mmvsdr.errors import DegenerateCovariance
from ._base import ClassifierKind, ITrainedClassifier, check_binary, frozen


#: Ridge added to the pooled covariance, relative to its mean eigenvalue.
LDA_RIDGE = 1e-6


@attributes(repr=False, frozen=True, eq=False)
class LdaModel(ITrainedClassifier):
    """ Fisher's linear rule: predicts the positive class (id 1) when
    w^T x > threshold, the negative class (id 0) otherwise.
    """
    weight = attr(converter=frozen)
    threshold = attr(converter=float)
    classes = attr(default=(1, 0), validator=instance_of(tuple))
    "(positive, negative) class ids."

    kind = ClassifierKind.lda

    @property
    def dimension(self):
        return self.weight.shape[0]

    def decision_function(self, features):
        return np.asarray(features, dtype=float) @ self.weight - self.threshold

    def _predict(self, features):
        positive, negative = self.classes
        return np.where(
            self.decision_function(features) > 0, positive, negative)

    def __repr__(self):
        return "LdaModel(q={0}, threshold={1!r})".format(
            self.dimension, self.threshold)


def fit_lda(train):
    """ Two-class LDA with ridge-regularized pooled covariance.

    The weight is w = (S + gamma I)^-1 (m+ - m-), S being the pooled within
    class covariance and gamma = 1e-6 trace(S) / q. The threshold is the
    midpoint w^T (m+ + m-) / 2 shifted by the log prior odds log(n+/n-).
    Class id 1 plays the role of the positive class.
    """
    check_binary(train)
    counts = train.class_counts
    if np.any(counts < 2):
        raise DegenerateCovariance(
            "LDA needs at least 2 observations per class, got {0}".format(
                counts.tolist()))

    features = train.features
    q = train.p
    means = [features[train.labels == r].mean(axis=0) for r in (0, 1)]
    scatter = np.zeros((q, q))
    for r in (0, 1):
        centered = features[train.labels == r] - means[r]
        scatter += centered.T @ centered
    pooled = scatter / float(train.n - 2)

    trace = np.trace(pooled)
    if not trace > 0:
        raise DegenerateCovariance("Pooled covariance is zero")
    gamma = LDA_RIDGE * trace / q
    try:
        weight = linalg.solve(
            pooled + gamma * np.eye(q), means[1] - means[0], assume_a="pos")
    except (linalg.LinAlgError, ValueError) as e:
        raise DegenerateCovariance(
            "Could not invert the pooled covariance: {0}".format(e))
    if not np.all(np.isfinite(weight)):
        raise DegenerateCovariance("Pooled covariance is not invertible")

    threshold = weight @ (means[1] + means[0]) / 2.0 \
        - np.log(counts[1] / float(counts[0]))
    return LdaModel(weight, threshold)
