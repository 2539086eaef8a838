import numpy as np

from attr import attr, attributes
from attr.validators import instance_of

from mmvsdr.errors import (
    DimensionMismatch, EmptyClass, EmptyInput, InvalidDataset, NonFiniteValue,
    SingleClass
)


def _frozen_array(value, dtype):
    array = np.array(value, dtype=dtype, copy=True)
    array.setflags(write=False)
    return array


@attributes(repr=False, frozen=True, eq=False)
class Dataset(object):
    """ A labelled sample: n observations of p real predictors, and a dense
    class id in {0, ..., R-1} for each observation.

    Use :func:`validate_dataset` to build instances from raw user data.
    """
    features = attr()
    """ (n, p) float array, read-only."""

    labels = attr()
    """ (n,) int array of dense class ids, read-only."""

    class_names = attr(validator=instance_of(tuple))
    """ Original label of each class id, in class id order."""

    def __attrs_post_init__(self):
        if self.features.ndim != 2:
            raise DimensionMismatch(2, self.features.ndim)
        if self.labels.shape != (self.features.shape[0],):
            raise DimensionMismatch(self.features.shape[0], self.labels.shape)
        counts = np.bincount(self.labels, minlength=len(self.class_names))
        if len(counts) != len(self.class_names):
            raise DimensionMismatch(len(self.class_names), len(counts))
        empty = np.flatnonzero(counts == 0)
        if len(empty) > 0:
            raise EmptyClass(self.class_names[empty[0]])

    @property
    def n(self):
        return self.features.shape[0]

    @property
    def p(self):
        return self.features.shape[1]

    @property
    def n_classes(self):
        return len(self.class_names)

    @property
    def class_counts(self):
        """ Number of observations n_r of each class, as an int array."""
        return np.bincount(self.labels, minlength=self.n_classes)

    def take(self, indices):
        """ Sub-sample of the given rows.

        Class ids and names are kept as is (no relabeling), so that models
        fitted on a sub-sample predict in the id space of the full sample.
        Every class must still be represented.
        """
        indices = np.asarray(indices, dtype=np.intp)
        return Dataset(
            _frozen_array(self.features[indices], float),
            _frozen_array(self.labels[indices], np.intp),
            self.class_names,
        )

    def project(self, basis_matrix):
        """ Dataset of the projected scores X B, for a (p, q) matrix B."""
        basis_matrix = np.asarray(basis_matrix, dtype=float)
        if basis_matrix.ndim != 2 or basis_matrix.shape[0] != self.p:
            raise DimensionMismatch(self.p, basis_matrix.shape)
        return Dataset(
            _frozen_array(self.features @ basis_matrix, float),
            self.labels, self.class_names,
        )

    def select_columns(self, columns):
        columns = np.asarray(columns, dtype=np.intp)
        return Dataset(
            _frozen_array(self.features[:, columns], float),
            self.labels, self.class_names,
        )

    def __repr__(self):
        return "Dataset(n={0.n}, p={0.p}, classes={0.class_names!r})".format(
            self)


def validate_dataset(features, labels, classes=None):
    """ Validate raw predictors and labels and build a :class:`Dataset`.

    Labels may be of any hashable type; they are mapped to dense class ids
    0, ..., R-1 in order of first appearance, the original values being kept
    in ``class_names``.

    Parameters
    ----------
    features: array-like
        (n, p) matrix of finite real numbers.
    labels: sequence
        n class labels.
    classes: sequence, None
        If given, the class labels in class id order, instead of the order
        of first appearance. Every label must be one of them.
    """
    features = np.asarray(features, dtype=float)
    if features.ndim == 1:
        features = features[:, np.newaxis]
    if features.ndim != 2:
        raise DimensionMismatch(2, features.ndim)

    labels = list(np.asarray(labels).tolist()) \
        if isinstance(labels, np.ndarray) else list(labels)
    if len(labels) != features.shape[0]:
        raise DimensionMismatch(features.shape[0], len(labels))

    n, p = features.shape
    if n < 2:
        raise EmptyInput(
            "At least 2 observations are required, got {0}".format(n))
    if p < 1:
        raise EmptyInput("At least 1 predictor is required")

    bad = np.argwhere(~np.isfinite(features))
    if len(bad) > 0:
        row, column = bad[0]
        raise NonFiniteValue(int(row), int(column))

    dense = np.empty(n, dtype=np.intp)
    if classes is None:
        class_ids = {}
        for i, label in enumerate(labels):
            dense[i] = class_ids.setdefault(label, len(class_ids))
    else:
        class_ids = dict((label, i) for i, label in enumerate(classes))
        for i, label in enumerate(labels):
            try:
                dense[i] = class_ids[label]
            except KeyError:
                raise InvalidDataset(
                    "Unexpected label {0!r} at row {1}".format(label, i))
    n_present = len(np.unique(dense))
    if n_present < 2:
        raise SingleClass(n_present)

    return Dataset(
        _frozen_array(features, float), _frozen_array(dense, np.intp),
        tuple(class_ids),
    )


def class_proportions(data):
    """ Empirical class probabilities p_r = n_r / n."""
    return data.class_counts / float(data.n)
