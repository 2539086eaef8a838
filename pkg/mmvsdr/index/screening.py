import numpy as np

from mmvsdr.errors import KeepOutOfRange
from mmvsdr.kernels import CdfMode
from .empirical import _checked_labels, _mv_value


def marginal_mv(data):
    """ Step-mode MV index MV_n(X_j | Y) of every predictor X_j."""
    step = CdfMode.step()
    labels, counts = _checked_labels(
        data.features[:, 0], data.labels, data.n_classes)
    return np.array([
        _mv_value(data.features[:, j], labels, counts, step)
        for j in range(data.p)
    ])


def screen_by_mv(data, keep):
    """ Indices of the ``keep`` predictors with the largest marginal MV
    index, best first. Ties go to the lower column index.
    """
    if not 1 <= keep <= data.p:
        raise KeepOutOfRange(keep, data.p)
    values = marginal_mv(data)
    order = np.lexsort((np.arange(data.p), -values))
    return [int(j) for j in order[:keep]]
