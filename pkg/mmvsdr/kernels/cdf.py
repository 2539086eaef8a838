import enum

import numpy as np

from attr import attr, attributes
from attr.validators import instance_of, optional

from mmvsdr.errors import EmptyClass, EmptySample, InvalidConfiguration
from ._kernel import KernelSpec


@enum.unique
class CdfKind(enum.Enum):
    step = 'step'
    smoothed = 'smoothed'

    @classmethod
    def from_string(cls, s):
        try:
            return cls(s.lower())
        except ValueError:
            raise InvalidConfiguration(
                "Unsupported CDF mode: {0!r} (expected step or "
                "smoothed)".format(s))


@attributes(frozen=True)
class CdfMode(object):
    """ How CDFs are estimated: empirical step function, or integral of a
    kernel density estimate with the given kernel.
    """
    kind = attr(validator=instance_of(CdfKind))
    kernel = attr(default=None, validator=optional(instance_of(KernelSpec)))

    def __attrs_post_init__(self):
        if self.kind == CdfKind.smoothed and self.kernel is None:
            raise InvalidConfiguration("Smoothed CDF mode requires a kernel")
        if self.kind == CdfKind.step and self.kernel is not None:
            raise InvalidConfiguration("Step CDF mode takes no kernel")

    @classmethod
    def step(cls):
        return cls(CdfKind.step)

    @classmethod
    def smoothed(cls, kernel):
        return cls(CdfKind.smoothed, kernel)

    @property
    def is_smoothed(self):
        return self.kind == CdfKind.smoothed


def step_cdf(samples, z):
    """ Empirical CDF n^-1 sum I(Z_i <= z) of sorted samples.

    ``z`` may be a scalar or an array.
    """
    samples = np.asarray(samples, dtype=float)
    if samples.size == 0:
        raise EmptySample("Cannot estimate a CDF from an empty sample")
    counts = np.searchsorted(samples, z, side="right")
    return counts / float(samples.size)


def smoothed_cdf(samples, z, kernel):
    """ Kernel-smoothed CDF n^-1 sum Kbar((z - Z_i) / h), Kbar being the
    integrated kernel.

    ``z`` may be a scalar or an array.
    """
    samples = np.asarray(samples, dtype=float)
    if samples.size == 0:
        raise EmptySample("Cannot estimate a CDF from an empty sample")
    z = np.asarray(z, dtype=float)
    u = (z[..., np.newaxis] - samples) / kernel.bandwidth
    return kernel.integrated(u).mean(axis=-1)


def _cdf(samples, z, mode):
    if mode.is_smoothed:
        return smoothed_cdf(samples, z, mode.kernel)
    else:
        return step_cdf(np.sort(samples), z)


def per_class_cdfs(scores, labels, z, mode, n_classes=None):
    """ Unconditional and per-class CDF estimates at z.

    All estimates share the same mode and bandwidth.

    Parameters
    ----------
    scores: array-like
        n projected scores.
    labels: array-like
        n dense class ids.
    z: float
        Evaluation point.
    mode: CdfMode
    n_classes: int, None
        Number of classes R. Defaults to max(labels) + 1.

    Returns
    -------
    cdf: float
    class_cdfs: array
        R conditional CDF values.
    """
    scores = np.asarray(scores, dtype=float)
    labels = np.asarray(labels, dtype=np.intp)
    if n_classes is None:
        n_classes = int(labels.max()) + 1 if labels.size > 0 else 0

    class_cdfs = np.empty(n_classes)
    for r in range(n_classes):
        members = scores[labels == r]
        if members.size == 0:
            raise EmptyClass(r)
        class_cdfs[r] = _cdf(members, z, mode)
    return float(_cdf(scores, z, mode)), class_cdfs
