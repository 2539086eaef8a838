import enum

import numpy as np
from scipy.special import ndtr
from scipy.stats import norm

from attr import attr, attributes
from attr.validators import instance_of

from mmvsdr.errors import InvalidConfiguration, NonPositiveBandwidth


@enum.unique
class KernelFamily(enum.Enum):
    gaussian = 'gaussian'
    epanechnikov = 'epanechnikov'

    @classmethod
    def from_string(cls, s):
        try:
            return cls(s.lower())
        except ValueError:
            msg = "Unsupported kernel family: {0!r} (expected one of {1})"
            raise InvalidConfiguration(
                msg.format(s, ", ".join(k.value for k in cls)))


def _integrated_epanechnikov(u):
    u = np.clip(u, -1.0, 1.0)
    return 0.5 + 0.75 * u - 0.25 * u ** 3


def _epanechnikov(u):
    return np.where(np.abs(u) <= 1.0, 0.75 * (1.0 - u ** 2), 0.0)


_INTEGRATED = {
    KernelFamily.gaussian: ndtr,
    KernelFamily.epanechnikov: _integrated_epanechnikov,
}

_DENSITY = {
    KernelFamily.gaussian: norm.pdf,
    KernelFamily.epanechnikov: _epanechnikov,
}


def _check_bandwidth(instance, attribute, value):
    if not value > 0 or not np.isfinite(value):
        raise NonPositiveBandwidth(value)


@attributes(frozen=True)
class KernelSpec(object):
    """ A symmetric second-order kernel K and its bandwidth h."""
    family = attr(validator=instance_of(KernelFamily))
    bandwidth = attr(converter=float, validator=_check_bandwidth)

    def integrated(self, u):
        """ The integrated kernel, i.e. the CDF of K evaluated at u (in
        bandwidth units)."""
        return _INTEGRATED[self.family](u)

    def density(self, u):
        """ K(u), in bandwidth units."""
        return _DENSITY[self.family](u)

    def with_bandwidth(self, bandwidth):
        return KernelSpec(self.family, bandwidth)
