import enum

from attr import attr, attributes
from attr.validators import instance_of, optional

from mmvsdr.errors import InvalidConfiguration, NonPositiveBandwidth
from mmvsdr.kernels import (
    CdfKind, CdfMode, KernelFamily, KernelSpec, bandwidth_rule
)


@enum.unique
class BandwidthKind(enum.Enum):
    fixed = 'fixed'
    rule_of_thumb = 'rule_of_thumb'


@attributes(frozen=True)
class BandwidthSource(object):
    kind = attr(validator=instance_of(BandwidthKind))
    value = attr(default=None, validator=optional(instance_of(float)))

    def __attrs_post_init__(self):
        if self.kind == BandwidthKind.fixed:
            if self.value is None or not self.value > 0:
                raise NonPositiveBandwidth(self.value)
        elif self.value is not None:
            raise InvalidConfiguration(
                "Rule of thumb bandwidth does not take a value")

    @classmethod
    def fixed(cls, value):
        return cls(BandwidthKind.fixed, float(value))

    @classmethod
    def rule_of_thumb(cls):
        return cls(BandwidthKind.rule_of_thumb)

    def compute(self, scores):
        if self.kind == BandwidthKind.fixed:
            return self.value
        else:
            return bandwidth_rule(scores)


@attributes(frozen=True)
class MvConfig(object):
    """ How F and F_r are estimated inside the MV index.
    """
    cdf_kind = attr(validator=instance_of(CdfKind))
    kernel_family = attr(
        default=KernelFamily.gaussian, validator=instance_of(KernelFamily))
    bandwidth_source = attr(
        default=BandwidthSource.rule_of_thumb(),
        validator=instance_of(BandwidthSource))

    @classmethod
    def step(cls):
        return cls(CdfKind.step)

    @classmethod
    def smoothed(cls, kernel_family=KernelFamily.gaussian, bandwidth=None):
        """ Smoothed configuration.

        Parameters
        ----------
        kernel_family: KernelFamily
        bandwidth: float, None
            Fixed bandwidth. If None, the rule of thumb is applied to the
            scores being smoothed.
        """
        if bandwidth is None:
            source = BandwidthSource.rule_of_thumb()
        else:
            source = BandwidthSource.fixed(bandwidth)
        return cls(CdfKind.smoothed, kernel_family, source)

    @property
    def is_smoothed(self):
        return self.cdf_kind == CdfKind.smoothed

    def resolve(self, scores):
        """ The concrete CdfMode to use for the given scores."""
        if self.is_smoothed:
            h = self.bandwidth_source.compute(scores)
            return CdfMode.smoothed(KernelSpec(self.kernel_family, h))
        else:
            return CdfMode.step()

    def with_fixed_bandwidth(self, bandwidth):
        """ Copy of this configuration whose bandwidth no longer depends on
        the scores."""
        return MvConfig(
            self.cdf_kind, self.kernel_family,
            BandwidthSource.fixed(bandwidth))

    def freeze(self, scores):
        """ Copy with the bandwidth fixed at its value for ``scores``.

        Step configurations are returned unchanged.
        """
        if not self.is_smoothed:
            return self
        return self.with_fixed_bandwidth(
            self.bandwidth_source.compute(scores))
