"""
Univariate CDF estimators: the empirical step function and its
kernel-smoothed counterpart, together with the bandwidth rule used when
smoothing projected scores.
"""
# flake8: noqa
from ._kernel import KernelFamily, KernelSpec
from .bandwidth import bandwidth_rule
from .cdf import CdfKind, CdfMode, per_class_cdfs, smoothed_cdf, step_cdf

__all__ = [
    "CdfKind", "CdfMode", "KernelFamily", "KernelSpec", "bandwidth_rule",
    "per_class_cdfs", "smoothed_cdf", "step_cdf",
]
