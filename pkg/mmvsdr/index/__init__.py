"""
The mean variance (MV) dependence index between a scalar score and a
categorical label: empirical estimator, gradient with respect to a
projection direction, marginal screening, and the closed form for two
Gaussian classes.
"""
# flake8: noqa
from .config import BandwidthKind, BandwidthSource, MvConfig
from .empirical import (
    GradientMethod, mv_empirical, mv_gradient, mv_of_direction
)
from .gaussian import GaussianTwoClassModel, mv_population_gaussian
from .screening import marginal_mv, screen_by_mv

__all__ = [
    "BandwidthKind", "BandwidthSource", "GaussianTwoClassModel",
    "GradientMethod", "MvConfig", "marginal_mv", "mv_empirical",
    "mv_gradient", "mv_of_direction", "mv_population_gaussian",
    "screen_by_mv",
]
