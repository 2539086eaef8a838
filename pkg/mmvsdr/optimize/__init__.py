"""
Sequential extraction of maximum mean variance (MMV) directions: each
direction maximizes the MV index of the projected predictors over the unit
sphere, orthogonally to the directions found before it.
"""
# flake8: noqa
from .ascent import (
    DirectionDiagnostics, DirectionFit, OptimizerConfig, maximize_direction
)
from .mmv import ExtractionResult, fit_mmv
from .seeding import initial_directions
from .subspace import null_space_basis

__all__ = [
    "DirectionDiagnostics", "DirectionFit", "ExtractionResult",
    "OptimizerConfig", "fit_mmv", "initial_directions", "maximize_direction",
    "null_space_basis",
]
