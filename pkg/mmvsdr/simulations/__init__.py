"""
Seeded generators for the simulation models used to benchmark MMV, and the
AR(1) covariance structure they share.
"""
# flake8: noqa
from .covariance import ar_covariance, cholesky_factor
from .models import (
    BETA_1, BETA_2, ModelKind, ModelSpec, beta_1, beta_2,
    gen_gaussian_two_class, gen_model_i, gen_model_ii, gen_model_iii,
    gen_model_iv, label_model_ii, label_model_iii, label_model_iv
)

__all__ = [
    "BETA_1", "BETA_2", "ModelKind", "ModelSpec", "ar_covariance",
    "beta_1", "beta_2", "cholesky_factor", "gen_gaussian_two_class",
    "gen_model_i", "gen_model_ii", "gen_model_iii", "gen_model_iv",
    "label_model_ii", "label_model_iii", "label_model_iv",
]
