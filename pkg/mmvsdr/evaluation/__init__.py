# flake8: noqa
from .cv import CvPlan, cv_error, fit_fold, kfold_indices
from .experiment import DEFAULT_REPETITIONS, ExperimentReport, run_experiment

__all__ = [
    "CvPlan", "DEFAULT_REPETITIONS", "ExperimentReport",
    "cv_error", "fit_fold", "kfold_indices", "run_experiment",
]
