# flake8: noqa
from ._basis import DirectionBasis
from ._dataset import Dataset, class_proportions, validate_dataset
from ._random import Purpose, RngStream

__all__ = [
    "Dataset", "DirectionBasis", "Purpose", "RngStream",
    "class_proportions", "validate_dataset",
]
