import logging

import numpy as np
import pandas as pd

from mmvsdr.core import validate_dataset
from mmvsdr.errors import (
    EmptyInput, InvalidDataset, MissingLabelColumn, ParseError
)


logger = logging.getLogger(__name__)

DEFAULT_LABEL_COLUMN = "y"

#: Enough significant digits for any double to survive a round trip.
FLOAT_FORMAT = "%.17g"

_NAN_SPELLINGS = frozenset(["nan", "+nan", "-nan"])


def _to_float(cell):
    try:
        return float(cell)
    except ValueError:
        return None


def _parse_column(path, name, cells):
    # float() rounds correctly, which keeps 17 digit round trips exact
    values = cells.map(_to_float)
    failed = values.isna() & ~cells.str.strip().str.lower().isin(
        _NAN_SPELLINGS)
    if failed.any():
        row = int(np.flatnonzero(failed.to_numpy())[0])
        raise ParseError(path, row + 1, name, cells.iloc[row])
    return values.to_numpy(dtype=float, na_value=np.nan)


def load_csv_with_names(path, label=DEFAULT_LABEL_COLUMN):
    """ Like :func:`load_csv`, also returning the feature column names.
    """
    try:
        frame = pd.read_csv(
            path, dtype=str, keep_default_na=False, encoding="utf-8")
    except pd.errors.EmptyDataError:
        raise EmptyInput("No header row in {0!r}".format(path))
    except pd.errors.ParserError as e:
        raise InvalidDataset("Malformed CSV {0!r}: {1}".format(path, e))

    if label not in frame.columns:
        raise MissingLabelColumn(path, label)
    names = [c for c in frame.columns if c != label]
    if len(names) == 0:
        raise EmptyInput("No feature column in {0!r}".format(path))

    features = np.column_stack([
        _parse_column(path, name, frame[name]) for name in names
    ]) if len(frame) > 0 else np.empty((0, len(names)))
    data = validate_dataset(features, frame[label].tolist())
    logger.info("Loaded %r: %d rows, %d features, %d classes",
                path, data.n, data.p, data.n_classes)
    return data, names


def load_csv(path, label=DEFAULT_LABEL_COLUMN):
    """ Read a dataset from a CSV file with a header row.

    Every column but ``label`` is a real predictor, in header order.
    Labels are read as strings and mapped to class ids in order of first
    appearance.

    Parameters
    ----------
    path: str
    label: str
        Name of the label column.
    """
    return load_csv_with_names(path, label)[0]


def write_csv(data, path_or_file, label=DEFAULT_LABEL_COLUMN,
              feature_names=None):
    """ Write a dataset in the format read by :func:`load_csv`.

    Features are printed with 17 significant digits so that reading the
    file back gives bit-identical values. Feature columns are named
    x1, ..., xp unless ``feature_names`` is given.
    """
    if feature_names is None:
        feature_names = ["x{0}".format(j + 1) for j in range(data.p)]
    if len(feature_names) != data.p:
        raise InvalidDataset(
            "Expected {0} feature names, got {1}".format(
                data.p, len(feature_names)))
    if label in feature_names:
        raise InvalidDataset(
            "Label column {0!r} clashes with a feature name".format(label))

    frame = pd.DataFrame(np.asarray(data.features), columns=feature_names)
    frame[label] = [data.class_names[i] for i in data.labels]
    frame.to_csv(
        path_or_file, index=False, float_format=FLOAT_FORMAT,
        encoding="utf-8", lineterminator="\n")
