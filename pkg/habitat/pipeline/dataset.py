"""habitat.pipeline.dataset.
~~~~~~~~~~~~~~~~~~~~~~~~~~

The analysis table: one row per kept sample with its coordinates, the 19
bioclimatic values and the presence label.
"""

import logging

import numpy as np
import pandas as pd

from habitat.climate.variables import BIO_VARIABLES
from habitat.inference import LabeledSamples

from .errors import DatasetError

log = logging.getLogger(__name__)

FEATURE_COLUMNS = [name.lower() for name in BIO_VARIABLES]
DATASET_COLUMNS = ["latitude", "longitude", *FEATURE_COLUMNS, "presence"]


def to_frame(rows):
    """``rows`` are ``(SamplePoint, BioclimVector)`` pairs."""
    records = [
        (point.latitude, point.longitude, *vector.bio, point.presence)
        for point, vector in rows
    ]
    frame = pd.DataFrame.from_records(records, columns=DATASET_COLUMNS)
    frame[["latitude", "longitude", *FEATURE_COLUMNS]] = frame[
        ["latitude", "longitude", *FEATURE_COLUMNS]
    ].astype(float)
    frame["presence"] = frame["presence"].astype(int)
    return frame


def to_samples(frame):
    """:class:`LabeledSamples` with ``BIO1`` .. ``BIO19`` columns."""
    return LabeledSamples(
        frame[FEATURE_COLUMNS].to_numpy(dtype=float),
        list(BIO_VARIABLES),
        frame["presence"].to_numpy(dtype=int),
    )


def export_dataset(path, rows):
    """Write ``rows`` as CSV with the header
    ``latitude,longitude,bio1,...,bio19,presence``.
    """
    frame = to_frame(rows)
    try:
        frame.to_csv(path, index=False, lineterminator="\n")
    except OSError as error:
        raise DatasetError(description=f"cannot write {path}: {error}") from error
    log.debug("Wrote %d rows to %s", len(frame), path)
    return frame


def import_dataset(path):
    """Read a CSV written by :func:`export_dataset` back into a frame."""
    try:
        frame = pd.read_csv(path, float_precision="round_trip")
    except (OSError, pd.errors.ParserError, pd.errors.EmptyDataError) as error:
        raise DatasetError(description=f"cannot read {path}: {error}") from error

    if list(frame.columns) != DATASET_COLUMNS:
        raise DatasetError(description=f"{path} does not have the dataset header")
    if frame.isna().to_numpy().any():
        raise DatasetError(description=f"{path} has missing values")
    if not np.isin(frame["presence"].to_numpy(), (0, 1)).all():
        raise DatasetError(description=f"{path} has a non-binary presence column")
    frame[DATASET_COLUMNS[:-1]] = frame[DATASET_COLUMNS[:-1]].astype(float)
    frame["presence"] = frame["presence"].astype(int)
    return frame
