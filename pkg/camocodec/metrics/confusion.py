"""
    MIT License

    Copyright (c) 2026 The camocodec authors

    Permission is hereby granted, free of charge, to any person obtaining a copy
    of this software, to deal in the Software without restriction, subject to
    the conditions stated in the LICENSE file distributed with this package.
"""

import csv
import os
import typing

import numpy as np

from ..core.errors import DimensionError, MetricError


class ConfusionMatrix(object):

    """
        ConfusionMatrix
        counts[t][p] is the number of samples of true class t predicted as p
    """

    def __init__(self, counts : np.ndarray):
        counts = np.asarray(counts, dtype=np.int64)
        if counts.ndim != 2 or counts.shape[0] != counts.shape[1]:
            raise DimensionError('confusion matrix must be square, got shape {}'.format(counts.shape))
        if np.any(counts < 0):
            raise MetricError('confusion counts must be non-negative')
        self._counts = counts

    @property
    def counts(self) -> np.ndarray:
        return self._counts

    @property
    def n_classes(self) -> int:
        return self._counts.shape[0]

    @property
    def total(self) -> int:
        return int(self._counts.sum())

    @property
    def trace(self) -> int:
        return int(np.trace(self._counts))

    def errors_per_class(self) -> np.ndarray:
        """
        Off-diagonal row sums, the misclassified samples of every true class
        """
        return self._counts.sum(axis=1) - np.diag(self._counts)


def _check_ids(ids, n_classes : int, name : str) -> np.ndarray:
    ids = np.asarray(ids, dtype=np.int64).reshape(-1)
    if ids.size and (ids.min() < 0 or ids.max() >= n_classes):
        raise MetricError('{} contains ids outside [0, {})'.format(name, n_classes))
    return ids


def confusion_matrix(y_true, y_pred, n_classes : int) -> ConfusionMatrix:
    if n_classes < 1:
        raise MetricError('need at least one class, got {}'.format(n_classes))
    y_true = _check_ids(y_true, n_classes, 'y_true')
    y_pred = _check_ids(y_pred, n_classes, 'y_pred')
    if y_true.size != y_pred.size:
        raise DimensionError('{} true labels for {} predictions'.format(y_true.size, y_pred.size))
    counts = np.zeros((n_classes, n_classes), dtype=np.int64)
    np.add.at(counts, (y_true, y_pred), 1)
    return ConfusionMatrix(counts)


def accuracy(y_true, y_pred) -> float:
    y_true = np.asarray(y_true).reshape(-1)
    y_pred = np.asarray(y_pred).reshape(-1)
    if y_true.size != y_pred.size:
        raise DimensionError('{} true labels for {} predictions'.format(y_true.size, y_pred.size))
    if y_true.size == 0:
        raise MetricError('accuracy of an empty set')
    return float(np.mean(y_true == y_pred))


def save_confusion_csv(cm : ConfusionMatrix, class_names : typing.Sequence[str], filepath : str):
    """
    Rows are true classes, columns predicted classes
    """
    if len(class_names) != cm.n_classes:
        raise DimensionError('{} class names for {} classes'.format(len(class_names), cm.n_classes))
    os.makedirs(os.path.dirname(os.path.abspath(filepath)), exist_ok=True)
    with open(filepath, 'w', newline='', encoding='utf-8') as f:
        writer = csv.writer(f, lineterminator='\n')
        writer.writerow(['true\\predicted'] + list(class_names))
        for name, row in zip(class_names, cm.counts):
            writer.writerow([name] + [int(v) for v in row])


def load_confusion_csv(filepath : str) -> typing.Tuple[typing.List[str], ConfusionMatrix]:
    with open(filepath, newline='', encoding='utf-8') as f:
        reader = csv.reader(f)
        header = next(reader)
        rows = [[int(v) for v in row[1:]] for row in reader]
    return header[1:], ConfusionMatrix(np.asarray(rows, dtype=np.int64).reshape(len(header) - 1, len(header) - 1))
