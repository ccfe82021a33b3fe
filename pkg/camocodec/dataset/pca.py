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
from scipy import linalg

from ..core.errors import DimensionError


class PcaModel(object):

    """
        PcaModel
        Mean, orthonormal components (k x dim) and the variance
        each component explains, in descending order
    """

    def __init__(self, mean : np.ndarray, components : np.ndarray, explained_variance : np.ndarray,
                 total_variance : float):
        self._mean = mean
        self._components = components
        self._explained_variance = explained_variance
        self._total_variance = total_variance

    @property
    def mean(self) -> np.ndarray:
        return self._mean

    @property
    def components(self) -> np.ndarray:
        return self._components

    @property
    def explained_variance(self) -> np.ndarray:
        return self._explained_variance

    @property
    def explained_variance_ratio(self) -> np.ndarray:
        if self._total_variance <= 0:
            return np.zeros_like(self._explained_variance)
        return self._explained_variance / self._total_variance

    @property
    def k(self) -> int:
        return self._components.shape[0]

    def reconstruct(self, scores : np.ndarray) -> np.ndarray:
        return self._mean + np.asarray(scores) @ self._components


def _as_rows(x) -> np.ndarray:
    rows = getattr(x, 'rows', x)
    rows = np.asarray(rows, dtype=np.float64)
    if rows.ndim != 2:
        raise DimensionError('PCA needs a 2-D matrix, got shape {}'.format(rows.shape))
    return rows


def pca_fit(x, k : int) -> PcaModel:
    """
    Principal components from the SVD of the centered data
    :param x: FeatureMatrix or (n, dim) array
    :param k: number of components, 1 <= k <= min(n, dim)
    :return: PcaModel whose components have their largest absolute entry positive
    """
    rows = _as_rows(x)
    n, dim = rows.shape
    if n < 2:
        raise DimensionError('PCA needs at least 2 samples, got {}'.format(n))
    if not 1 <= k <= min(n, dim):
        raise DimensionError('k={} outside [1, {}]'.format(k, min(n, dim)))

    mean = rows.mean(axis=0)
    _, s, vt = linalg.svd(rows - mean, full_matrices=False)
    components = vt[:k].copy()
    pivots = np.argmax(np.abs(components), axis=1)
    signs = np.sign(components[np.arange(k), pivots])
    components *= np.where(signs < 0, -1.0, 1.0)[:, None]

    variance = s ** 2 / (n - 1)
    return PcaModel(mean, components, variance[:k].copy(), float(variance.sum()))


def pca_transform(model : PcaModel, x) -> np.ndarray:
    rows = _as_rows(x)
    if rows.shape[1] != model.mean.size:
        raise DimensionError('rows of dim {} for a PCA model of dim {}'.format(rows.shape[1], model.mean.size))
    return (rows - model.mean) @ model.components.T


def save_scores_csv(scores : np.ndarray, labels : typing.Sequence[int], class_names : typing.Sequence[str],
                    filepath : str):
    """
    Writes "label,pc1,...,pck" rows, one per sample
    """
    scores = np.asarray(scores, dtype=np.float64)
    if scores.shape[0] != len(labels):
        raise DimensionError('{} score rows for {} labels'.format(scores.shape[0], len(labels)))
    os.makedirs(os.path.dirname(os.path.abspath(filepath)), exist_ok=True)
    with open(filepath, 'w', newline='', encoding='utf-8') as f:
        writer = csv.writer(f, lineterminator='\n')
        writer.writerow(['label'] + ['pc{}'.format(i + 1) for i in range(scores.shape[1])])
        for label, row in zip(labels, scores):
            writer.writerow([class_names[label]] + [repr(float(v)) for v in row])


def load_scores_csv(filepath : str) -> typing.Tuple[typing.List[str], np.ndarray]:
    with open(filepath, newline='', encoding='utf-8') as f:
        reader = csv.reader(f)
        header = next(reader)
        labels, rows = [], []
        for row in reader:
            labels.append(row[0])
            rows.append([float(v) for v in row[1:]])
    return labels, np.asarray(rows, dtype=np.float64).reshape(len(labels), len(header) - 1)
