"""
    MIT License

    Copyright (c) 2026 The camocodec authors

    Permission is hereby granted, free of charge, to any person obtaining a copy
    of this software, to deal in the Software without restriction, subject to
    the conditions stated in the LICENSE file distributed with this package.
"""

import csv
import logging
import os
import typing
from fractions import Fraction

import numpy as np

from ..core.errors import DimensionError, MetricError
from ..core.messages import CurveKind


class CurveData(object):

    """
        CurveData
        One-vs-rest curve of one class.
        roc points are (fpr, tpr), pr points (recall, precision); thresholds[i] produced points[i].
        area is the ROC AUC or the average precision. Undefined curves have no points and NaN area.
    """

    def __init__(self, kind : CurveKind, class_id : int, thresholds : np.ndarray, points : np.ndarray, area : float,
                 defined : bool = True):
        self._kind = kind
        self._class_id = class_id
        self._thresholds = np.asarray(thresholds, dtype=np.float64)
        self._points = np.asarray(points, dtype=np.float64).reshape(-1, 2)
        self._area = area
        self._defined = defined

    @staticmethod
    def undefined(kind : CurveKind, class_id : int) -> 'CurveData':
        return CurveData(kind, class_id, np.zeros(0), np.zeros((0, 2)), float('nan'), defined=False)

    @property
    def kind(self) -> CurveKind:
        return self._kind

    @property
    def class_id(self) -> int:
        return self._class_id

    @property
    def thresholds(self) -> np.ndarray:
        return self._thresholds

    @property
    def points(self) -> np.ndarray:
        return self._points

    @property
    def x(self) -> np.ndarray:
        return self._points[:, 0]

    @property
    def y(self) -> np.ndarray:
        return self._points[:, 1]

    @property
    def area(self) -> float:
        return self._area

    @property
    def defined(self) -> bool:
        return self._defined


def _sweep(scores, positives) -> typing.Tuple[np.ndarray, np.ndarray, np.ndarray, int, int]:
    """
    Cumulative true and false positive counts at every distinct score, highest first
    """
    scores = np.asarray(scores, dtype=np.float64).reshape(-1)
    positives = np.asarray(positives, dtype=bool).reshape(-1)
    if scores.size != positives.size:
        raise DimensionError('{} scores for {} flags'.format(scores.size, positives.size))
    if not np.all(np.isfinite(scores)):
        raise MetricError('scores must be finite')

    order = np.argsort(-scores, kind='mergesort')
    scores = scores[order]
    positives = positives[order]
    last_of_tie = np.r_[np.flatnonzero(np.diff(scores) != 0), scores.size - 1] if scores.size else np.zeros(0, int)
    tps = np.cumsum(positives)[last_of_tie]
    fps = np.cumsum(~positives)[last_of_tie]
    n_pos = int(positives.sum())
    return scores[last_of_tie], tps, fps, n_pos, scores.size - n_pos


def roc_curve(scores, positives, class_id : int = 0) -> CurveData:
    """
    ROC curve with one step per distinct score and its trapezoid AUC,
    which equals P(score+ > score-) + P(tie)/2
    """
    thresholds, tps, fps, n_pos, n_neg = _sweep(scores, positives)
    if n_pos == 0 or n_neg == 0:
        raise MetricError('ROC needs positives and negatives, got {} and {}'.format(n_pos, n_neg))

    tps = np.r_[0, tps]
    fps = np.r_[0, fps]
    thresholds = np.r_[np.inf, thresholds]
    if tps[-1] != n_pos or fps[-1] != n_neg:
        tps = np.r_[tps, n_pos]
        fps = np.r_[fps, n_neg]
        thresholds = np.r_[thresholds, -np.inf]

    doubled = sum(int(df) * int(t0 + t1) for df, t0, t1 in zip(np.diff(fps), tps[:-1], tps[1:]))
    area = float(Fraction(doubled, 2 * n_pos * n_neg))
    points = np.column_stack([fps / n_neg, tps / n_pos])
    return CurveData(CurveKind.ROC, class_id, thresholds, points, area)


def pr_curve(scores, positives, class_id : int = 0) -> CurveData:
    """
    Precision-recall curve with one point per distinct score and its average precision,
    sum over thresholds of (R_k - R_k-1) * P_k with R_0 = 0
    """
    thresholds, tps, fps, n_pos, _ = _sweep(scores, positives)
    if n_pos == 0:
        raise MetricError('precision-recall needs at least one positive')

    precision = tps / (tps + fps)
    recall = tps / n_pos
    previous = np.r_[0, tps[:-1]]
    area = float(sum(Fraction(int(t - p), n_pos) * Fraction(int(t), int(t + f))
                     for t, p, f in zip(tps, previous, fps) if t != p))
    return CurveData(CurveKind.PR, class_id, thresholds, np.column_stack([recall, precision]), area)


def one_vs_rest_curves(probs : np.ndarray, labels) -> typing.List[CurveData]:
    """
    ROC and PR curves of every class against the rest
    :param probs: (n, k) class probabilities, column c scores class c
    :param labels: true class ids
    :return: [roc_0, pr_0, roc_1, pr_1, ...], undefined where a class lacks positives or negatives
    """
    probs = np.asarray(probs, dtype=np.float64)
    labels = np.asarray(labels, dtype=np.int64).reshape(-1)
    if probs.ndim != 2 or probs.shape[0] != labels.size:
        raise DimensionError('probabilities of shape {} for {} labels'.format(probs.shape, labels.size))

    curves = []
    for c in range(probs.shape[1]):
        positives = labels == c
        for kind, builder in ((CurveKind.ROC, roc_curve), (CurveKind.PR, pr_curve)):
            try:
                curves.append(builder(probs[:, c], positives, c))
            except MetricError as e:
                logging.warning('{} curve of class {} undefined: {}'.format(kind.value, c, e))
                curves.append(CurveData.undefined(kind, c))
    return curves


def save_curve_csv(curve : CurveData, filepath : str):
    """
    Writes "threshold,x,y", one row per curve point
    """
    os.makedirs(os.path.dirname(os.path.abspath(filepath)), exist_ok=True)
    with open(filepath, 'w', newline='', encoding='utf-8') as f:
        writer = csv.writer(f, lineterminator='\n')
        writer.writerow(['threshold', 'x', 'y'])
        for threshold, (x, y) in zip(curve.thresholds, curve.points):
            writer.writerow([repr(float(threshold)), repr(float(x)), repr(float(y))])


def load_curve_csv(filepath : str) -> typing.Tuple[np.ndarray, np.ndarray]:
    """
    Returns the thresholds and the (x, y) points of a curve CSV
    """
    with open(filepath, newline='', encoding='utf-8') as f:
        reader = csv.DictReader(f)
        rows = [(float(row['threshold']), float(row['x']), float(row['y'])) for row in reader]
    data = np.asarray(rows, dtype=np.float64).reshape(-1, 3)
    return data[:, 0], data[:, 1:]
