"""
    MIT License

    Copyright (c) 2026 The camocodec authors

    Permission is hereby granted, free of charge, to any person obtaining a copy
    of this software, to deal in the Software without restriction, subject to
    the conditions stated in the LICENSE file distributed with this package.
"""

import logging
import typing
from decimal import Decimal, ROUND_HALF_UP

import numpy as np

from .confusion import ConfusionMatrix
from ..core.errors import DimensionError, MetricError

DIGITS = 2


def f1_score(precision : float, recall : float) -> float:
    """
    Harmonic mean of precision and recall, 0 when both are 0
    """
    if precision + recall == 0:
        return 0.0
    return 2.0 * precision * recall / (precision + recall)


def round_half_up(value : float, digits : int = DIGITS) -> str:
    """
    Fixed point string rounded half away from zero
    """
    quantum = Decimal(1).scaleb(-digits)
    return str(Decimal(str(value)).quantize(quantum, rounding=ROUND_HALF_UP))


class ClassMetrics(object):

    def __init__(self, precision : float, recall : float, f1 : float, support : int):
        self.precision = precision
        self.recall = recall
        self.f1 = f1
        self.support = support

    def as_tuple(self) -> typing.Tuple[float, float, float, int]:
        return self.precision, self.recall, self.f1, self.support


class ClassReport(object):

    """
        ClassReport
        Per class precision, recall, f1 and support plus accuracy,
        macro and support weighted averages.
        zero_division lists (class_id, metric) pairs whose denominator was 0 and were reported as 0.
    """

    def __init__(self, per_class : typing.List[ClassMetrics], accuracy : float, macro : ClassMetrics,
                 weighted : ClassMetrics, zero_division : typing.List[typing.Tuple[int, str]]):
        self._per_class = per_class
        self._accuracy = accuracy
        self._macro = macro
        self._weighted = weighted
        self._zero_division = zero_division

    @property
    def per_class(self) -> typing.List[ClassMetrics]:
        return self._per_class

    @property
    def accuracy(self) -> float:
        return self._accuracy

    @property
    def macro(self) -> ClassMetrics:
        return self._macro

    @property
    def weighted(self) -> ClassMetrics:
        return self._weighted

    @property
    def zero_division(self) -> typing.List[typing.Tuple[int, str]]:
        return self._zero_division

    @property
    def total(self) -> int:
        return self._macro.support

    def render(self, class_names : typing.Sequence[str]) -> str:
        """
        Fixed width text with the columns precision, recall, f1-score, support
        """
        if len(class_names) != len(self._per_class):
            raise DimensionError('{} class names for {} classes'.format(len(class_names), len(self._per_class)))
        width = max([len(name) for name in class_names] + [len('weighted avg')])
        head = '{:>{w}} {:>10} {:>10} {:>10} {:>10}'.format('', 'precision', 'recall', 'f1-score', 'support', w=width)

        def line(name : str, m : ClassMetrics) -> str:
            return '{:>{w}} {:>10} {:>10} {:>10} {:>10}'.format(
                name, round_half_up(m.precision), round_half_up(m.recall), round_half_up(m.f1), m.support, w=width)

        lines = [head, '']
        lines += [line(name, m) for name, m in zip(class_names, self._per_class)]
        lines.append('')
        lines.append('{:>{w}} {:>10} {:>10} {:>10} {:>10}'.format(
            'accuracy', '', '', round_half_up(self._accuracy), self.total, w=width))
        lines.append(line('macro avg', self._macro))
        lines.append(line('weighted avg', self._weighted))
        return '\n'.join(lines) + '\n'


def class_report(cm : ConfusionMatrix) -> ClassReport:
    """
    Precision, recall and f1 of every class of a confusion matrix
    """
    total = cm.total
    if total == 0:
        raise MetricError('class report of an empty confusion matrix')

    counts = cm.counts
    tp = np.diag(counts)
    predicted = counts.sum(axis=0)
    support = counts.sum(axis=1)

    per_class, zero_division = [], []
    for c in range(cm.n_classes):
        if predicted[c] == 0:
            zero_division.append((c, 'precision'))
            precision = 0.0
        else:
            precision = tp[c] / predicted[c]
        if support[c] == 0:
            zero_division.append((c, 'recall'))
            recall = 0.0
        else:
            recall = tp[c] / support[c]
        per_class.append(ClassMetrics(float(precision), float(recall), f1_score(precision, recall), int(support[c])))
    if zero_division:
        logging.warning('metrics with a zero denominator reported as 0: {}'.format(zero_division))

    values = np.array([[m.precision, m.recall, m.f1] for m in per_class])
    macro = values.mean(axis=0)
    if np.all(support == support[0]):
        weighted = macro
    else:
        weighted = (values * support[:, None]).sum(axis=0) / total
    return ClassReport(
        per_class,
        cm.trace / total,
        ClassMetrics(float(macro[0]), float(macro[1]), float(macro[2]), total),
        ClassMetrics(float(weighted[0]), float(weighted[1]), float(weighted[2]), total),
        zero_division
    )
