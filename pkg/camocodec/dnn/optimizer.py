"""
    MIT License

    Copyright (c) 2026 The camocodec authors

    Permission is hereby granted, free of charge, to any person obtaining a copy
    of this software, to deal in the Software without restriction, subject to
    the conditions stated in the LICENSE file distributed with this package.
"""

import typing

import numpy as np

from ..core.errors import DimensionError
from ..core.messages import OptimizerType

ADAM_BETA1 = 0.9
ADAM_BETA2 = 0.999
ADAM_EPSILON = 1e-8


class Optimizer(object):

    """
        Optimizer
        Updates a list of parameter arrays in place.
        sgd keeps one velocity per parameter, adam the first and second moments.
    """

    def __init__(self, kind : OptimizerType, learn_rate : float, momentum : float = 0.0):
        self._kind = kind
        self._learn_rate = learn_rate
        self._momentum = momentum
        self._step = 0
        self._first = None
        self._second = None

    @staticmethod
    def from_config(cfg) -> 'Optimizer':
        return Optimizer(cfg.optimizer, cfg.learn_rate, cfg.momentum)

    @property
    def kind(self) -> OptimizerType:
        return self._kind

    @property
    def step_count(self) -> int:
        return self._step

    def _init_state(self, params : typing.List[np.ndarray]):
        self._first = [np.zeros_like(p) for p in params]
        if self._kind is OptimizerType.ADAM:
            self._second = [np.zeros_like(p) for p in params]

    def step(self, params : typing.List[np.ndarray], grads : typing.List[np.ndarray]):
        """
        Applies one update
        :param params: parameter arrays, modified in place
        :param grads: gradients with the same shapes
        """
        if len(params) != len(grads) or any(p.shape != g.shape for p, g in zip(params, grads)):
            raise DimensionError('gradients do not match the parameter shapes')
        if self._first is None:
            self._init_state(params)
        self._step += 1

        if self._kind is OptimizerType.SGD:
            for p, g, v in zip(params, grads, self._first):
                v *= self._momentum
                v -= self._learn_rate * g
                p += v
            return

        correction1 = 1.0 - ADAM_BETA1 ** self._step
        correction2 = 1.0 - ADAM_BETA2 ** self._step
        for p, g, m, v in zip(params, grads, self._first, self._second):
            m *= ADAM_BETA1
            m += (1.0 - ADAM_BETA1) * g
            v *= ADAM_BETA2
            v += (1.0 - ADAM_BETA2) * g ** 2
            p -= self._learn_rate * (m / correction1) / (np.sqrt(v / correction2) + ADAM_EPSILON)


def optimizer_step(optimizer : Optimizer, params : typing.List[np.ndarray], grads : typing.List[np.ndarray]):
    optimizer.step(params, grads)
