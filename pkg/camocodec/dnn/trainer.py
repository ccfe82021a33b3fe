"""
    MIT License

    Copyright (c) 2026 The camocodec authors

    Permission is hereby granted, free of charge, to any person obtaining a copy
    of this software, to deal in the Software without restriction, subject to
    the conditions stated in the LICENSE file distributed with this package.
"""

import logging
import math
import time
import typing

import numpy as np

from .network import DenseNet, TrainConfig, apply_max_norm, evaluate, init_network, loss_and_grad
from .optimizer import Optimizer, optimizer_step
from ..core.errors import DimensionError


class TrainHistory(object):

    """
        TrainHistory
        Eval mode loss and accuracy on both splits after every epoch, plus the epoch wall time
    """

    def __init__(self):
        self.train_loss = []
        self.train_acc = []
        self.val_loss = []
        self.val_acc = []
        self.seconds = []

    def append(self, train_loss : float, train_acc : float, val_loss : float, val_acc : float, seconds : float):
        self.train_loss.append(train_loss)
        self.train_acc.append(train_acc)
        self.val_loss.append(val_loss)
        self.val_acc.append(val_acc)
        self.seconds.append(seconds)

    def __len__(self):
        return len(self.train_loss)

    @property
    def total_seconds(self) -> float:
        return float(sum(self.seconds))

    def best_epoch(self) -> typing.Optional[int]:
        """
        Returns the 1-based epoch with the highest val accuracy, earliest on ties
        """
        best, best_acc = None, -math.inf
        for epoch, acc in enumerate(self.val_acc, start=1):
            if not math.isnan(acc) and acc > best_acc:
                best, best_acc = epoch, acc
        return best

    def metrics(self) -> typing.List[typing.Tuple[float, float, float, float]]:
        """
        Per epoch (train_loss, train_acc, val_loss, val_acc), the part that is reproducible from a seed
        """
        return list(zip(self.train_loss, self.train_acc, self.val_loss, self.val_acc))


def _rows_labels(x) -> typing.Tuple[np.ndarray, np.ndarray]:
    if x is None:
        return np.zeros((0, 0)), np.zeros(0, dtype=np.int64)
    return np.asarray(x.rows, dtype=np.float64), np.asarray(x.labels, dtype=np.int64)


def train(net : DenseNet, cfg : TrainConfig, train_set, val_set=None) -> typing.Tuple[DenseNet, TrainHistory]:
    """
    Mini-batch training with seeded shuffling and dropout
    :param net: initial DenseNet, left untouched
    :param cfg: TrainConfig
    :param train_set: FeatureMatrix with the training rows
    :param val_set: optional FeatureMatrix evaluated after every epoch
    :return: trained copy of the network and its TrainHistory
    """
    cfg.validate()
    x, y = _rows_labels(train_set)
    if x.shape[0] == 0:
        raise DimensionError('cannot train on an empty training set')
    if x.shape[1] != net.input_dim:
        raise DimensionError('features of dim {} for a network with {} inputs'.format(x.shape[1], net.input_dim))
    x_val, y_val = _rows_labels(val_set)
    has_val = x_val.shape[0] > 0
    if has_val and x_val.shape[1] != net.input_dim:
        raise DimensionError('val features of dim {} for a network with {} inputs'.format(x_val.shape[1], net.input_dim))

    net = net.copy()
    history = TrainHistory()
    optimizer = Optimizer.from_config(cfg)
    rng = np.random.default_rng([cfg.seed, 1])
    params = net.parameters()
    n = x.shape[0]

    for epoch in range(cfg.epochs):
        start = time.time()
        order = rng.permutation(n)
        for first in range(0, n, cfg.batch_size):
            index = order[first:first + cfg.batch_size]
            _, grads = loss_and_grad(net, x[index], y[index], cfg.dropout_rate, rng)
            optimizer_step(optimizer, params, grads)
            if cfg.weight_constraint is not None:
                apply_max_norm(net, cfg.weight_constraint)

        train_loss, train_acc = evaluate(net, x, y)
        val_loss, val_acc = evaluate(net, x_val, y_val) if has_val else (float('nan'), float('nan'))
        seconds = time.time() - start
        history.append(train_loss, train_acc, val_loss, val_acc, seconds)
        logging.info('epoch {}/{} loss={:.4f} acc={:.4f} val_loss={:.4f} val_acc={:.4f} in: {:.3}s'.format(
            epoch + 1, cfg.epochs, train_loss, train_acc, val_loss, val_acc, seconds))

    if not np.all([np.all(np.isfinite(p)) for p in params]):
        logging.warning('training diverged, the network holds non-finite parameters')
    return net, history


def fit_model(cfg : TrainConfig, train_set, val_set=None, standardize : bool = True) \
        -> typing.Tuple[DenseNet, TrainHistory]:
    """
    Initializes a network for the feature matrices, optionally standardizes its inputs and trains it
    """
    from ..dataset.features import Standardizer

    net = init_network(cfg, train_set.dim, train_set.n_classes)
    if standardize and train_set.n_samples > 0:
        scaler = Standardizer.fit(train_set.rows)
        net.set_input_transform(scaler.mean, scaler.scale)
    return train(net, cfg, train_set, val_set)
