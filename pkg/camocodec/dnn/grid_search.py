"""
    MIT License

    Copyright (c) 2026 The camocodec authors

    Permission is hereby granted, free of charge, to any person obtaining a copy
    of this software, to deal in the Software without restriction, subject to
    the conditions stated in the LICENSE file distributed with this package.
"""

import itertools
import logging
import time
import typing
from concurrent.futures import ThreadPoolExecutor

from .network import TrainConfig
from .trainer import fit_model
from ..core.errors import ConfigError, DimensionError

# enumeration order, the first field varies slowest
GRID_FIELDS = [
    'batch_size',
    'epochs',
    'optimizer',
    'learn_rate',
    'momentum',
    'init_mode',
    'activation',
    'dropout_rate',
    'weight_constraint',
    'neurons'
]


class GridEntry(object):

    """
        GridEntry
        One evaluated grid point
    """

    def __init__(self, index : int, cfg : TrainConfig, val_accuracy : float, val_loss : float, seconds : float):
        self.index = index
        self.cfg = cfg
        self.val_accuracy = val_accuracy
        self.val_loss = val_loss
        self.seconds = seconds


def expand_grid(grid : typing.Dict[str, list], base : TrainConfig) -> typing.List[TrainConfig]:
    """
    Cartesian product of the grid axes over the base config, in GRID_FIELDS order
    """
    unknown = set(grid) - set(GRID_FIELDS)
    if unknown:
        raise ConfigError('unknown grid axes: {}'.format(sorted(unknown)))
    axes = [name for name in GRID_FIELDS if name in grid]
    if not axes:
        raise ConfigError('grid search needs at least one axis')
    for name in axes:
        if not isinstance(grid[name], (list, tuple)) or len(grid[name]) == 0:
            raise ConfigError('grid axis "{}" must be a non-empty list'.format(name))

    base_values = base.to_dict()
    configs = []
    for combo in itertools.product(*(grid[name] for name in axes)):
        values = dict(base_values)
        values.update(zip(axes, combo))
        configs.append(TrainConfig.from_dict(values))
    return configs


def grid_search(grid : typing.Dict[str, list], base : TrainConfig, train_set, val_set, workers : int = 1,
                standardize : bool = True) -> typing.Tuple[TrainConfig, typing.List[GridEntry]]:
    """
    Trains every grid point and picks the highest final val accuracy, earliest point on ties
    :param grid: field name -> candidate values
    :param base: values of the fields the grid does not vary
    :param train_set: training FeatureMatrix
    :param val_set: validation FeatureMatrix, must not be empty
    :param workers: number of configurations trained concurrently
    :return: best TrainConfig and one GridEntry per grid point in enumeration order
    """
    if val_set is None or val_set.n_samples == 0:
        raise DimensionError('grid search needs validation rows')
    configs = expand_grid(grid, base)
    logging.info('grid search over {} configurations'.format(len(configs)))

    def run(item : typing.Tuple[int, TrainConfig]) -> GridEntry:
        index, cfg = item
        start = time.time()
        _, history = fit_model(cfg, train_set, val_set, standardize)
        val_acc = history.val_acc[-1] if len(history) else 0.0
        val_loss = history.val_loss[-1] if len(history) else float('nan')
        entry = GridEntry(index, cfg, val_acc, val_loss, time.time() - start)
        logging.info('grid point {} val_acc={:.4f} in: {:.3}s'.format(index, val_acc, entry.seconds))
        return entry

    if workers <= 1:
        entries = [run(item) for item in enumerate(configs)]
    else:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            entries = list(executor.map(run, enumerate(configs)))

    best = entries[0]
    for entry in entries[1:]:
        if entry.val_accuracy > best.val_accuracy:
            best = entry
    logging.info('best grid point {} val_acc={:.4f}'.format(best.index, best.val_accuracy))
    return best.cfg, entries


def grid_row(entry : GridEntry) -> dict:
    values = entry.cfg.to_dict()
    return {name: values[name] for name in GRID_FIELDS}
