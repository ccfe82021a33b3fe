"""
    MIT License

    Copyright (c) 2026 The camocodec authors

    Permission is hereby granted, free of charge, to any person obtaining a copy
    of this software, to deal in the Software without restriction, subject to
    the conditions stated in the LICENSE file distributed with this package.
"""

import os
import time
import typing

from ..core.errors import ArtifactError, ConfigError
from ..dataset.features import FeatureMatrix
from ..dnn.grid_search import grid_search
from ..dnn.model_io import load_model, save_grid_csv, save_history_csv, save_model
from ..dnn.network import DenseNet, TrainConfig
from ..dnn.trainer import fit_model
from ..metrics.timing import save_timing_csv, timing_report
from ..model.options_data import PipelineConfig
from ..model.output_layout import AUDIO_MODEL, OutputLayout

from typing import TYPE_CHECKING
if TYPE_CHECKING:
    from .controller import Controller
else:
    from typing import Any as Controller


class ControllerTrain(object):

    """
        ControllerTrain
        Trains and stores the classifiers, with or without grid search
    """

    def __init__(self, parent : Controller, config : PipelineConfig, layout : OutputLayout):
        self._controller_main = parent
        self._config = config
        self._layout = layout

    def fit(self, name : str, cfg : TrainConfig, train : FeatureMatrix, val : FeatureMatrix, data : str) -> DenseNet:
        """
        Trains one model and writes its model file, history and timing record
        """
        start = time.time()
        net, history = fit_model(cfg, train, val)
        elapsed = time.time() - start
        save_model(net, self._layout.model(name))
        save_history_csv(history, self._layout.history(name))
        save_timing_csv([timing_report(name, elapsed, data)], self._layout.timing(name))
        return net

    def train(self, cfg : typing.Optional[TrainConfig] = None) -> str:
        train, val = self._controller_main.features.load_audio_features()
        cfg = cfg or self._config.train
        self.fit(AUDIO_MODEL, cfg, train, val, 'audio')
        return 'trained {} model on {} samples'.format(AUDIO_MODEL, train.n_samples)

    def grid(self) -> str:
        if not self._config.grid:
            raise ConfigError('the configuration has no grid section')
        train, val = self._controller_main.features.load_audio_features()
        best, entries = grid_search(self._config.grid, self._config.train, train, val, self._config.workers)
        save_grid_csv(entries, self._layout.grid_search())
        self.fit(AUDIO_MODEL, best, train, val, 'audio')
        return 'searched {} configurations, best {}'.format(len(entries), best.to_dict())

    def load(self, name : str) -> DenseNet:
        filepath = self._layout.model(name)
        if not os.path.isfile(filepath):
            raise ArtifactError('missing model {}, train it first'.format(filepath))
        return load_model(filepath)
