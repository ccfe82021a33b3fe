"""
    MIT License

    Copyright (c) 2026 The camocodec authors

    Permission is hereby granted, free of charge, to any person obtaining a copy
    of this software, to deal in the Software without restriction, subject to
    the conditions stated in the LICENSE file distributed with this package.
"""

import logging
import time
import typing

from .controller_encode import ControllerEncode
from .controller_evaluate import ControllerEvaluate
from .controller_features import ControllerFeatures
from .controller_train import ControllerTrain
from ..core.errors import CamoError
from ..core.messages import Stage
from ..model.options_data import PipelineConfig
from ..model.output_layout import OutputLayout


class Controller(object):

    """
        Runs the pipeline stages on one configuration.
        Contains Sub-Controllers handling specific sub logic.
    """

    def __init__(self, config : PipelineConfig):
        self._config = config
        self._layout = OutputLayout(config.output_dir)

        # init sub controllers
        self._controller_encode = ControllerEncode(self, config, self._layout)
        self._controller_features = ControllerFeatures(self, config, self._layout)
        self._controller_train = ControllerTrain(self, config, self._layout)
        self._controller_evaluate = ControllerEvaluate(self, config, self._layout)

    @property
    def config(self) -> PipelineConfig:
        return self._config

    @property
    def layout(self) -> OutputLayout:
        return self._layout

    @property
    def encoder(self) -> ControllerEncode:
        """
        Returns the sub-controller which writes audio and spectrograms
        """
        return self._controller_encode

    @property
    def features(self) -> ControllerFeatures:
        """
        Returns the sub-controller which builds and loads feature matrices
        """
        return self._controller_features

    @property
    def training(self) -> ControllerTrain:
        """
        Returns the sub-controller which trains and stores models
        """
        return self._controller_train

    @property
    def evaluation(self) -> ControllerEvaluate:
        """
        Returns the sub-controller which evaluates and compares models
        """
        return self._controller_evaluate

    def run(self, stage : Stage, spectrograms : bool = False) -> typing.Optional[str]:
        """
        Runs one stage
        :param stage: Stage, everything but Stage.SYNTH which needs no configuration
        :param spectrograms: forwarded to the encode stage
        :return: summary text of the stage or None on failure
        """
        handlers = {
            Stage.ENCODE: lambda: self._controller_encode.encode(spectrograms),
            Stage.FEATURIZE: self._controller_features.featurize,
            Stage.TRAIN: self._controller_train.train,
            Stage.GRID: self._controller_train.grid,
            Stage.EVAL: self._controller_evaluate.evaluate,
            Stage.BASELINE: self._controller_evaluate.baseline,
            Stage.COMPARE: lambda: self._controller_evaluate.compare()[0]
        }
        if stage not in handlers:
            logging.error('Stage {} cannot run on a configuration'.format(stage.value))
            return None

        start = time.time()
        try:
            summary = handlers[stage]()
        except (CamoError, OSError) as e:
            logging.error('Stage {} failed: {}'.format(stage.value, e))
            return None
        logging.info('stage {} runtime: {:.3}s'.format(stage.value, time.time() - start))
        return summary
