"""
    MIT License

    Copyright (c) 2026 The camocodec authors

    Permission is hereby granted, free of charge, to any person obtaining a copy
    of this software, to deal in the Software without restriction, subject to
    the conditions stated in the LICENSE file distributed with this package.
"""

import logging
import os
import typing

from ..core.errors import ArtifactError, DimensionError
from ..core.messages import Split
from ..dataset.features import FeatureMatrix, build_features, build_image_features, load_features, save_features
from ..dataset.manifest import class_balance, load_manifest, save_class_balance_csv
from ..dataset.synthetic import generate_textures
from ..model.options_data import PipelineConfig
from ..model.output_layout import OutputLayout

from typing import TYPE_CHECKING
if TYPE_CHECKING:
    from .controller import Controller
else:
    from typing import Any as Controller


class ControllerFeatures(object):

    """
        ControllerFeatures
        Builds, stores and reloads the feature matrices of both classifiers
    """

    def __init__(self, parent : Controller, config : PipelineConfig, layout : OutputLayout):
        self._controller_main = parent
        self._config = config
        self._layout = layout

    def featurize(self) -> str:
        """
        Audio MFCC features of the manifest, written to features/{train,val}.camf
        """
        manifest = load_manifest(self._config.manifest_path)
        balance = class_balance(manifest)
        save_class_balance_csv(balance, self._layout.class_balance())
        if not balance.balanced:
            logging.warning('manifest classes are not balanced')

        train, val = build_features(manifest, self._config.encode, self._config.mfcc, self._config.seed,
                                    self._config.workers)
        save_features(train, self._layout.features(Split.TRAIN))
        save_features(val, self._layout.features(Split.VAL))
        return 'train {}x{}, val {}x{}, classes {}'.format(
            train.n_samples, train.dim, val.n_samples, val.dim, ', '.join(train.class_names))

    def load_audio_features(self) -> typing.Tuple[FeatureMatrix, FeatureMatrix]:
        out = []
        for split in (Split.TRAIN, Split.VAL):
            filepath = self._layout.features(split)
            if not os.path.isfile(filepath):
                raise ArtifactError('missing {} features {}, run featurize first'.format(split.value, filepath))
            matrix = load_features(filepath)
            if matrix.dim != self._config.mfcc.target_dim:
                raise DimensionError('{} has dim {}, the configuration expects {}'.format(
                    filepath, matrix.dim, self._config.mfcc.target_dim))
            out.append(matrix)
        return out[0], out[1]

    def image_features(self) -> typing.Tuple[FeatureMatrix, FeatureMatrix]:
        """
        Downscaled grayscale pixels of the manifest for the baseline classifier
        """
        baseline = self._config.baseline
        manifest = load_manifest(self._config.manifest_path)
        return build_image_features(manifest, baseline.height, baseline.width, self._config.workers)

    @staticmethod
    def synth(out_dir : str, seed : int = 0) -> str:
        """
        Writes the synthetic texture dataset and a pipeline.json next to its manifest
        """
        manifest_path = generate_textures(out_dir, seed=seed)
        config = PipelineConfig(document={'seed': seed})
        config.save(os.path.join(out_dir, 'pipeline.json'))
        return 'wrote {}'.format(manifest_path)
