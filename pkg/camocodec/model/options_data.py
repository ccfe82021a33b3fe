"""
    MIT License

    Copyright (c) 2026 The camocodec authors

    Permission is hereby granted, free of charge, to any person obtaining a copy
    of this software, to deal in the Software without restriction, subject to
    the conditions stated in the LICENSE file distributed with this package.
"""

import copy
import json
import logging
import os
import typing
from dataclasses import dataclass, field

from ..core.errors import ConfigError
from ..dnn.network import TrainConfig
from ..dsp.cepstrum import MfccConfig
from ..sonify.encoder import EncodeConfig

DEFAULTS_FILE = os.path.abspath(os.path.join(os.path.dirname(__file__), '..', 'resources', 'pipeline.json'))
SECTIONS = ['encode', 'mfcc', 'train', 'grid', 'baseline', 'paths', 'seed', 'workers']


@dataclass(frozen=True)
class BaselineConfig(object):

    """
        BaselineConfig
        Image classifier trained on downscaled grayscale pixels
    """

    height : int = 64
    width : int = 64
    train : TrainConfig = field(default_factory=TrainConfig)

    def validate(self) -> 'BaselineConfig':
        if self.height < 1 or self.width < 1:
            raise ConfigError('baseline size must be positive, got {}x{}'.format(self.height, self.width))
        self.train.validate()
        return self

    @staticmethod
    def from_dict(values : typing.Optional[dict]) -> 'BaselineConfig':
        values = dict(values or {})
        unknown = set(values) - {'height', 'width', 'train'}
        if unknown:
            raise ConfigError('unknown baseline options: {}'.format(sorted(unknown)))
        return BaselineConfig(int(values.get('height', 64)), int(values.get('width', 64)),
                              TrainConfig.from_dict(values.get('train'))).validate()

    def to_dict(self) -> dict:
        return {'height': self.height, 'width': self.width, 'train': self.train.to_dict()}


def _merge(defaults : dict, document : dict) -> dict:
    """
    Section-wise override of the defaults, the grid section is replaced as a whole
    """
    merged = copy.deepcopy(defaults)
    for key, value in document.items():
        if key not in SECTIONS:
            raise ConfigError('unknown configuration section "{}"'.format(key))
        if key == 'baseline' and isinstance(value, dict):
            baseline = merged.setdefault('baseline', {})
            for name, entry in value.items():
                if name == 'train' and isinstance(entry, dict):
                    baseline.setdefault('train', {}).update(entry)
                else:
                    baseline[name] = entry
        elif key in ('encode', 'mfcc', 'train', 'paths') and isinstance(value, dict):
            merged.setdefault(key, {}).update(value)
        else:
            merged[key] = value
    return merged


class PipelineConfig(object):

    """
        PipelineConfig
        Typed view on the JSON pipeline document.
        Every missing value falls back to resources/pipeline.json.
    """

    def __init__(self, filepath : typing.Optional[str] = None, document : typing.Optional[dict] = None):
        with open(DEFAULTS_FILE, encoding='utf-8') as f:
            defaults = json.load(f)

        self._filepath = filepath
        self._root = os.getcwd()
        if filepath is not None:
            logging.info('Loading pipeline configuration {}'.format(filepath))
            if not os.path.isfile(filepath):
                raise FileNotFoundError('configuration not found: {}'.format(filepath))
            try:
                with open(filepath, encoding='utf-8') as f:
                    document = json.load(f)
            except json.JSONDecodeError as e:
                raise ConfigError('{}: invalid JSON: {}'.format(filepath, e)) from e
            self._root = os.path.dirname(os.path.abspath(filepath))
        if document is not None and not isinstance(document, dict):
            raise ConfigError('configuration must be a JSON object')

        self._doc = _merge(defaults, document or {})
        self._parse()

    def _parse(self):
        doc = self._doc
        self._encode = EncodeConfig.from_dict(doc['encode'])
        self._mfcc = MfccConfig.from_dict(doc['mfcc'])
        self._train = TrainConfig.from_dict(doc['train'])
        self._baseline = BaselineConfig.from_dict(doc['baseline'])
        grid = doc.get('grid') or {}
        if not isinstance(grid, dict):
            raise ConfigError('grid must map field names to value lists')
        self._grid = grid
        paths = doc['paths']
        unknown = set(paths) - {'manifest', 'output'}
        if unknown:
            raise ConfigError('unknown path options: {}'.format(sorted(unknown)))
        try:
            self._seed = int(doc['seed'])
            self._workers = int(doc['workers'])
        except (TypeError, ValueError) as e:
            raise ConfigError('seed and workers must be integers: {}'.format(e)) from e
        if self._workers < 1:
            raise ConfigError('workers must be at least 1, got {}'.format(self._workers))

    def _resolve(self, path : str) -> str:
        return path if os.path.isabs(path) else os.path.normpath(os.path.join(self._root, path))

    @property
    def filepath(self) -> typing.Optional[str]:
        return self._filepath

    @property
    def encode(self) -> EncodeConfig:
        return self._encode

    @property
    def mfcc(self) -> MfccConfig:
        return self._mfcc

    @property
    def train(self) -> TrainConfig:
        return self._train

    @property
    def grid(self) -> dict:
        return self._grid

    @property
    def baseline(self) -> BaselineConfig:
        return self._baseline

    @property
    def manifest_path(self) -> str:
        return self._resolve(self._doc['paths']['manifest'])

    @property
    def output_dir(self) -> str:
        return self._resolve(self._doc['paths']['output'])

    @output_dir.setter
    def output_dir(self, path : str):
        self._doc['paths']['output'] = os.path.abspath(path)

    @property
    def seed(self) -> int:
        return self._seed

    @seed.setter
    def seed(self, seed : int):
        """
        Overrides the pipeline seed and the seeds of both classifiers
        """
        self._doc['seed'] = seed
        self._doc['train']['seed'] = seed
        self._doc['baseline']['train']['seed'] = seed
        self._parse()

    @property
    def workers(self) -> int:
        return self._workers

    def to_dict(self) -> dict:
        return {
            'encode': self._encode.to_dict(),
            'mfcc': self._mfcc.to_dict(),
            'train': self._train.to_dict(),
            'grid': copy.deepcopy(self._grid),
            'baseline': self._baseline.to_dict(),
            'paths': dict(self._doc['paths']),
            'seed': self._seed,
            'workers': self._workers
        }

    def save(self, filepath : typing.Optional[str] = None):
        filepath = filepath or self._filepath
        if filepath is None:
            raise ConfigError('no file to save the configuration to')
        os.makedirs(os.path.dirname(os.path.abspath(filepath)), exist_ok=True)
        with open(filepath, 'w', encoding='utf-8') as f:
            json.dump(self.to_dict(), f, indent=4)
            f.write('\n')
