"""
    MIT License

    Copyright (c) 2026 The camocodec authors

    Permission is hereby granted, free of charge, to any person obtaining a copy
    of this software, to deal in the Software without restriction, subject to
    the conditions stated in the LICENSE file distributed with this package.
"""

from enum import Enum


class Split(Enum):
    TRAIN               = 'train'
    VAL                 = 'val'

    @staticmethod
    def get_split(token : str):
        return {
            'train': Split.TRAIN,
            'val': Split.VAL
        }.get(token, None)


class Activation(Enum):
    RELU                = 'relu'
    TANH                = 'tanh'
    SIGMOID             = 'sigmoid'
    LINEAR              = 'linear'


class OptimizerType(Enum):
    SGD                 = 'sgd'
    ADAM                = 'adam'


class InitMode(Enum):
    UNIFORM_SMALL       = 'uniform_small'
    GLOROT_UNIFORM      = 'glorot_uniform'
    NORMAL_SMALL        = 'normal_small'


class Mode(Enum):
    TRAIN               = 'train'
    EVAL                = 'eval'


class CurveKind(Enum):
    ROC                 = 'roc'
    PR                  = 'pr'


class Stage(Enum):
    SYNTH               = 'synth'
    ENCODE              = 'encode'
    FEATURIZE           = 'featurize'
    TRAIN               = 'train'
    GRID                = 'grid'
    EVAL                = 'eval'
    BASELINE            = 'baseline'
    COMPARE             = 'compare'

    @staticmethod
    def get_stage(name : str):
        for stage in Stage:
            if stage.value == name:
                return stage
        return None
