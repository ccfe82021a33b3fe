"""
    MIT License

    Copyright (c) 2026 The camocodec authors

    Permission is hereby granted, free of charge, to any person obtaining a copy
    of this software, to deal in the Software without restriction, subject to
    the conditions stated in the LICENSE file distributed with this package.
"""

import os

from ..core.messages import CurveKind, Split

AUDIO_MODEL = 'audio'
BASELINE_MODEL = 'baseline'


class OutputLayout(object):

    """
        OutputLayout
        File names of every artifact below the output directory
    """

    def __init__(self, root : str):
        self._root = os.path.abspath(root)

    @property
    def root(self) -> str:
        return self._root

    def _path(self, *parts : str) -> str:
        return os.path.join(self._root, *parts)

    def wav(self, label : str, stem : str) -> str:
        return self._path('audio', label, stem + '.wav')

    def mel_pgm(self, label : str, stem : str) -> str:
        return self._path('spectrograms', label, stem + '.mel.pgm')

    def decoded_pgm(self, label : str, stem : str) -> str:
        return self._path('spectrograms', label, stem + '.decoded.pgm')

    def centroid_csv(self, label : str, stem : str) -> str:
        return self._path('spectrograms', label, stem + '.centroid.csv')

    def features(self, split : Split) -> str:
        return self._path('features', split.value + '.camf')

    def model(self, name : str) -> str:
        return self._path('models', name + '.camn')

    def history(self, name : str) -> str:
        return self._path('reports', name + '_history.csv')

    def timing(self, name : str) -> str:
        return self._path('reports', name + '_timing.csv')

    def report(self, name : str) -> str:
        return self._path('reports', name + '_report.txt')

    def confusion(self, name : str) -> str:
        return self._path('reports', name + '_confusion.csv')

    def grid_search(self) -> str:
        return self._path('reports', 'grid_search.csv')

    def class_balance(self) -> str:
        return self._path('reports', 'class_balance.csv')

    def comparison_txt(self) -> str:
        return self._path('reports', 'comparison.txt')

    def comparison_csv(self) -> str:
        return self._path('reports', 'comparison.csv')

    def curve(self, name : str, kind : CurveKind, class_name : str) -> str:
        return self._path('curves', '{}_{}_{}.csv'.format(name, kind.value, class_name))

    def pca(self, name : str, k : int) -> str:
        return self._path('pca', '{}_pca{}.csv'.format(name, k))
