"""
    MIT License

    Copyright (c) 2026 The camocodec authors

    Permission is hereby granted, free of charge, to any person obtaining a copy
    of this software, to deal in the Software without restriction, subject to
    the conditions stated in the LICENSE file distributed with this package.
"""

import os
import typing

from ..core.errors import ArtifactError
from ..dataset.features import FeatureMatrix
from ..dataset.pca import pca_fit, pca_transform, save_scores_csv
from ..dnn.network import DenseNet, predict
from ..metrics.confusion import confusion_matrix, load_confusion_csv, save_confusion_csv
from ..metrics.curves import one_vs_rest_curves, save_curve_csv
from ..metrics.report import class_report
from ..metrics.summary import ExperimentSummary
from ..metrics.timing import load_timing_csv
from ..model.options_data import PipelineConfig
from ..model.output_layout import AUDIO_MODEL, BASELINE_MODEL, OutputLayout

from typing import TYPE_CHECKING
if TYPE_CHECKING:
    from .controller import Controller
else:
    from typing import Any as Controller

PCA_DIMENSIONS = (2, 3)


class ControllerEvaluate(object):

    """
        ControllerEvaluate
        Report, confusion matrix, per class curves and PCA scores of a trained model,
        and the side by side comparison of both models
    """

    def __init__(self, parent : Controller, config : PipelineConfig, layout : OutputLayout):
        self._controller_main = parent
        self._config = config
        self._layout = layout

    def evaluate_model(self, name : str, net : DenseNet, train : FeatureMatrix, val : FeatureMatrix) -> str:
        """
        Writes every evaluation artifact of one model
        :return: rendered report
        """
        layout = self._layout
        ids, probs = predict(net, val)
        cm = confusion_matrix(val.labels, ids, val.n_classes)
        save_confusion_csv(cm, val.class_names, layout.confusion(name))
        text = class_report(cm).render(val.class_names)
        os.makedirs(os.path.dirname(layout.report(name)), exist_ok=True)
        with open(layout.report(name), 'w', encoding='utf-8') as f:
            f.write(text)

        for curve in one_vs_rest_curves(probs, val.labels):
            if curve.defined:
                save_curve_csv(curve, layout.curve(name, curve.kind, val.class_names[curve.class_id]))

        fit_rows = train if train.n_samples >= 2 else val
        for k in PCA_DIMENSIONS:
            if k <= min(fit_rows.n_samples, fit_rows.dim):
                model = pca_fit(fit_rows, k)
                save_scores_csv(pca_transform(model, val), val.labels, val.class_names, layout.pca(name, k))
        return text

    def evaluate(self) -> str:
        train, val = self._controller_main.features.load_audio_features()
        net = self._controller_main.training.load(AUDIO_MODEL)
        return self.evaluate_model(AUDIO_MODEL, net, train, val)

    def baseline(self) -> str:
        train, val = self._controller_main.features.image_features()
        net = self._controller_main.training.fit(BASELINE_MODEL, self._config.baseline.train, train, val, 'image')
        return self.evaluate_model(BASELINE_MODEL, net, train, val)

    def _load_report(self, name : str):
        filepath = self._layout.confusion(name)
        timing_path = self._layout.timing(name)
        for path in (filepath, timing_path):
            if not os.path.isfile(path):
                raise ArtifactError('missing {} artifact {}'.format(name, path))
        class_names, cm = load_confusion_csv(filepath)
        return class_names, class_report(cm), load_timing_csv(timing_path)[0]

    def compare(self) -> typing.Tuple[str, ExperimentSummary]:
        class_names, audio_report, audio_time = self._load_report(AUDIO_MODEL)
        _, baseline_report, baseline_time = self._load_report(BASELINE_MODEL)
        summary = ExperimentSummary(audio_report, baseline_report, audio_time, baseline_time, class_names)
        text = summary.render()
        os.makedirs(os.path.dirname(self._layout.comparison_txt()), exist_ok=True)
        with open(self._layout.comparison_txt(), 'w', encoding='utf-8') as f:
            f.write(text)
        summary.save_csv(self._layout.comparison_csv())
        return text, summary
