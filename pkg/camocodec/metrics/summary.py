"""
    MIT License

    Copyright (c) 2026 The camocodec authors

    Permission is hereby granted, free of charge, to any person obtaining a copy
    of this software, to deal in the Software without restriction, subject to
    the conditions stated in the LICENSE file distributed with this package.
"""

import csv
import os
import typing

from .report import ClassReport, round_half_up
from .timing import TimingRecord, speed_ratio, timing_table

SUMMARY_ROWS = ['accuracy', 'macro_precision', 'macro_recall', 'macro_f1', 'weighted_f1', 'seconds', 'time']


class ExperimentSummary(object):

    """
        ExperimentSummary
        Reports and wall times of the audio model and the image baseline.
        speed_ratio = baseline time / audio time.
    """

    def __init__(self, audio_report : ClassReport, baseline_report : ClassReport, audio_time : TimingRecord,
                 baseline_time : TimingRecord, class_names : typing.Sequence[str]):
        self._audio_report = audio_report
        self._baseline_report = baseline_report
        self._audio_time = audio_time
        self._baseline_time = baseline_time
        self._class_names = list(class_names)
        self._speed_ratio = speed_ratio(baseline_time, audio_time)

    @property
    def audio_report(self) -> ClassReport:
        return self._audio_report

    @property
    def baseline_report(self) -> ClassReport:
        return self._baseline_report

    @property
    def timings(self) -> typing.List[TimingRecord]:
        return [self._baseline_time, self._audio_time]

    @property
    def speed_ratio(self) -> float:
        return self._speed_ratio

    def _values(self, report : ClassReport, timing : TimingRecord) -> dict:
        return {
            'accuracy': report.accuracy,
            'macro_precision': report.macro.precision,
            'macro_recall': report.macro.recall,
            'macro_f1': report.macro.f1,
            'weighted_f1': report.weighted.f1,
            'seconds': timing.seconds,
            'time': timing.formatted
        }

    def render(self) -> str:
        parts = [
            'Baseline image classifier (before encoding)',
            self._baseline_report.render(self._class_names),
            'Audio classifier (after encoding)',
            self._audio_report.render(self._class_names),
            timing_table(self.timings),
            'Audio model is {} times faster than the baseline'.format(round_half_up(self._speed_ratio))
        ]
        return '\n'.join(parts) + '\n'

    def save_csv(self, filepath : str):
        """
        Writes "metric,audio,baseline" rows followed by the speed ratio
        """
        audio = self._values(self._audio_report, self._audio_time)
        baseline = self._values(self._baseline_report, self._baseline_time)
        os.makedirs(os.path.dirname(os.path.abspath(filepath)), exist_ok=True)
        with open(filepath, 'w', newline='', encoding='utf-8') as f:
            writer = csv.writer(f, lineterminator='\n')
            writer.writerow(['metric', 'audio', 'baseline'])
            for name in SUMMARY_ROWS:
                a, b = audio[name], baseline[name]
                if isinstance(a, float):
                    a, b = repr(a), repr(b)
                writer.writerow([name, a, b])
            writer.writerow(['speed_ratio', repr(self._speed_ratio), ''])
