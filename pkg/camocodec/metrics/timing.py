"""
    MIT License

    Copyright (c) 2026 The camocodec authors

    Permission is hereby granted, free of charge, to any person obtaining a copy
    of this software, to deal in the Software without restriction, subject to
    the conditions stated in the LICENSE file distributed with this package.
"""

import csv
import logging
import os
import platform
import typing
from decimal import Decimal, ROUND_HALF_UP

from ..core.errors import MetricError

MICROS_PER_SECOND = 1000000
TABLE_COLUMNS = ['Model', 'Data', 'Platform', 'Time']


def format_elapsed(seconds : float) -> str:
    """
    "H : MM : SS.ffffff" with unpadded hours and a microsecond fraction,
    844.589522 -> "0 : 14 : 04.589522"
    """
    if seconds < 0:
        raise MetricError('elapsed time must be non-negative, got {}'.format(seconds))
    micros = int((Decimal(str(seconds)) * MICROS_PER_SECOND).quantize(Decimal(1), rounding=ROUND_HALF_UP))
    whole, fraction = divmod(micros, MICROS_PER_SECOND)
    minutes, secs = divmod(whole, 60)
    hours, minutes = divmod(minutes, 60)
    return '{} : {:02d} : {:02d}.{:06d}'.format(hours, minutes, secs, fraction)


def default_platform() -> str:
    return 'CPU ({})'.format(platform.machine() or 'unknown')


class TimingRecord(object):

    """
        TimingRecord
        Wall time of one model on one data kind
    """

    def __init__(self, model : str, data : str, seconds : float, platform_name : typing.Optional[str] = None):
        if seconds < 0:
            raise MetricError('elapsed time must be non-negative, got {}'.format(seconds))
        self._model = model
        self._data = data
        self._seconds = float(seconds)
        self._platform = platform_name or default_platform()

    @property
    def model(self) -> str:
        return self._model

    @property
    def data(self) -> str:
        return self._data

    @property
    def seconds(self) -> float:
        return self._seconds

    @property
    def platform(self) -> str:
        return self._platform

    @property
    def formatted(self) -> str:
        return format_elapsed(self._seconds)


def timing_report(stage_name : str, elapsed : float, data : str = '', platform_name : typing.Optional[str] = None) \
        -> TimingRecord:
    record = TimingRecord(stage_name, data, elapsed, platform_name)
    logging.info('{} took {}'.format(stage_name, record.formatted))
    return record


def speed_ratio(slow : TimingRecord, fast : TimingRecord) -> float:
    """
    How many times faster fast ran than slow
    """
    if slow.seconds <= 0 or fast.seconds <= 0:
        raise MetricError('speed ratio needs positive times, got {} and {}'.format(slow.seconds, fast.seconds))
    return slow.seconds / fast.seconds


def timing_table(records : typing.Sequence[TimingRecord]) -> str:
    """
    Fixed width table with the columns Model, Data, Platform, Time
    """
    rows = [TABLE_COLUMNS] + [[r.model, r.data, r.platform, r.formatted] for r in records]
    widths = [max(len(row[i]) for row in rows) for i in range(len(TABLE_COLUMNS))]
    lines = ['  '.join(value.ljust(width) for value, width in zip(row, widths)).rstrip() for row in rows]
    lines.insert(1, '  '.join('-' * width for width in widths))
    return '\n'.join(lines) + '\n'


def save_timing_csv(records : typing.Sequence[TimingRecord], filepath : str):
    os.makedirs(os.path.dirname(os.path.abspath(filepath)), exist_ok=True)
    with open(filepath, 'w', newline='', encoding='utf-8') as f:
        writer = csv.writer(f, lineterminator='\n')
        writer.writerow(['model', 'data', 'platform', 'seconds', 'time'])
        for r in records:
            writer.writerow([r.model, r.data, r.platform, repr(r.seconds), r.formatted])


def load_timing_csv(filepath : str) -> typing.List[TimingRecord]:
    with open(filepath, newline='', encoding='utf-8') as f:
        return [TimingRecord(row['model'], row['data'], float(row['seconds']), row['platform'])
                for row in csv.DictReader(f)]
