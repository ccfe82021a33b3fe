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
import typing
from collections import OrderedDict

from ..core.errors import ManifestError
from ..core.messages import Split

HEADER = ['path', 'label', 'split']


class ManifestEntry(object):

    """
        ManifestEntry
        One labelled image of the dataset
    """

    def __init__(self, path : str, label : str, split : Split, line : int = None, filepath : str = None):
        self._path = path
        self._label = label
        self._split = split
        self._line = line
        self._filepath = filepath if filepath is not None else path

    @property
    def path(self) -> str:
        """
        Returns the path as written in the manifest
        """
        return self._path

    @property
    def filepath(self) -> str:
        """
        Returns the path resolved against the manifest directory
        """
        return self._filepath

    @property
    def label(self) -> str:
        return self._label

    @property
    def split(self) -> Split:
        return self._split

    @property
    def line(self) -> typing.Optional[int]:
        return self._line

    @property
    def stem(self) -> str:
        return os.path.splitext(os.path.basename(self._path))[0]


class Manifest(object):

    """
        Manifest
        Ordered list of dataset entries as read from "path,label,split" CSV
    """

    def __init__(self, entries : typing.Iterable[ManifestEntry] = ()):
        self._entries = list(entries)

    @property
    def entries(self) -> typing.List[ManifestEntry]:
        return self._entries

    def __len__(self):
        return len(self._entries)

    def __iter__(self):
        return iter(self._entries)

    def labels(self) -> typing.List[str]:
        """
        Returns the distinct labels in order of first appearance
        """
        return list(OrderedDict.fromkeys(entry.label for entry in self._entries))

    def split(self, split : Split) -> 'Manifest':
        return Manifest(entry for entry in self._entries if entry.split is split)


def load_manifest(filepath : str) -> Manifest:
    """
    Parses a manifest CSV file
    :param filepath: CSV with header "path,label,split"
    :return: Manifest, entries in file order with fields kept verbatim
    """
    if not os.path.isfile(filepath):
        raise FileNotFoundError('manifest not found: {}'.format(filepath))
    root = os.path.dirname(os.path.abspath(filepath))

    entries = []
    with open(filepath, newline='', encoding='utf-8') as f:
        reader = csv.reader(f)
        try:
            header = next(reader)
        except StopIteration:
            raise ManifestError('empty manifest, expected header {}'.format(','.join(HEADER)), line=1)
        if header != HEADER:
            raise ManifestError('bad header {}, expected {}'.format(header, ','.join(HEADER)), line=1)

        for row in reader:
            line = reader.line_num
            if not row or all(not token.strip() for token in row):
                continue
            if len(row) != 3:
                raise ManifestError('expected 3 fields, got {}'.format(len(row)), line=line)
            path, label, token = row
            if not path or not label:
                raise ManifestError('empty path or label', line=line)
            split = Split.get_split(token)
            if split is None:
                raise ManifestError('unknown split "{}", expected train or val'.format(token), line=line)
            entries.append(ManifestEntry(path, label, split, line, os.path.join(root, path)))

    logging.info('loaded manifest {} with {} entries'.format(filepath, len(entries)))
    return Manifest(entries)


def save_manifest(manifest : Manifest, filepath : str):
    os.makedirs(os.path.dirname(os.path.abspath(filepath)), exist_ok=True)
    with open(filepath, 'w', newline='', encoding='utf-8') as f:
        writer = csv.writer(f, lineterminator='\n')
        writer.writerow(HEADER)
        for entry in manifest:
            writer.writerow([entry.path, entry.label, entry.split.value])


class ClassBalance(object):

    """
        ClassBalance
        Per label sample counts of the train and val splits
    """

    def __init__(self, counts : 'OrderedDict[str, typing.Dict[Split, int]]'):
        self._counts = counts

    @property
    def counts(self) -> 'OrderedDict[str, typing.Dict[Split, int]]':
        return self._counts

    def count(self, label : str, split : Split) -> int:
        return self._counts.get(label, {}).get(split, 0)

    @property
    def balanced(self) -> bool:
        """
        True when all train counts agree and all val counts agree
        """
        for split in Split:
            if len({per_split[split] for per_split in self._counts.values()}) > 1:
                return False
        return True


def class_balance(manifest : Manifest) -> ClassBalance:
    counts = OrderedDict()
    for entry in manifest:
        per_split = counts.setdefault(entry.label, {split: 0 for split in Split})
        per_split[entry.split] += 1
    return ClassBalance(counts)


def save_class_balance_csv(balance : ClassBalance, filepath : str):
    """
    Writes "label,train,val,balanced" rows, the flag is the same on every row
    """
    os.makedirs(os.path.dirname(os.path.abspath(filepath)), exist_ok=True)
    flag = 'true' if balance.balanced else 'false'
    with open(filepath, 'w', newline='', encoding='utf-8') as f:
        writer = csv.writer(f, lineterminator='\n')
        writer.writerow(['label', Split.TRAIN.value, Split.VAL.value, 'balanced'])
        for label, per_split in balance.counts.items():
            writer.writerow([label, per_split[Split.TRAIN], per_split[Split.VAL], flag])
