"""
    MIT License

    Copyright (c) 2026 The camocodec authors

    Permission is hereby granted, free of charge, to any person obtaining a copy
    of this software, to deal in the Software without restriction, subject to
    the conditions stated in the LICENSE file distributed with this package.
"""

import csv
import json
import logging
import os
import typing

import numpy as np

from .grid_search import GRID_FIELDS, GridEntry, grid_row
from .network import DenseNet
from .trainer import TrainHistory
from ..core.errors import FormatError, MagicMismatchError, UnsupportedFormatError
from ..core.messages import Activation
from ..stream.file_stream import FileStream

CAMN_MAGIC = b'CAMN'
CAMN_VERSION = 1

HISTORY_HEADER = ['epoch', 'train_loss', 'train_acc', 'val_loss', 'val_acc', 'seconds']


def save_model(net : DenseNet, filepath : str):
    """
    Writes a CAMN file: magic, version, layer sizes, activation tag,
    per layer weights (fan_in x fan_out) and biases, then the optional input transform
    """
    with FileStream(filepath, 'wb') as stream:
        stream.write_bytes(CAMN_MAGIC)
        stream.write_uint(CAMN_VERSION)
        sizes = net.layer_sizes
        stream.write_uint(len(sizes))
        stream.write_ulong_array(np.asarray(sizes, dtype=np.uint64))
        stream.write_string(net.activation.value)
        for w, b in zip(net.weights, net.biases):
            stream.write_double_array(w)
            stream.write_double_array(b)
        stream.write_bool(net.has_input_transform)
        if net.has_input_transform:
            stream.write_double_array(net.input_shift)
            stream.write_double_array(net.input_scale)
    logging.info('wrote {} to {}'.format(net.to_string(), filepath))


def load_model(filepath : str) -> DenseNet:
    with FileStream(filepath, 'rb') as stream:
        magic = stream.read_bytes(len(CAMN_MAGIC))
        if magic != CAMN_MAGIC:
            raise MagicMismatchError('{}: not a model file (magic {!r})'.format(filepath, magic))
        version = stream.read_uint()
        if version != CAMN_VERSION:
            raise UnsupportedFormatError('{}: unsupported model file version {}'.format(filepath, version))
        n_sizes = stream.read_uint()
        if n_sizes < 2:
            raise FormatError('{}: a model needs at least 2 layer sizes, got {}'.format(filepath, n_sizes))
        sizes = [int(size) for size in stream.read_ulong_array(n_sizes)]
        if any(size < 1 for size in sizes):
            raise FormatError('{}: zero width layer in {}'.format(filepath, sizes))
        tag = stream.read_string()
        try:
            activation = Activation(tag)
        except ValueError:
            raise FormatError('{}: unknown activation "{}"'.format(filepath, tag))

        weights, biases = [], []
        for fan_in, fan_out in zip(sizes[:-1], sizes[1:]):
            weights.append(stream.read_double_array(fan_in * fan_out).reshape(fan_in, fan_out))
            biases.append(stream.read_double_array(fan_out))
        net = DenseNet(weights, biases, activation)
        if stream.read_bool():
            shift = stream.read_double_array(sizes[0])
            scale = stream.read_double_array(sizes[0])
            net.set_input_transform(shift, scale)
        if stream.remaining() != 0:
            raise FormatError('{}: {} trailing bytes after the parameters'.format(filepath, stream.remaining()))
    return net


def _open_csv(filepath : str):
    os.makedirs(os.path.dirname(os.path.abspath(filepath)), exist_ok=True)
    return open(filepath, 'w', newline='', encoding='utf-8')


def save_history_csv(history : TrainHistory, filepath : str):
    """
    Writes "epoch,train_loss,train_acc,val_loss,val_acc,seconds", epochs counted from 1
    """
    with _open_csv(filepath) as f:
        writer = csv.writer(f, lineterminator='\n')
        writer.writerow(HISTORY_HEADER)
        for epoch in range(len(history)):
            row = [history.train_loss[epoch], history.train_acc[epoch], history.val_loss[epoch],
                   history.val_acc[epoch], history.seconds[epoch]]
            writer.writerow([epoch + 1] + [repr(float(v)) for v in row])


def load_history_csv(filepath : str) -> TrainHistory:
    history = TrainHistory()
    with open(filepath, newline='', encoding='utf-8') as f:
        reader = csv.DictReader(f)
        for row in reader:
            history.append(float(row['train_loss']), float(row['train_acc']), float(row['val_loss']),
                           float(row['val_acc']), float(row.get('seconds') or 0.0))
    return history


def _grid_value(value) -> str:
    if value is None:
        return 'none'
    if isinstance(value, list):
        return json.dumps(value)
    return str(value)


def save_grid_csv(entries : typing.List[GridEntry], filepath : str):
    """
    One row per grid point in enumeration order: index, the grid fields, val_acc, val_loss
    """
    with _open_csv(filepath) as f:
        writer = csv.writer(f, lineterminator='\n')
        writer.writerow(['index'] + GRID_FIELDS + ['val_acc', 'val_loss'])
        for entry in entries:
            row = grid_row(entry)
            writer.writerow([entry.index] + [_grid_value(row[name]) for name in GRID_FIELDS] +
                            [repr(float(entry.val_accuracy)), repr(float(entry.val_loss))])
    logging.info('wrote {} grid points to {}'.format(len(entries), filepath))
