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
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .manifest import Manifest, ManifestEntry
from ..core.errors import CamoError, DimensionError, FormatError, MagicMismatchError, ManifestError, \
    TruncatedDataError, UnsupportedFormatError
from ..core.messages import Split
from ..dsp.cepstrum import MfccConfig, mfcc
from ..raster.pnm import load_image
from ..raster.transform import resize_bilinear, to_grayscale
from ..sonify.encoder import EncodeConfig, encode_image
from ..stream.file_stream import FileStream
from ..stream.stream import SizeOf

CAMF_MAGIC = b'CAMF'
CAMF_VERSION = 1


class FeatureMatrix(object):

    """
        FeatureMatrix
        Labelled feature rows of one split.
        labels hold class ids indexing class_names.
    """

    def __init__(self, rows : np.ndarray, labels, class_names : typing.Sequence[str]):
        rows = np.asarray(rows, dtype=np.float64)
        labels = np.asarray(labels, dtype=np.int64).reshape(-1)
        if rows.ndim != 2 or rows.shape[1] < 1:
            raise DimensionError('feature rows must be a 2-D array with dim >= 1, got shape {}'.format(rows.shape))
        if labels.size != rows.shape[0]:
            raise DimensionError('{} labels for {} rows'.format(labels.size, rows.shape[0]))
        if labels.size and (labels.min() < 0 or labels.max() >= len(class_names)):
            raise DimensionError('labels must lie in [0, {})'.format(len(class_names)))
        self._rows = rows
        self._labels = labels
        self._class_names = list(class_names)

    @property
    def rows(self) -> np.ndarray:
        return self._rows

    @property
    def labels(self) -> np.ndarray:
        return self._labels

    @property
    def class_names(self) -> typing.List[str]:
        return self._class_names

    @property
    def n_samples(self) -> int:
        return self._rows.shape[0]

    @property
    def dim(self) -> int:
        return self._rows.shape[1]

    @property
    def n_classes(self) -> int:
        return len(self._class_names)

    def with_rows(self, rows : np.ndarray) -> 'FeatureMatrix':
        return FeatureMatrix(rows, self._labels, self._class_names)

    def to_string(self) -> str:
        return 'FeatureMatrix {}x{} classes={}'.format(self.n_samples, self.dim, self._class_names)


def extract_rows(entries : typing.Sequence[ManifestEntry], extractor : typing.Callable[[ManifestEntry], np.ndarray],
                 workers : int = 1) -> typing.List[np.ndarray]:
    """
    Runs extractor on every entry, results are placed by entry index.
    A failing entry aborts the batch with its manifest line and path.
    """
    def run(entry : ManifestEntry) -> np.ndarray:
        try:
            return extractor(entry)
        except (CamoError, OSError, ValueError) as e:
            logging.error('feature extraction failed for {}: {}'.format(entry.filepath, e))
            raise ManifestError('{}: {}'.format(entry.path, e), line=entry.line) from e

    if workers <= 1:
        return [run(entry) for entry in entries]
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(run, entries))


def _split_matrices(manifest : Manifest, rows : typing.List[np.ndarray], dim : int) \
        -> typing.Tuple[FeatureMatrix, FeatureMatrix]:
    class_names = manifest.labels()
    class_ids = {name: i for i, name in enumerate(class_names)}
    out = []
    for split in (Split.TRAIN, Split.VAL):
        index = [i for i, entry in enumerate(manifest) if entry.split is split]
        matrix = np.stack([rows[i] for i in index]) if index else np.zeros((0, dim))
        labels = [class_ids[manifest.entries[i].label] for i in index]
        out.append(FeatureMatrix(matrix, labels, class_names))
    return out[0], out[1]


def load_gray(entry : ManifestEntry, height : int, width : int):
    return resize_bilinear(to_grayscale(load_image(entry.filepath)), height, width)


def build_features(manifest : Manifest, encode_cfg : EncodeConfig, mfcc_cfg : MfccConfig, seed : int = 0,
                   workers : int = 1) -> typing.Tuple[FeatureMatrix, FeatureMatrix]:
    """
    Image -> grayscale -> encoder grid -> camouflage audio -> MFCC descriptor, for every manifest entry
    :param manifest: Manifest
    :param encode_cfg: EncodeConfig
    :param mfcc_cfg: MfccConfig
    :param seed: encoder seed
    :param workers: number of extraction threads
    :return: (train, val) FeatureMatrix pair sharing class_names
    """
    encode_cfg.validate()
    mfcc_cfg.validate()

    def extractor(entry : ManifestEntry) -> np.ndarray:
        gray = load_gray(entry, encode_cfg.rows, encode_cfg.cols)
        clip = encode_image(gray, encode_cfg, seed)
        return mfcc(clip, mfcc_cfg, entry.path).values

    start = time.time()
    rows = extract_rows(manifest.entries, extractor, workers)
    train, val = _split_matrices(manifest, rows, mfcc_cfg.target_dim)
    logging.info('built audio features train={} val={} in: {:.3}s'.format(
        train.n_samples, val.n_samples, time.time() - start))
    return train, val


def build_image_features(manifest : Manifest, height : int, width : int, workers : int = 1) \
        -> typing.Tuple[FeatureMatrix, FeatureMatrix]:
    """
    Image -> grayscale -> height x width -> flattened pixels, the input of the baseline classifier
    """
    if height < 1 or width < 1:
        raise DimensionError('baseline image size must be positive, got {}x{}'.format(height, width))

    def extractor(entry : ManifestEntry) -> np.ndarray:
        return load_gray(entry, height, width).data.copy()

    start = time.time()
    rows = extract_rows(manifest.entries, extractor, workers)
    train, val = _split_matrices(manifest, rows, height * width)
    logging.info('built image features train={} val={} in: {:.3}s'.format(
        train.n_samples, val.n_samples, time.time() - start))
    return train, val


def save_features(x : FeatureMatrix, filepath : str):
    """
    Writes a CAMF file: magic, version, n, dim, class names, labels, row-major float64 payload
    """
    with FileStream(filepath, 'wb') as stream:
        stream.write_bytes(CAMF_MAGIC)
        stream.write_uint(CAMF_VERSION)
        stream.write_ulong(x.n_samples)
        stream.write_ulong(x.dim)
        stream.write_uint(x.n_classes)
        for name in x.class_names:
            stream.write_string(name)
        stream.write_uint_array(x.labels)
        stream.write_double_array(x.rows)
    logging.info('wrote {} to {}'.format(x.to_string(), filepath))


def load_features(filepath : str) -> FeatureMatrix:
    """
    Reads a CAMF file written by save_features
    """
    with FileStream(filepath, 'rb') as stream:
        magic = stream.read_bytes(len(CAMF_MAGIC))
        if magic != CAMF_MAGIC:
            raise MagicMismatchError('{}: not a feature file (magic {!r})'.format(filepath, magic))
        version = stream.read_uint()
        if version != CAMF_VERSION:
            raise UnsupportedFormatError('{}: unsupported feature file version {}'.format(filepath, version))
        n_samples = stream.read_ulong()
        dim = stream.read_ulong()
        if dim == 0:
            raise FormatError('{}: feature dimension must be positive'.format(filepath))
        n_classes = stream.read_uint()
        class_names = [stream.read_string() for _ in range(n_classes)]

        expected = n_samples * SizeOf.UNSIGNED_INT.value + n_samples * dim * SizeOf.DOUBLE.value
        left = stream.remaining()
        if left < expected:
            raise TruncatedDataError('{}: payload of {} bytes, header declares {}x{} ({} bytes)'.format(
                filepath, left, n_samples, dim, expected))
        if left > expected:
            raise FormatError('{}: {} trailing bytes after the payload'.format(filepath, left - expected))

        labels = stream.read_uint_array(n_samples)
        rows = stream.read_double_array(n_samples * dim).reshape(n_samples, dim)
    if labels.size and labels.max() >= n_classes:
        raise FormatError('{}: label {} out of range for {} classes'.format(filepath, labels.max(), n_classes))
    return FeatureMatrix(rows, labels, class_names)


class Standardizer(object):

    """
        Standardizer
        Per dimension shift and scale fitted on training rows.
        Dimensions with zero spread keep scale 1.
    """

    def __init__(self, mean : np.ndarray, scale : np.ndarray):
        self._mean = np.asarray(mean, dtype=np.float64)
        self._scale = np.asarray(scale, dtype=np.float64)
        if self._mean.shape != self._scale.shape or self._mean.ndim != 1:
            raise DimensionError('mean and scale must be vectors of the same length')

    @staticmethod
    def fit(rows : np.ndarray) -> 'Standardizer':
        rows = np.asarray(rows, dtype=np.float64)
        if rows.ndim != 2 or rows.shape[0] < 1:
            raise DimensionError('need at least one row to fit a standardizer')
        std = rows.std(axis=0)
        return Standardizer(rows.mean(axis=0), np.where(std > 0, std, 1.0))

    @property
    def mean(self) -> np.ndarray:
        return self._mean

    @property
    def scale(self) -> np.ndarray:
        return self._scale

    def transform(self, rows : np.ndarray) -> np.ndarray:
        rows = np.asarray(rows, dtype=np.float64)
        if rows.shape[-1] != self._mean.size:
            raise DimensionError('rows of dim {} for a standardizer of dim {}'.format(rows.shape[-1], self._mean.size))
        return (rows - self._mean) / self._scale
