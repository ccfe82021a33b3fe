"""
    MIT License

    Copyright (c) 2026 The camocodec authors

    Permission is hereby granted, free of charge, to any person obtaining a copy
    of this software, to deal in the Software without restriction, subject to
    the conditions stated in the LICENSE file distributed with this package.
"""

import logging
import os

import numpy as np

from .manifest import Manifest, ManifestEntry, save_manifest
from ..core.errors import ConfigError
from ..core.messages import Split
from ..raster.pnm import write_pgm
from ..raster.raster_image import RasterImage

TEXTURE_CLASSES = ['horizontal_bands', 'vertical_bands', 'diagonal_bands']
MANIFEST_NAME = 'manifest.csv'

# band period and phase ranges, additive noise level
PERIOD_RANGE = (9.0, 11.0)
PHASE_RANGE = (0.0, np.pi / 4.0)
NOISE_STD = 0.05


def band_texture(kind : str, size : int, rng : np.random.Generator) -> np.ndarray:
    """
    Sinusoidal band pattern with random period and phase plus gaussian noise, values in [0,1]
    """
    y, x = np.mgrid[0:size, 0:size].astype(np.float64)
    coordinate = {
        'horizontal_bands': y,
        'vertical_bands': x,
        'diagonal_bands': (x + y) / np.sqrt(2.0)
    }[kind]
    period = rng.uniform(*PERIOD_RANGE)
    phase = rng.uniform(*PHASE_RANGE)
    values = 0.5 + 0.5 * np.sin(2.0 * np.pi * coordinate / period + phase)
    values += rng.normal(0.0, NOISE_STD, size=values.shape)
    return np.clip(values, 0.0, 1.0)


def generate_textures(out_dir : str, n_train : int = 60, n_val : int = 20, size : int = 64, seed : int = 0) -> str:
    """
    Writes three band-structured texture classes as P5 images plus a manifest
    :param out_dir: target directory, images go to <class>/<class>_<split>_<i>.pgm
    :param n_train: training images per class
    :param n_val: validation images per class
    :param size: image side in pixels
    :param seed: generator seed
    :return: path of the written manifest.csv
    """
    if n_train < 0 or n_val < 0 or size < 2:
        raise ConfigError('need n_train, n_val >= 0 and size >= 2, got {}, {}, {}'.format(n_train, n_val, size))

    rng = np.random.default_rng(seed)
    entries = []
    for label in TEXTURE_CLASSES:
        for split, count in ((Split.TRAIN, n_train), (Split.VAL, n_val)):
            for i in range(count):
                relpath = '{0}/{0}_{1}_{2:03d}.pgm'.format(label, split.value, i)
                pixels = np.rint(band_texture(label, size, rng) * 255.0).astype(np.uint8)
                write_pgm(RasterImage(size, size, 1, pixels), os.path.join(out_dir, relpath))
                entries.append(ManifestEntry(relpath, label, split))

    manifest_path = os.path.join(out_dir, MANIFEST_NAME)
    save_manifest(Manifest(entries), manifest_path)
    logging.info('generated {} texture images in {}'.format(len(entries), out_dir))
    return manifest_path
