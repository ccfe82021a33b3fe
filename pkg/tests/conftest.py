import os

import numpy as np
import pytest

from camocodec.raster.pnm import write_pgm
from camocodec.raster.raster_image import RasterImage
from camocodec.sonify.audio_clip import AudioClip
from camocodec.sonify.encoder import EncodeConfig


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


@pytest.fixture
def small_encode_cfg():
    # 32 rows over 200..8000 Hz are 2.5 analysis bins apart
    return EncodeConfig(rows=32, cols=64)


def sine_clip(freq, n_samples, sample_rate=22050, amplitude=0.5):
    t = np.arange(n_samples) / sample_rate
    return AudioClip(sample_rate, amplitude * np.sin(2.0 * np.pi * freq * t))


def write_gray_file(path, values):
    """
    Writes a (h, w) uint8 array as P5
    """
    values = np.asarray(values, dtype=np.uint8)
    write_pgm(RasterImage(values.shape[1], values.shape[0], 1, values), str(path))
    return str(path)


@pytest.fixture
def toy_manifest(tmp_path):
    """
    6 images, 3 labels, 2 train + 0/1 val each in a fixed interleaved order
    """
    rows = [
        ('a/a0.pgm', 'army_base', 'train'),
        ('b/b0.pgm', 'bamboo_forest', 'train'),
        ('c/c0.pgm', 'desert_road', 'val'),
        ('a/a1.pgm', 'army_base', 'val'),
        ('b/b1.pgm', 'bamboo_forest', 'train'),
        ('c/c1.pgm', 'desert_road', 'train'),
    ]
    gen = np.random.default_rng(7)
    for path, _, _ in rows:
        write_gray_file(tmp_path / path, gen.integers(0, 256, size=(12, 16)))
    manifest = tmp_path / 'manifest.csv'
    with open(manifest, 'w') as f:
        f.write('path,label,split\n')
        for row in rows:
            f.write(','.join(row) + '\n')
    return str(manifest)


def file_bytes(path):
    with open(path, 'rb') as f:
        return f.read()


def listing(root):
    out = []
    for folder, _, files in os.walk(root):
        out += [os.path.relpath(os.path.join(folder, name), root) for name in files]
    return sorted(out)
