"""
    MIT License

    Copyright (c) 2026 The camocodec authors

    Permission is hereby granted, free of charge, to any person obtaining a copy
    of this software, to deal in the Software without restriction, subject to
    the conditions stated in the LICENSE file distributed with this package.
"""

import logging
import math
import typing
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, asdict, fields

import numpy as np
from scipy import stats

from .audio_clip import AudioClip
from ..core.errors import ConfigError, DimensionError
from ..dsp import spectrogram
from ..raster.raster_image import GrayImage


@dataclass(frozen=True)
class EncodeConfig(object):

    """
        EncodeConfig
        Parameters of the image to audio camouflage.
        Image row r drives one sine oscillator, image column t one frame of audio.
    """

    rows : int = 128
    cols : int = 128
    frame_seconds : float = 0.010
    f_min : float = 200.0
    f_max : float = 8000.0
    sample_rate : int = 22050
    peak : float = 0.89

    def validate(self) -> 'EncodeConfig':
        if self.rows < 2 or self.cols < 1:
            raise ConfigError('encode grid must have rows >= 2 and cols >= 1, got {}x{}'.format(self.rows, self.cols))
        if self.frame_seconds <= 0:
            raise ConfigError('frame_seconds must be positive, got {}'.format(self.frame_seconds))
        if self.sample_rate <= 0:
            raise ConfigError('sample_rate must be positive, got {}'.format(self.sample_rate))
        if not 0 < self.f_min < self.f_max < self.sample_rate / 2:
            raise ConfigError('need 0 < f_min < f_max < sample_rate/2, got f_min={} f_max={} sample_rate={}'.format(
                self.f_min, self.f_max, self.sample_rate))
        if not 0 < self.peak <= 1:
            raise ConfigError('peak must lie in (0,1], got {}'.format(self.peak))
        if frame_samples(self) < 1:
            raise ConfigError('frame of {}s is shorter than one sample'.format(self.frame_seconds))
        return self

    @property
    def row_spacing_bins(self) -> float:
        """
        Distance of two adjacent oscillators in units of the frame's frequency resolution
        """
        spacing = (self.f_max - self.f_min) / (self.rows - 1)
        return spacing / (self.sample_rate / frame_samples(self))

    @staticmethod
    def from_dict(values : typing.Optional[dict]) -> 'EncodeConfig':
        values = dict(values or {})
        known = {f.name for f in fields(EncodeConfig)}
        unknown = set(values) - known
        if unknown:
            raise ConfigError('unknown encode options: {}'.format(sorted(unknown)))
        return EncodeConfig(**values).validate()

    def to_dict(self) -> dict:
        return asdict(self)


def frame_samples(cfg : EncodeConfig) -> int:
    """
    Samples per image column, frame_seconds * sample_rate rounded half up
    """
    return int(math.floor(cfg.frame_seconds * cfg.sample_rate + 0.5))


def row_frequencies(cfg : EncodeConfig) -> np.ndarray:
    """
    Oscillator frequency of every image row, row 0 (top) gets f_max
    :param cfg: EncodeConfig
    :return: strictly decreasing frequencies in Hz, length rows
    """
    step = (cfg.f_max - cfg.f_min) / (cfg.rows - 1)
    return cfg.f_max - np.arange(cfg.rows) * step


def _check_grid(img : GrayImage, cfg : EncodeConfig):
    if img.shape != (cfg.rows, cfg.cols):
        raise DimensionError('image is {}x{} but the encoder grid is {}x{} (rows x cols)'.format(
            img.height, img.width, cfg.rows, cfg.cols))


def synthesize(img : GrayImage, cfg : EncodeConfig) -> np.ndarray:
    """
    Additive synthesis before peak normalization.
    Each oscillator keeps its phase running across frame boundaries.
    """
    cfg.validate()
    _check_grid(img, cfg)
    n = frame_samples(cfg)
    omega = 2.0 * np.pi * row_frequencies(cfg) / cfg.sample_rate
    amplitudes = img.values / cfg.rows

    out = np.zeros(cfg.cols * n)
    tau = np.arange(n)
    for t in range(cfg.cols):
        column = amplitudes[:, t]
        if not column.any():
            continue
        phase = omega[:, None] * (tau + t * n)[None, :]
        out[t * n:(t + 1) * n] = column @ np.sin(phase)
    return out


def encode_image(img : GrayImage, cfg : EncodeConfig, seed : int = 0) -> AudioClip:
    """
    Camouflages a grayscale image as audio whose spectrogram shows the image.
    :param img: image already resized to cfg.rows x cfg.cols
    :param cfg: EncodeConfig
    :param seed: accepted for randomized phase variants, the default scheme ignores it
    :return: AudioClip with max |sample| == cfg.peak (or silence)
    """
    samples = synthesize(img, cfg)
    peak = np.max(np.abs(samples))
    if peak > 0:
        samples = samples * (cfg.peak / peak)
    return AudioClip(cfg.sample_rate, samples)


def encode_batch(images : typing.Sequence[GrayImage], cfg : EncodeConfig, seed : int = 0, workers : int = 1) -> typing.List[AudioClip]:
    """
    Encodes many images, results keep the input order
    """
    if workers <= 1:
        return [encode_image(img, cfg, seed) for img in images]
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(lambda img: encode_image(img, cfg, seed), images))


def decode_fft_size(frame : int) -> int:
    """
    Smallest power of two holding four frames, the zero padding keeps
    the nearest FFT bin close to every oscillator frequency
    """
    return 1 << int(math.ceil(math.log2(4 * frame)))


def decode_spectrogram(clip : AudioClip, cfg : EncodeConfig) -> GrayImage:
    """
    Reads the image back from the magnitude spectrogram of the clip
    :param clip: AudioClip
    :param cfg: EncodeConfig used for encoding
    :return: GrayImage of shape (rows, frames), min-max normalized
    """
    cfg.validate()
    n = frame_samples(cfg)
    if clip.n_samples < n:
        raise DimensionError('clip has {} samples, one frame needs {}'.format(clip.n_samples, n))
    if cfg.row_spacing_bins < 2.0:
        logging.warning('oscillator rows are {:.2f} analysis bins apart, the decoded spectrogram will blur'.format(
            cfg.row_spacing_bins))

    n_fft = decode_fft_size(n)
    spec = spectrogram.stft(clip, n_fft, n, win_length=n)
    bins = np.rint(row_frequencies(cfg) * n_fft / cfg.sample_rate).astype(np.int64)
    bins = np.clip(bins, 0, spec.n_bins - 1)
    magnitudes = spec.magnitudes[:, bins].T

    lo, hi = magnitudes.min(), magnitudes.max()
    if hi - lo <= 0:
        return GrayImage(np.zeros_like(magnitudes))
    return GrayImage(np.clip((magnitudes - lo) / (hi - lo), 0.0, 1.0))


def correlation(a : np.ndarray, b : np.ndarray) -> float:
    """
    Pearson correlation of two equally sized arrays, 0 when either side is constant
    """
    a = np.asarray(a, dtype=np.float64).reshape(-1)
    b = np.asarray(b, dtype=np.float64).reshape(-1)
    if a.size != b.size:
        raise DimensionError('cannot correlate {} with {} values'.format(a.size, b.size))
    if a.size < 2 or np.ptp(a) == 0 or np.ptp(b) == 0:
        return 0.0
    return float(stats.pearsonr(a, b)[0])


def roundtrip_fidelity(img : GrayImage, cfg : EncodeConfig, seed : int = 0) -> float:
    """
    Correlation between an image and the spectrogram decoded from its camouflage
    """
    _check_grid(img, cfg)
    decoded = decode_spectrogram(encode_image(img, cfg, seed), cfg)
    return correlation(img.values, decoded.values)
