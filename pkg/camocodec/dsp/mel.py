"""
    MIT License

    Copyright (c) 2026 The camocodec authors

    Permission is hereby granted, free of charge, to any person obtaining a copy
    of this software, to deal in the Software without restriction, subject to
    the conditions stated in the LICENSE file distributed with this package.
"""

import logging

import numpy as np

from .spectrogram import stft
from ..core.errors import ConfigError

# power floor applied before the logarithm, 10*log10(1e-10) = -100 dB
POWER_FLOOR = 1e-10


def mel(f):
    """
    HTK mel scale, 2595 * log10(1 + f/700)
    """
    f = np.asarray(f, dtype=np.float64)
    if np.any(f < 0):
        raise ValueError('frequency must be non-negative')
    m = 2595.0 * np.log10(1.0 + f / 700.0)
    return float(m) if m.ndim == 0 else m


def mel_inv(m):
    m = np.asarray(m, dtype=np.float64)
    if np.any(m < 0):
        raise ValueError('mel value must be non-negative')
    f = 700.0 * (10.0 ** (m / 2595.0) - 1.0)
    return float(f) if f.ndim == 0 else f


def mel_filterbank(n_mels : int, n_fft : int, sample_rate : int, fmin : float, fmax : float) -> np.ndarray:
    """
    Triangular filters on n_mels+2 mel-equidistant edge points
    :return: weight matrix of shape (n_mels, n_fft/2 + 1)
    """
    if n_mels < 1:
        raise ConfigError('n_mels must be at least 1, got {}'.format(n_mels))
    if not 0 <= fmin < fmax <= sample_rate / 2:
        raise ConfigError('need 0 <= fmin < fmax <= sample_rate/2, got fmin={} fmax={} sample_rate={}'.format(
            fmin, fmax, sample_rate))

    edges = mel_inv(np.linspace(mel(fmin), mel(fmax), n_mels + 2))
    freqs = np.arange(n_fft // 2 + 1) * (sample_rate / n_fft)

    lower = edges[:-2, None]
    center = edges[1:-1, None]
    upper = edges[2:, None]
    rising = (freqs[None, :] - lower) / (center - lower)
    falling = (upper - freqs[None, :]) / (upper - center)
    weights = np.maximum(0.0, np.minimum(rising, falling))

    empty = np.flatnonzero(weights.sum(axis=1) == 0)
    if empty.size:
        logging.warning('mel filters {} cover no FFT bin (n_fft={} too small)'.format(empty.tolist(), n_fft))
    return weights


class MelSpectrogram(object):

    """
        MelSpectrogram
        Log power (dB) of mel filterbank energies, shaped (n_frames, n_mels)
    """

    def __init__(self, values : np.ndarray):
        values = np.asarray(values, dtype=np.float64)
        if values.ndim != 2 or not np.all(np.isfinite(values)):
            raise ValueError('mel spectrogram needs a finite 2-D array')
        self._values = values

    @property
    def values(self) -> np.ndarray:
        return self._values

    @property
    def n_frames(self) -> int:
        return self._values.shape[0]

    @property
    def n_mels(self) -> int:
        return self._values.shape[1]

    def to_gray(self):
        """
        Min-max normalized image with time along x and the highest mel band on the top row
        """
        from ..raster.raster_image import GrayImage

        img = self._values.T[::-1, :]
        lo, hi = img.min(), img.max()
        if hi - lo <= 0:
            return GrayImage(np.zeros_like(img))
        return GrayImage(np.clip((img - lo) / (hi - lo), 0.0, 1.0))


def power_to_db(power : np.ndarray) -> np.ndarray:
    return 10.0 * np.log10(np.maximum(power, POWER_FLOOR))


def mel_spectrogram(clip, cfg) -> MelSpectrogram:
    """
    Mel spectrogram of a clip
    :param clip: AudioClip
    :param cfg: MfccConfig
    :return: MelSpectrogram in dB
    """
    cfg.validate()
    spec = stft(clip, cfg.n_fft, cfg.hop)
    bank = mel_filterbank(cfg.n_mels, cfg.n_fft, clip.sample_rate, cfg.fmin, cfg.resolve_fmax(clip.sample_rate))
    return MelSpectrogram(power_to_db(spec.power() @ bank.T))
