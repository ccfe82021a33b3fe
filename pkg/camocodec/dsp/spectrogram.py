"""
    MIT License

    Copyright (c) 2026 The camocodec authors

    Permission is hereby granted, free of charge, to any person obtaining a copy
    of this software, to deal in the Software without restriction, subject to
    the conditions stated in the LICENSE file distributed with this package.
"""

import typing

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view
from scipy import fft, signal

from ..core.errors import ConfigError, DimensionError
from ..sonify.audio_clip import AudioClip


def is_power_of_two(n : int) -> bool:
    return n >= 1 and (n & (n - 1)) == 0


class Spectrogram(object):

    """
        Spectrogram
        Magnitudes of the one-sided short time Fourier transform,
        shaped (n_frames, n_bins) with n_bins = n_fft/2 + 1
    """

    def __init__(self, magnitudes : np.ndarray, sample_rate : int, hop : int, n_fft : int):
        magnitudes = np.asarray(magnitudes, dtype=np.float64)
        if magnitudes.ndim != 2 or magnitudes.shape[1] != n_fft // 2 + 1:
            raise DimensionError('magnitudes of shape {} do not match n_fft={}'.format(magnitudes.shape, n_fft))
        if np.any(magnitudes < 0):
            raise ValueError('magnitudes must be non-negative')
        self._magnitudes = magnitudes
        self._sample_rate = sample_rate
        self._hop = hop
        self._n_fft = n_fft

    @property
    def magnitudes(self) -> np.ndarray:
        return self._magnitudes

    @property
    def n_frames(self) -> int:
        return self._magnitudes.shape[0]

    @property
    def n_bins(self) -> int:
        return self._magnitudes.shape[1]

    @property
    def sample_rate(self) -> int:
        return self._sample_rate

    @property
    def hop(self) -> int:
        return self._hop

    @property
    def n_fft(self) -> int:
        return self._n_fft

    def bin_frequencies(self) -> np.ndarray:
        """
        Returns the center frequency of every bin in Hz
        """
        return np.arange(self.n_bins) * (self._sample_rate / self._n_fft)

    def power(self) -> np.ndarray:
        return self._magnitudes ** 2


def hann_window(win_length : int, n_fft : int) -> np.ndarray:
    """
    Periodic Hann window of win_length samples, zero padded to n_fft
    """
    window = np.zeros(n_fft)
    window[:win_length] = signal.get_window('hann', win_length)
    return window


def frame_signal(samples : np.ndarray, n_fft : int, hop : int) -> np.ndarray:
    """
    Cuts samples into frames of n_fft starting at multiples of hop.
    The tail is zero padded so the last frame starts at ((len-1)//hop)*hop.
    """
    n_frames = (samples.size - 1) // hop + 1
    padded = np.zeros((n_frames - 1) * hop + n_fft)
    padded[:samples.size] = samples[:padded.size]
    return sliding_window_view(padded, n_fft)[::hop][:n_frames]


def stft(clip : AudioClip, n_fft : int, hop : int, win_length : typing.Optional[int] = None) -> Spectrogram:
    """
    Magnitude short time Fourier transform with a Hann window
    :param clip: AudioClip
    :param n_fft: FFT size, power of two
    :param hop: frame advance in samples
    :param win_length: window length, defaults to n_fft
    :return: Spectrogram with floor((len-1)/hop)+1 frames
    """
    if not is_power_of_two(n_fft):
        raise ConfigError('n_fft must be a power of two, got {}'.format(n_fft))
    if hop < 1:
        raise ConfigError('hop must be at least 1, got {}'.format(hop))
    win_length = n_fft if win_length is None else win_length
    if not 1 <= win_length <= n_fft:
        raise ConfigError('win_length must lie in [1, n_fft], got {}'.format(win_length))
    if clip.n_samples == 0:
        raise DimensionError('cannot analyse an empty clip')

    frames = frame_signal(clip.samples, n_fft, hop) * hann_window(win_length, n_fft)
    magnitudes = np.abs(fft.rfft(frames, n=n_fft, axis=1))
    return Spectrogram(magnitudes, clip.sample_rate, hop, n_fft)
