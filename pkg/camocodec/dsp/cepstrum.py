"""
    MIT License

    Copyright (c) 2026 The camocodec authors

    Permission is hereby granted, free of charge, to any person obtaining a copy
    of this software, to deal in the Software without restriction, subject to
    the conditions stated in the LICENSE file distributed with this package.
"""

import logging
import typing
from dataclasses import dataclass, asdict, fields

import numpy as np
from scipy import fft

from .mel import mel_spectrogram
from .spectrogram import is_power_of_two
from ..core.errors import ConfigError, DimensionError


@dataclass(frozen=True)
class MfccConfig(object):

    """
        MfccConfig
        MFCC front end. The flat descriptor is truncated or zero padded to target_dim.
    """

    n_fft : int = 1024
    hop : int = 221
    n_mels : int = 26
    n_coeffs : int = 13
    target_dim : int = 1228
    fmin : float = 20.0
    fmax : typing.Optional[float] = None

    def validate(self) -> 'MfccConfig':
        if not is_power_of_two(self.n_fft):
            raise ConfigError('n_fft must be a power of two, got {}'.format(self.n_fft))
        if self.hop < 1:
            raise ConfigError('hop must be at least 1, got {}'.format(self.hop))
        if self.n_mels < 1 or not 1 <= self.n_coeffs <= self.n_mels:
            raise ConfigError('need 1 <= n_coeffs <= n_mels, got n_coeffs={} n_mels={}'.format(self.n_coeffs, self.n_mels))
        if self.target_dim < self.n_coeffs:
            raise ConfigError('target_dim {} is smaller than n_coeffs {}'.format(self.target_dim, self.n_coeffs))
        if self.fmin < 0 or (self.fmax is not None and self.fmax <= self.fmin):
            raise ConfigError('need 0 <= fmin < fmax, got fmin={} fmax={}'.format(self.fmin, self.fmax))
        return self

    def resolve_fmax(self, sample_rate : int) -> float:
        return sample_rate / 2 if self.fmax is None else self.fmax

    @staticmethod
    def from_dict(values : typing.Optional[dict]) -> 'MfccConfig':
        values = dict(values or {})
        known = {f.name for f in fields(MfccConfig)}
        unknown = set(values) - known
        if unknown:
            raise ConfigError('unknown mfcc options: {}'.format(sorted(unknown)))
        return MfccConfig(**values).validate()

    def to_dict(self) -> dict:
        return asdict(self)


class MfccDescriptor(object):

    """
        MfccDescriptor
        Fixed length cepstral descriptor of one clip
    """

    def __init__(self, values : np.ndarray, source_id : str = ''):
        self._values = np.asarray(values, dtype=np.float64).reshape(-1)
        self._source_id = source_id

    @property
    def values(self) -> np.ndarray:
        return self._values

    @property
    def source_id(self) -> str:
        return self._source_id

    def __len__(self):
        return self._values.size


def dct_ii(v : np.ndarray, axis : int = -1) -> np.ndarray:
    """
    Orthonormal DCT-II
    """
    v = np.asarray(v, dtype=np.float64)
    if v.size == 0 or v.shape[axis] == 0:
        raise DimensionError('DCT of an empty vector')
    return fft.dct(v, type=2, norm='ortho', axis=axis)


def dct_iii(v : np.ndarray, axis : int = -1) -> np.ndarray:
    """
    Orthonormal DCT-III, the inverse of dct_ii
    """
    v = np.asarray(v, dtype=np.float64)
    if v.size == 0 or v.shape[axis] == 0:
        raise DimensionError('DCT of an empty vector')
    return fft.idct(v, type=2, norm='ortho', axis=axis)


def fit_length(flat : np.ndarray, target_dim : int) -> np.ndarray:
    """
    Truncates or zero pads a vector to exactly target_dim values
    """
    out = np.zeros(target_dim)
    n = min(flat.size, target_dim)
    out[:n] = flat[:n]
    return out


def mfcc(clip, cfg : MfccConfig, source_id : str = '') -> MfccDescriptor:
    """
    MFCC descriptor of a clip: first n_coeffs cepstral coefficients of every frame,
    concatenated frame after frame and fitted to target_dim
    :param clip: AudioClip
    :param cfg: MfccConfig
    :param source_id: identifier of the sample the clip came from
    :return: MfccDescriptor
    """
    log_mel = mel_spectrogram(clip, cfg).values
    coeffs = dct_ii(log_mel, axis=1)[:, :cfg.n_coeffs]
    flat = coeffs.reshape(-1)
    if flat.size < cfg.target_dim:
        logging.debug('{}: padding {} coefficients to {}'.format(source_id or 'clip', flat.size, cfg.target_dim))
    return MfccDescriptor(fit_length(flat, cfg.target_dim), source_id)
