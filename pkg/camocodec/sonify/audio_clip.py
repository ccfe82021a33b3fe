"""
    MIT License

    Copyright (c) 2026 The camocodec authors

    Permission is hereby granted, free of charge, to any person obtaining a copy
    of this software, to deal in the Software without restriction, subject to
    the conditions stated in the LICENSE file distributed with this package.
"""

import numpy as np


class AudioClip(object):

    """
        AudioClip
        Mono audio signal, samples are float64 values in [-1,1]
    """

    def __init__(self, sample_rate : int, samples):
        if int(sample_rate) != sample_rate or sample_rate <= 0:
            raise ValueError('sample rate must be a positive integer, got {}'.format(sample_rate))
        samples = np.array(samples, dtype=np.float64, copy=True).reshape(-1)
        if not np.all(np.isfinite(samples)) or (samples.size > 0 and np.max(np.abs(samples)) > 1.0):
            raise ValueError('samples must be finite and lie in [-1,1]')
        samples.setflags(write=False)
        self._sample_rate = int(sample_rate)
        self._samples = samples

    @property
    def sample_rate(self) -> int:
        return self._sample_rate

    @property
    def samples(self) -> np.ndarray:
        """
        Returns the read-only sample array
        """
        return self._samples

    @property
    def n_samples(self) -> int:
        return self._samples.size

    @property
    def duration(self) -> float:
        """
        Returns the clip length in seconds
        """
        return self._samples.size / self._sample_rate

    def scaled(self, factor : float) -> 'AudioClip':
        return AudioClip(self._sample_rate, self._samples * factor)

    def to_string(self) -> str:
        return 'AudioClip {} samples @ {} Hz ({:.3f}s)'.format(self.n_samples, self._sample_rate, self.duration)
