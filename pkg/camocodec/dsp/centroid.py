"""
    MIT License

    Copyright (c) 2026 The camocodec authors

    Permission is hereby granted, free of charge, to any person obtaining a copy
    of this software, to deal in the Software without restriction, subject to
    the conditions stated in the LICENSE file distributed with this package.
"""

import numpy as np

from .spectrogram import Spectrogram
from ..core.errors import DimensionError


def spectral_centroid(frame_magnitudes : np.ndarray, bin_freqs : np.ndarray) -> float:
    """
    Magnitude weighted mean frequency of one spectrum frame, 0 for an empty frame
    """
    m = np.asarray(frame_magnitudes, dtype=np.float64)
    f = np.asarray(bin_freqs, dtype=np.float64)
    if m.shape != f.shape:
        raise DimensionError('{} magnitudes for {} frequencies'.format(m.size, f.size))
    if np.any(m < 0):
        raise ValueError('magnitudes must be non-negative')
    total = m.sum()
    if total == 0:
        return 0.0
    return float(np.dot(f, m) / total)


def centroid_track(spec : Spectrogram) -> np.ndarray:
    """
    Spectral centroid of every frame in Hz
    """
    freqs = spec.bin_frequencies()
    totals = spec.magnitudes.sum(axis=1)
    weighted = spec.magnitudes @ freqs
    out = np.zeros(spec.n_frames)
    nonzero = totals > 0
    out[nonzero] = weighted[nonzero] / totals[nonzero]
    return out
