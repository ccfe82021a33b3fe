"""
    MIT License

    Copyright (c) 2026 The camocodec authors

    Permission is hereby granted, free of charge, to any person obtaining a copy
    of this software, to deal in the Software without restriction, subject to
    the conditions stated in the LICENSE file distributed with this package.
"""

import numpy as np


class RasterImage(object):

    """
        RasterImage
        8-bit raster as read from a PGM (1 channel) or PPM (3 channels) file.
        Pixels are held as a (height, width, channels) uint8 array.
    """

    def __init__(self, width : int, height : int, channels : int, data):
        if width < 1 or height < 1:
            raise ValueError('image dimensions must be positive, got {}x{}'.format(width, height))
        if channels not in (1, 3):
            raise ValueError('channels must be 1 or 3, got {}'.format(channels))
        flat = np.asarray(data, dtype=np.uint8).reshape(-1)
        if flat.size != width * height * channels:
            raise ValueError('data length {} != {}x{}x{}'.format(flat.size, width, height, channels))
        self._width = int(width)
        self._height = int(height)
        self._channels = int(channels)
        self._pixels = flat.reshape(self._height, self._width, self._channels)

    @property
    def width(self) -> int:
        return self._width

    @property
    def height(self) -> int:
        return self._height

    @property
    def channels(self) -> int:
        return self._channels

    @property
    def pixels(self) -> np.ndarray:
        """
        Returns the (height, width, channels) pixel array
        """
        return self._pixels

    @property
    def data(self) -> np.ndarray:
        """
        Returns the row-major intensity bytes
        """
        return self._pixels.reshape(-1)

    def to_string(self) -> str:
        return 'RasterImage {}x{} channels={}'.format(self._width, self._height, self._channels)


class GrayImage(object):

    """
        GrayImage
        Single channel image with real intensities in [0,1],
        stored as a (height, width) float64 array.
    """

    def __init__(self, values):
        values = np.array(values, dtype=np.float64, copy=True)
        if values.ndim != 2:
            raise ValueError('GrayImage needs a 2-D array, got shape {}'.format(values.shape))
        if values.shape[0] < 1 or values.shape[1] < 1:
            raise ValueError('image dimensions must be positive, got {}'.format(values.shape))
        if not np.all(np.isfinite(values)) or values.min() < 0.0 or values.max() > 1.0:
            raise ValueError('GrayImage values must lie in [0,1]')
        values.setflags(write=False)
        self._values = values

    @staticmethod
    def zeros(height : int, width : int) -> 'GrayImage':
        return GrayImage(np.zeros((height, width)))

    @property
    def width(self) -> int:
        return self._values.shape[1]

    @property
    def height(self) -> int:
        return self._values.shape[0]

    @property
    def shape(self):
        return self._values.shape

    @property
    def values(self) -> np.ndarray:
        """
        Returns the read-only (height, width) intensity array
        """
        return self._values

    @property
    def data(self) -> np.ndarray:
        """
        Returns the row-major intensities
        """
        return self._values.reshape(-1)

    def to_string(self) -> str:
        return 'GrayImage {}x{}'.format(self.width, self.height)
