"""
    MIT License

    Copyright (c) 2026 The camocodec authors

    Permission is hereby granted, free of charge, to any person obtaining a copy
    of this software, to deal in the Software without restriction, subject to
    the conditions stated in the LICENSE file distributed with this package.
"""

import numpy as np

from .raster_image import RasterImage, GrayImage
from ..core.errors import DimensionError

# ITU-R BT.601 luma weights
LUMA_WEIGHTS = np.array([0.299, 0.587, 0.114])


def to_grayscale(img : RasterImage) -> GrayImage:
    """
    Converts an 8-bit raster into normalized intensities.
    RGB pixels are weighted with the BT.601 luma coefficients.
    """
    pixels = img.pixels.astype(np.float64)
    if img.channels == 3:
        luma = pixels @ LUMA_WEIGHTS
    else:
        luma = pixels[:, :, 0]
    # the weighted sum of a white pixel can land one ulp above 255
    return GrayImage(np.clip(luma / 255.0, 0.0, 1.0))


def _sample_positions(n_in : int, n_out : int):
    """
    Corner aligned source coordinates: output 0 maps to input 0, output n_out-1 to input n_in-1
    """
    if n_out == 1 or n_in == 1:
        pos = np.zeros(n_out)
    else:
        pos = np.arange(n_out) * ((n_in - 1) / (n_out - 1))
    lo = np.minimum(np.floor(pos).astype(np.int64), n_in - 1)
    hi = np.minimum(lo + 1, n_in - 1)
    frac = pos - lo
    return lo, hi, frac


def resize_bilinear(img : GrayImage, out_h : int, out_w : int) -> GrayImage:
    """
    Bilinear resize with corner aligned sampling
    :param img: source image
    :param out_h: target height
    :param out_w: target width
    :return: GrayImage of shape (out_h, out_w)
    """
    if out_h < 1 or out_w < 1:
        raise DimensionError('target size must be positive, got {}x{}'.format(out_h, out_w))
    src = img.values
    if src.shape == (out_h, out_w):
        return GrayImage(src)

    y0, y1, wy = _sample_positions(src.shape[0], out_h)
    x0, x1, wx = _sample_positions(src.shape[1], out_w)

    rows = src[y0, :] * (1.0 - wy)[:, None] + src[y1, :] * wy[:, None]
    out = rows[:, x0] * (1.0 - wx)[None, :] + rows[:, x1] * wx[None, :]
    return GrayImage(np.clip(out, src.min(), src.max()))
