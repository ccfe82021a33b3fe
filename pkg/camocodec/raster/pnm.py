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

from .raster_image import RasterImage, GrayImage
from ..core.errors import UnsupportedFormatError, UnsupportedMaxvalError, TruncatedDataError, FormatError

# magic number -> channel count
PNM_MAGIC = {
    b'P5': 1,
    b'P6': 3,
}
MAXVAL = 255
WHITESPACE = b' \t\n\r\v\f'


def _read_header_tokens(raw : bytes, count : int, filepath : str):
    """
    Collects count whitespace separated header tokens after the magic number.
    Comments start with '#' and run to the end of the line.
    Returns the tokens and the offset of the first payload byte.
    """
    tokens = []
    pos = 2
    n = len(raw)
    while len(tokens) < count:
        while pos < n and raw[pos] in WHITESPACE:
            pos += 1
        if raw[pos:pos + 1] == b'#':
            while pos < n and raw[pos:pos + 1] not in (b'\n', b'\r'):
                pos += 1
            continue
        start = pos
        while pos < n and raw[pos] not in WHITESPACE and raw[pos:pos + 1] != b'#':
            pos += 1
        if start == pos:
            raise TruncatedDataError('{}: header ends after {} of {} fields'.format(filepath, len(tokens), count))
        tokens.append(raw[start:pos])
    # exactly one whitespace byte separates header and payload
    if pos >= n or raw[pos] not in WHITESPACE:
        raise TruncatedDataError('{}: missing payload after header'.format(filepath))
    return tokens, pos + 1


def load_image(filepath : str) -> RasterImage:
    """
    Loads a binary PGM (P5) or PPM (P6) file with maxval 255
    :param filepath: path to the image
    :return: RasterImage
    """
    if not os.path.isfile(filepath):
        raise FileNotFoundError('image not found: {}'.format(filepath))
    with open(filepath, 'rb') as f:
        raw = f.read()

    magic = raw[:2]
    if magic not in PNM_MAGIC:
        raise UnsupportedFormatError('{}: unsupported magic number {!r}'.format(filepath, magic))
    channels = PNM_MAGIC[magic]

    tokens, offset = _read_header_tokens(raw, 3, filepath)
    try:
        width, height, maxval = (int(t) for t in tokens)
    except ValueError:
        raise FormatError('{}: non-numeric header field in {}'.format(filepath, tokens))
    if width < 1 or height < 1:
        raise FormatError('{}: invalid dimensions {}x{}'.format(filepath, width, height))
    if maxval != MAXVAL:
        raise UnsupportedMaxvalError('{}: maxval {} is not supported (only 255)'.format(filepath, maxval))

    expected = width * height * channels
    payload = raw[offset:offset + expected]
    if len(payload) < expected:
        raise TruncatedDataError('{}: payload has {} of {} bytes'.format(filepath, len(payload), expected))

    logging.debug('loaded {} ({}x{}, {} channels)'.format(filepath, width, height, channels))
    return RasterImage(width, height, channels, np.frombuffer(payload, dtype=np.uint8))


def _write_pnm(magic : bytes, width : int, height : int, data : np.ndarray, filepath : str):
    parent = os.path.dirname(os.path.abspath(filepath))
    os.makedirs(parent, exist_ok=True)
    header = magic + '\n{} {}\n{}\n'.format(width, height, MAXVAL).encode('ascii')
    with open(filepath, 'wb') as f:
        f.write(header)
        f.write(np.ascontiguousarray(data, dtype=np.uint8).tobytes())


def write_pgm(img : RasterImage, filepath : str):
    """
    Writes a single channel RasterImage as P5 with header "P5\\n<w> <h>\\n255\\n"
    """
    if img.channels != 1:
        raise UnsupportedFormatError('write_pgm needs a single channel image, got {}'.format(img.channels))
    _write_pnm(b'P5', img.width, img.height, img.data, filepath)


def write_ppm(img : RasterImage, filepath : str):
    """
    Writes a three channel RasterImage as P6
    """
    if img.channels != 3:
        raise UnsupportedFormatError('write_ppm needs a 3 channel image, got {}'.format(img.channels))
    _write_pnm(b'P6', img.width, img.height, img.data, filepath)


def gray_to_raster(img : GrayImage) -> RasterImage:
    """
    Quantizes intensities with round(v * 255)
    """
    quantized = np.clip(np.rint(img.values * 255.0), 0, 255).astype(np.uint8)
    return RasterImage(img.width, img.height, 1, quantized)


def write_gray_pgm(img : GrayImage, filepath : str):
    write_pgm(gray_to_raster(img), filepath)
