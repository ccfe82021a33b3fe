"""
    MIT License

    Copyright (c) 2026 The camocodec authors

    Permission is hereby granted, free of charge, to any person obtaining a copy
    of this software, to deal in the Software without restriction, subject to
    the conditions stated in the LICENSE file distributed with this package.
"""

import logging

import numpy as np

from .audio_clip import AudioClip
from ..core.errors import MagicMismatchError, UnsupportedFormatError, TruncatedDataError
from ..stream.file_stream import FileStream

PCM_FORMAT = 1
CHANNELS = 1
BITS_PER_SAMPLE = 16
BLOCK_ALIGN = CHANNELS * BITS_PER_SAMPLE // 8
FMT_CHUNK_SIZE = 16
FULL_SCALE = 32767


def quantize(samples : np.ndarray) -> np.ndarray:
    """
    Maps [-1,1] samples onto 16-bit integers, round(s * 32767) clamped to the int16 range
    """
    q = np.rint(np.asarray(samples, dtype=np.float64) * FULL_SCALE)
    return np.clip(q, -32768, 32767).astype(np.int16)


def dequantize(values : np.ndarray) -> np.ndarray:
    return np.clip(np.asarray(values, dtype=np.float64) / FULL_SCALE, -1.0, 1.0)


def write_wav(clip : AudioClip, filepath : str):
    """
    Writes a canonical 44 byte header PCM mono 16-bit WAV file
    :param clip: AudioClip
    :param filepath: target path
    """
    data = quantize(clip.samples)
    data_bytes = data.size * BLOCK_ALIGN
    with FileStream(filepath, 'wb') as stream:
        stream.write_bytes(b'RIFF')
        stream.write_uint(36 + data_bytes)
        stream.write_bytes(b'WAVE')
        stream.write_bytes(b'fmt ')
        stream.write_uint(FMT_CHUNK_SIZE)
        stream.write_ushort(PCM_FORMAT)
        stream.write_ushort(CHANNELS)
        stream.write_uint(clip.sample_rate)
        stream.write_uint(clip.sample_rate * BLOCK_ALIGN)
        stream.write_ushort(BLOCK_ALIGN)
        stream.write_ushort(BITS_PER_SAMPLE)
        stream.write_bytes(b'data')
        stream.write_uint(data_bytes)
        stream.write_short_array(data)
    logging.debug('wrote {} ({} samples)'.format(filepath, data.size))


def _read_fmt(stream : FileStream, size : int) -> int:
    if size < FMT_CHUNK_SIZE:
        raise UnsupportedFormatError('{}: fmt chunk of {} bytes'.format(stream.filepath, size))
    fmt_code = stream.read_ushort()
    channels = stream.read_ushort()
    sample_rate = stream.read_uint()
    stream.read_uint()      # byte rate
    stream.read_ushort()    # block align
    bits = stream.read_ushort()
    stream.skip(size - FMT_CHUNK_SIZE + (size & 1))
    if fmt_code != PCM_FORMAT:
        raise UnsupportedFormatError('{}: format code {} is not PCM'.format(stream.filepath, fmt_code))
    if channels != CHANNELS:
        raise UnsupportedFormatError('{}: {} channels, only mono is supported'.format(stream.filepath, channels))
    if bits != BITS_PER_SAMPLE:
        raise UnsupportedFormatError('{}: {} bit samples, only 16 bit is supported'.format(stream.filepath, bits))
    if sample_rate == 0:
        raise UnsupportedFormatError('{}: sample rate 0'.format(stream.filepath))
    return sample_rate


def read_wav(filepath : str) -> AudioClip:
    """
    Reads a PCM mono 16-bit WAV file, chunks other than fmt and data are skipped
    :param filepath: path of the WAV file
    :return: AudioClip with samples q / 32767
    """
    with FileStream(filepath, 'rb') as stream:
        try:
            riff = stream.read_bytes(4)
            stream.read_uint()
            wave = stream.read_bytes(4)
        except TruncatedDataError:
            raise MagicMismatchError('{}: too short for a RIFF header'.format(filepath))
        if riff != b'RIFF' or wave != b'WAVE':
            raise MagicMismatchError('{}: not a RIFF/WAVE file'.format(filepath))

        sample_rate = None
        while True:
            if stream.remaining() < 8:
                raise TruncatedDataError('{}: no data chunk found'.format(filepath))
            chunk_id = stream.read_bytes(4)
            size = stream.read_uint()
            if chunk_id == b'fmt ':
                sample_rate = _read_fmt(stream, size)
            elif chunk_id == b'data':
                if sample_rate is None:
                    raise UnsupportedFormatError('{}: data chunk before fmt chunk'.format(filepath))
                if size % BLOCK_ALIGN:
                    raise TruncatedDataError('{}: data chunk of {} bytes is not sample aligned'.format(filepath, size))
                values = stream.read_short_array(size // BLOCK_ALIGN)
                return AudioClip(sample_rate, dequantize(values))
            else:
                logging.debug('{}: skipping chunk {!r}'.format(filepath, chunk_id))
                stream.skip(size + (size & 1))
