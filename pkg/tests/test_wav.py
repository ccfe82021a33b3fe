import os
import struct

import numpy as np
import pytest

from camocodec.core.errors import MagicMismatchError, TruncatedDataError, UnsupportedFormatError
from camocodec.sonify.audio_clip import AudioClip
from camocodec.sonify.wav import quantize, read_wav, write_wav

from conftest import file_bytes


def fmt_chunk(fmt_code=1, channels=1, rate=8000, bits=16):
    block = channels * bits // 8
    return b'fmt ' + struct.pack('<IHHIIHH', 16, fmt_code, channels, rate, rate * block, block, bits)


def riff(*chunks):
    body = b'WAVE' + b''.join(chunks)
    return b'RIFF' + struct.pack('<I', len(body)) + body


def write_raw(path, data):
    with open(path, 'wb') as f:
        f.write(data)
    return str(path)


def test_one_second_silence_size(tmp_path):
    path = str(tmp_path / 'silence.wav')
    write_wav(AudioClip(22050, np.zeros(22050)), path)
    assert os.path.getsize(path) == 44144
    header = file_bytes(path)[:44]
    assert header[:4] == b'RIFF' and header[8:16] == b'WAVEfmt '
    assert struct.unpack('<I', header[40:44])[0] == 44100


def test_full_scale():
    assert quantize(np.array([1.0, -1.0, 0.0])).tolist() == [32767, -32767, 0]


def test_roundtrip_error_bound(tmp_path, rng):
    clip = AudioClip(16000, rng.uniform(-1.0, 1.0, size=1000))
    path = str(tmp_path / 'r.wav')
    write_wav(clip, path)
    back = read_wav(path)
    assert back.sample_rate == 16000
    assert np.max(np.abs(back.samples - clip.samples)) <= 1.0 / 32767
    np.testing.assert_array_equal(quantize(back.samples), quantize(clip.samples))


def test_unknown_chunks_are_skipped(tmp_path):
    data = b'data' + struct.pack('<I', 4) + struct.pack('<hh', 100, -100)
    odd = b'LIST' + struct.pack('<I', 3) + b'abc\x00'
    path = write_raw(tmp_path / 'x.wav', riff(fmt_chunk(), odd, data))
    clip = read_wav(path)
    assert clip.sample_rate == 8000
    np.testing.assert_allclose(clip.samples, [100 / 32767, -100 / 32767])


@pytest.mark.parametrize('chunk', [
    fmt_chunk(fmt_code=3),
    fmt_chunk(channels=2),
    fmt_chunk(bits=8),
])
def test_unsupported_variants(tmp_path, chunk):
    data = b'data' + struct.pack('<I', 4) + b'\x00' * 4
    path = write_raw(tmp_path / 'u.wav', riff(chunk, data))
    with pytest.raises(UnsupportedFormatError):
        read_wav(path)


def test_bad_magic_and_truncation(tmp_path):
    with pytest.raises(MagicMismatchError):
        read_wav(write_raw(tmp_path / 'm.wav', b'RIFX' + b'\x00' * 40))
    short = b'data' + struct.pack('<I', 8) + b'\x00' * 4
    with pytest.raises(TruncatedDataError):
        read_wav(write_raw(tmp_path / 't.wav', riff(fmt_chunk(), short)))
    with pytest.raises(TruncatedDataError):
        read_wav(write_raw(tmp_path / 'n.wav', riff(fmt_chunk())))
