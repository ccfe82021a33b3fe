"""
    MIT License

    Copyright (c) 2026 The camocodec authors

    Permission is hereby granted, free of charge, to any person obtaining a copy
    of this software, to deal in the Software without restriction, subject to
    the conditions stated in the LICENSE file distributed with this package.
"""

import abc
import struct
import numpy as np
from enum import Enum


class ByteOrder(Enum):
    LITTLE_ENDIAN       = '<'
    BIG_ENDIAN          = '>'


class Format(Enum):
    BOOL                = '?'
    UNSIGNED_SHORT      = 'H'
    UNSIGNED_INT        = 'I'
    UNSIGNED_LONG       = 'Q'
    DOUBLE              = 'd'


class SizeOf(Enum):
    BOOL                = struct.calcsize('<' + Format.BOOL.value)
    UNSIGNED_SHORT      = struct.calcsize('<' + Format.UNSIGNED_SHORT.value)
    UNSIGNED_INT        = struct.calcsize('<' + Format.UNSIGNED_INT.value)
    UNSIGNED_LONG       = struct.calcsize('<' + Format.UNSIGNED_LONG.value)
    DOUBLE              = struct.calcsize('<' + Format.DOUBLE.value)


# numpy element kind and item size per array codec
_ARRAY_KINDS = {
    'short':  ('i2', np.int16),
    'uint':   ('u4', np.uint32),
    'ulong':  ('u8', np.uint64),
    'double': ('f8', np.float64),
}


class Stream(object):

    """
    Stream interface

    Typed read and write operations on top of a raw byte pipeline.
    All codecs of camocodec (WAV, CAMF, CAMN) are written against it.
    """

    def __init__(self, byte_order : ByteOrder = ByteOrder.LITTLE_ENDIAN):
        self._byte_order = byte_order

    @property
    def byte_order(self) -> ByteOrder:
        return self._byte_order

    @abc.abstractmethod
    def read(self, size) -> bytes:
        return

    @abc.abstractmethod
    def write(self, data : bytes, size : int):
        return

    def _pack(self, fmt : Format, value):
        data = struct.pack(self._byte_order.value + fmt.value, value)
        self.write(data, len(data))

    def _unpack(self, fmt : Format, size : SizeOf):
        data = self.read(size.value)
        return struct.unpack(self._byte_order.value + fmt.value, data)[0]

    def _dtype(self, name : str) -> np.dtype:
        return np.dtype(self._byte_order.value + _ARRAY_KINDS[name][0])

    def _write_array(self, name : str, values : np.ndarray):
        data = np.ascontiguousarray(values, dtype=self._dtype(name)).tobytes()
        self.write(data, len(data))

    def _read_array(self, name : str, size : int) -> np.ndarray:
        dtype = self._dtype(name)
        data = self.read(size * dtype.itemsize)
        return np.frombuffer(data, dtype, size).astype(_ARRAY_KINDS[name][1])

    """ Write operations """

    def write_bytes(self, value : bytes):
        self.write(value, len(value))

    def write_bool(self, value : bool):
        self._pack(Format.BOOL, value)

    def write_ushort(self, value : int):
        self._pack(Format.UNSIGNED_SHORT, value)

    def write_uint(self, value : int):
        self._pack(Format.UNSIGNED_INT, value)

    def write_ulong(self, value : int):
        self._pack(Format.UNSIGNED_LONG, value)

    def write_double(self, value : float):
        self._pack(Format.DOUBLE, value)

    def write_string(self, value : str):
        raw = value.encode("utf-8")
        self.write_ulong(len(raw))
        self.write(raw, len(raw))

    def write_short_array(self, values : np.ndarray):
        self._write_array('short', values)

    def write_uint_array(self, values : np.ndarray):
        self._write_array('uint', values)

    def write_ulong_array(self, values : np.ndarray):
        self._write_array('ulong', values)

    def write_double_array(self, values : np.ndarray):
        self._write_array('double', values)

    """ Read operations """

    def read_bytes(self, size : int) -> bytes:
        return self.read(size)

    def read_bool(self) -> bool:
        return self._unpack(Format.BOOL, SizeOf.BOOL)

    def read_ushort(self) -> int:
        return self._unpack(Format.UNSIGNED_SHORT, SizeOf.UNSIGNED_SHORT)

    def read_uint(self) -> int:
        return self._unpack(Format.UNSIGNED_INT, SizeOf.UNSIGNED_INT)

    def read_ulong(self) -> int:
        return self._unpack(Format.UNSIGNED_LONG, SizeOf.UNSIGNED_LONG)

    def read_double(self) -> float:
        return self._unpack(Format.DOUBLE, SizeOf.DOUBLE)

    def read_string(self) -> str:
        return self.read(self.read_ulong()).decode("utf-8")

    def read_short_array(self, size : int) -> np.ndarray:
        return self._read_array('short', size)

    def read_uint_array(self, size : int) -> np.ndarray:
        return self._read_array('uint', size)

    def read_ulong_array(self, size : int) -> np.ndarray:
        return self._read_array('ulong', size)

    def read_double_array(self, size : int) -> np.ndarray:
        return self._read_array('double', size)
