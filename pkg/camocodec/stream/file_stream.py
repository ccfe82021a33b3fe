"""
    MIT License

    Copyright (c) 2026 The camocodec authors

    Permission is hereby granted, free of charge, to any person obtaining a copy
    of this software, to deal in the Software without restriction, subject to
    the conditions stated in the LICENSE file distributed with this package.
"""

from .stream import Stream, ByteOrder
from ..core.errors import TruncatedDataError
import logging
import os
import typing


class FileStream(Stream):
    """
    File Stream inherits from Stream

    Handles the file path and the open file object.
    Handles read and write from a binary file, usable as a context manager.
    """

    def __init__(self, filepath : str, mode : str = 'rb', byte_order : ByteOrder = ByteOrder.LITTLE_ENDIAN):
        Stream.__init__(self, byte_order)
        if mode not in ('rb', 'wb'):
            raise ValueError('FileStream mode must be rb or wb, got {}'.format(mode))
        self._filepath = filepath
        self._mode = mode
        self._file = None

    @property
    def filepath(self) -> str:
        """
        Returns the path of the underlying file
        """
        return self._filepath

    def open(self):
        """
        Opens the file, creating the parent directory when writing
        """
        if self._mode == 'wb':
            parent = os.path.dirname(os.path.abspath(self._filepath))
            os.makedirs(parent, exist_ok=True)
        self._file = open(self._filepath, self._mode)
        return self

    def close(self):
        if self._file is not None:
            self._file.close()
            self._file = None

    def __enter__(self):
        return self.open()

    def __exit__(self, exc_type, exc_value, traceback):
        self.close()
        return False

    def remaining(self) -> int:
        """
        Number of bytes left between the current position and the end of file
        """
        pos = self._file.tell()
        end = os.fstat(self._file.fileno()).st_size
        return end - pos

    def skip(self, size : int):
        if size > self.remaining():
            raise TruncatedDataError('{}: cannot skip {} bytes, only {} left'.format(
                self._filepath, size, self.remaining()))
        self._file.seek(size, os.SEEK_CUR)

    def read(self, size : int) -> bytes:
        """
        Reads exactly size bytes from the file
        """
        data = self._file.read(size)
        if len(data) < size:
            logging.error('{}: expected {} bytes, got {}'.format(self._filepath, size, len(data)))
            raise TruncatedDataError('{}: truncated, expected {} more bytes but found {}'.format(
                self._filepath, size, len(data)))
        return data

    def write(self, data : bytes, size : typing.Optional[int] = None):
        """
        Writes data into the file
        """
        size = len(data) if size is None else size
        written = self._file.write(data[:size])
        if written != size:
            raise OSError('{}: short write ({} of {} bytes)'.format(self._filepath, written, size))
