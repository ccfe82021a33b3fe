"""
    MIT License

    Copyright (c) 2026 The camocodec authors

    Permission is hereby granted, free of charge, to any person obtaining a copy
    of this software, to deal in the Software without restriction, subject to
    the conditions stated in the LICENSE file distributed with this package.
"""


class CamoError(Exception):

    """
        Base class of all errors raised by camocodec
    """


class FormatError(CamoError, ValueError):
    """Malformed file content"""


class UnsupportedFormatError(FormatError):
    """Valid container but a variant we do not read (magic, codec, depth, channels)"""


class TruncatedDataError(FormatError):
    """File ends before the declared payload"""


class MagicMismatchError(FormatError):
    """File does not start with the expected magic bytes"""


class ConfigError(CamoError, ValueError):
    """Configuration value out of range"""


class DimensionError(CamoError, ValueError):
    """Shapes of two inputs do not agree"""


class ManifestError(CamoError, ValueError):

    """
        Manifest row could not be parsed or processed.
        Carries the 1-based line number of the offending row.
    """

    def __init__(self, message : str, line : int = None):
        if line is not None:
            message = 'line {}: {}'.format(line, message)
        super().__init__(message)
        self.line = line


class ArtifactError(CamoError, FileNotFoundError):
    """A pipeline artifact required by a stage is missing"""


class MetricError(CamoError, ValueError):
    """Metric undefined for the given input"""


class UnsupportedMaxvalError(FormatError):
    """PNM maxval other than 255"""
