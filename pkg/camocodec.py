"""
    MIT License

    Copyright (c) 2026 The camocodec authors

    Permission is hereby granted, free of charge, to any person obtaining a copy
    of this software, to deal in the Software without restriction, subject to
    the conditions stated in the LICENSE file distributed with this package.
"""

from camocodec.cli import main
import sys


if __name__ == '__main__':
    if sys.version_info < (3, 8):
        print("Using Python 3.8 or newer is highly recommended.")

    sys.exit(main())
