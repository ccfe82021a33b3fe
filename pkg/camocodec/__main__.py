"""
    MIT License

    Copyright (c) 2026 The camocodec authors

    Permission is hereby granted, free of charge, to any person obtaining a copy
    of this software, to deal in the Software without restriction, subject to
    the conditions stated in the LICENSE file distributed with this package.
"""

import sys

from .cli import main

sys.exit(main())
