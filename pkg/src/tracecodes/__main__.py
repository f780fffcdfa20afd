"""``python -m tracecodes``."""

import sys

from .cli import main

sys.exit(main())
