"""The main entry point for `python -m perfect_forests`."""

import sys

from perfect_forests.cli import main

sys.exit(main())
