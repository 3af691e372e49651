#!/usr/bin/env python
"""Main entry point for running walksig from a source checkout."""

import sys

from walksig.main import main

if __name__ == "__main__":
    sys.exit(main())
