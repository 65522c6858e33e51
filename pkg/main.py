#!/usr/bin/env python3
"""
Entry point for StabiLens.
"""

import sys

from stabilens.cli import main

if __name__ == "__main__":
    sys.exit(main())
