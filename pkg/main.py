"""Possibilist - Main Entry Point."""

import sys

from src.possibilist.cli import main

if __name__ == "__main__":
    sys.exit(main())
