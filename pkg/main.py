"""
Main entry point for relcalc
"""

import sys
import os

# Add repo root to path so `src` resolves when run from elsewhere
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from src.cli.commands import main

if __name__ == "__main__":
    main(prog_name="relcalc")
