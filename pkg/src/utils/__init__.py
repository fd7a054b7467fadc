"""
relcalc: exact binary-state network reliability with fuzzy preprocessing
"""

__version__ = "1.0.0"
