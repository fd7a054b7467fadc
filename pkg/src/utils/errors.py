"""
Exception hierarchy for relcalc
"""

from typing import Optional


class RelcalcError(Exception):
    """Base class for every error raised by the engine"""


class NetworkError(RelcalcError, ValueError):
    """Invalid topology: self-loop, duplicate arc, endpoint out of range"""


class StateError(RelcalcError, ValueError):
    """State vector or state distribution inconsistent with the network"""


class FuzzyError(RelcalcError, ValueError):
    """Fuzzy arithmetic precondition violated"""


class SizeLimitError(RelcalcError):
    """Enumeration would exceed the configured coordinate cap"""

    def __init__(self, bits: int, limit: int):
        self.bits = bits
        self.limit = limit
        super().__init__(
            f"{bits} mutable coordinates exceed the limit of {limit} "
            f"(2^{bits} vectors); raise --max-bits to override"
        )


class ProblemSyntaxError(RelcalcError, ValueError):
    """Malformed line in a problem file"""

    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


class ProblemSemanticError(RelcalcError, ValueError):
    """Well-formed problem file whose content is inconsistent"""

    def __init__(self, message: str, component: Optional[int] = None):
        self.component = component
        if component is not None:
            message = f"component {component}: {message}"
        super().__init__(message)
