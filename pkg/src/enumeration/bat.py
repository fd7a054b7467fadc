"""
Binary-addition-tree enumeration of state vectors

Vectors are produced by repeatedly adding one to a binary vector whose
lowest mutable coordinate is the least significant digit. In AON mode the
source and sink coordinates are pinned to 1 and never counted.
"""

from typing import Iterator, List, Optional

from src.network.model import Mode, StateVector
from src.utils.errors import StateError


class BatCursor:
    """
    Single-owner cursor over a contiguous range of BAT positions

    Only the current vector is kept; position p (0-based) holds the
    little-endian binary encoding of p over the mutable coordinates.
    """

    def __init__(self, mode, length: int, start: int = 0, stop: Optional[int] = None):
        """
        Initialize cursor

        Args:
            mode: Mode or 'aoa' / 'aon'
            length: Vector length (m for AOA, n for AON)
            start: First position to produce (0-based)
            stop: Position to stop before; defaults to the end of the tree
        """
        self.mode = Mode.parse(mode)
        if self.mode is Mode.AOA:
            if length < 1:
                raise StateError(f"AOA enumeration needs at least one arc, got {length}")
            self._first, self._last = 0, length - 1
        else:
            if length < 2:
                raise StateError(f"AON enumeration needs at least two nodes, got {length}")
            self._first, self._last = 1, length - 2

        self.length = length
        self.total = 1 << self.bits
        stop = self.total if stop is None else stop
        if not 0 <= start <= stop <= self.total:
            raise StateError(f"Invalid enumeration range [{start}, {stop}) of {self.total}")

        self.position = start
        self.stop = stop
        self.exhausted = start >= stop
        self._started = False
        self._current: List[int] = [0] * length
        if self.mode is Mode.AON:
            self._current[0] = self._current[-1] = 1
        for offset in range(self.bits):
            self._current[self._first + offset] = (start >> offset) & 1

    @property
    def bits(self) -> int:
        """Number of mutable coordinates"""
        return max(0, self._last - self._first + 1)

    @property
    def current(self) -> StateVector:
        return StateVector(self.mode, tuple(self._current))

    def _advance(self) -> None:
        k = self._first
        while k <= self._last:
            if self._current[k] == 0:
                self._current[k] = 1
                return
            self._current[k] = 0
            k += 1
        # carry out of the last mutable coordinate: tree exhausted

    def next_bits(self) -> Optional[List[int]]:
        """
        Advance and return the raw coordinate list, or None when exhausted

        The returned list is the cursor's own buffer and changes on the
        next call.
        """
        if self.exhausted:
            return None
        if self._started:
            self._advance()
        self._started = True
        self.position += 1
        if self.position >= self.stop:
            self.exhausted = True
        return self._current

    def __iter__(self) -> Iterator[StateVector]:
        return self

    def __next__(self) -> StateVector:
        bits = self.next_bits()
        if bits is None:
            raise StopIteration
        return StateVector(self.mode, tuple(bits))


def enumerate_aoa(m: int, start: int = 0, stop: Optional[int] = None) -> Iterator[StateVector]:
    """All 2^m arc-state vectors in BAT order, starting from all zeros"""
    if m < 1:
        raise StateError(f"AOA enumeration needs at least one arc, got {m}")
    return BatCursor(Mode.AOA, m, start, stop)


def enumerate_aon(n: int, start: int = 0, stop: Optional[int] = None) -> Iterator[StateVector]:
    """All 2^(n-2) node-state vectors in BAT order with both terminals at 1"""
    if n < 2:
        raise StateError(f"AON enumeration needs at least two nodes, got {n}")
    return BatCursor(Mode.AON, n, start, stop)


def partition(total: int, parts: int) -> List[range]:
    """Split positions 0..total-1 into at most `parts` contiguous ranges"""
    parts = max(1, min(parts, total))
    size, extra = divmod(total, parts)
    ranges, begin = [], 0
    for index in range(parts):
        end = begin + size + (1 if index < extra else 0)
        ranges.append(range(begin, end))
        begin = end
    return ranges
