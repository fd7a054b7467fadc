"""
Exact two-terminal reliability by exhaustive state enumeration
"""

import logging
import math
from collections import Counter
from dataclasses import dataclass
from multiprocessing import Pool
from typing import List, Optional, Sequence, Tuple

from src.connectivity.plsa import Verdict, is_connected
from src.enumeration.bat import BatCursor, partition
from src.network.model import Mode, Network, StateDistribution, StateVector
from src.utils.errors import SizeLimitError, StateError

logger = logging.getLogger(__name__)

DEFAULT_MAX_BITS = 30


@dataclass(frozen=True)
class TraceRow:
    """One enumerated vector: 1-based BAT index, vector, Pr(X), verdict"""

    index: int
    vector: StateVector
    probability: float
    verdict: Verdict


@dataclass(frozen=True)
class ReliabilityReport:
    reliability: float
    total_vectors: int
    connected_vectors: int
    trace: Optional[Tuple[TraceRow, ...]] = None

    @property
    def disconnected_vectors(self) -> int:
        return self.total_vectors - self.connected_vectors


@dataclass(frozen=True)
class PartialSum:
    """Result of one enumeration range; merged across workers"""

    start: int
    reliability: float
    total_vectors: int
    connected_vectors: int
    trace: Optional[Tuple[TraceRow, ...]]


def _mutable_coordinates(network: Network) -> range:
    if network.mode is Mode.AOA:
        return range(0, network.m)
    return range(1, network.n - 1)


def _components_of(vector: StateVector) -> range:
    if vector.mode is Mode.AOA:
        return range(1, len(vector) + 1)
    return range(2, len(vector))


def coordinate_factors(vector: StateVector, dist: StateDistribution) -> Tuple[float, ...]:
    """Pr(x_k) for every mutable coordinate: p when the bit is 1, 1 - p otherwise"""
    return tuple(
        dist[k] if vector.state(k) else 1.0 - dist[k]
        for k in _components_of(vector)
    )


def vector_probability(vector: StateVector, dist: StateDistribution) -> float:
    """
    Occurrence probability Pr(X) under independent component states

    Args:
        vector: State vector
        dist: Success probability per component

    Returns:
        Product of the coordinate factors; AON terminals contribute 1
    """
    return math.prod(coordinate_factors(vector, dist))


def _sum_range(network: Network, probabilities: Sequence[float], start: int, stop: int,
               keep_trace: bool) -> PartialSum:
    mutable = _mutable_coordinates(network)
    up = list(probabilities)
    down = [1.0 - p for p in probabilities]
    cursor = BatCursor(network.mode, network.vector_length, start, stop)
    counts = Counter()
    rows: List[TraceRow] = []

    def connected_probabilities():
        index = start
        while True:
            bits = cursor.next_bits()
            if bits is None:
                return
            index += 1
            counts["total"] += 1
            connected = is_connected(network, bits)
            if connected or keep_trace:
                probability = math.prod(up[k] if bits[k] else down[k] for k in mutable)
            if keep_trace:
                rows.append(TraceRow(
                    index=index,
                    vector=StateVector(network.mode, tuple(bits)),
                    probability=probability,
                    verdict=Verdict.CONNECTED if connected else Verdict.DISCONNECTED,
                ))
            if connected:
                counts["connected"] += 1
                yield probability

    reliability = math.fsum(connected_probabilities())
    return PartialSum(
        start=start,
        reliability=reliability,
        total_vectors=counts["total"],
        connected_vectors=counts["connected"],
        trace=tuple(rows) if keep_trace else None,
    )


def _sum_range_task(args) -> PartialSum:
    return _sum_range(*args)


def exact_reliability(network: Network, dist: StateDistribution, trace: bool = False,
                      max_bits: int = DEFAULT_MAX_BITS, workers: int = 1) -> ReliabilityReport:
    """
    Sum Pr(X) over every connected state vector

    Args:
        network: Network to evaluate
        dist: Success probability per failure-prone component
        trace: Keep one TraceRow per vector
        max_bits: Refuse networks with more mutable coordinates than this
        workers: Number of processes over disjoint enumeration ranges

    Returns:
        ReliabilityReport
    """
    bits = network.mutable_bits
    if network.mode is Mode.AOA and bits < 1:
        raise StateError("AOA network has no arcs to enumerate")
    if bits > max_bits:
        raise SizeLimitError(bits, max_bits)

    probabilities = dist.probabilities(network)
    total = 1 << bits
    ranges = partition(total, workers)
    tasks = [(network, probabilities, r.start, r.stop, trace) for r in ranges]
    logger.info(
        f"Enumerating {total} {network.mode.value.upper()} vectors "
        f"over {len(ranges)} range(s)"
    )

    if len(tasks) == 1:
        partials = [_sum_range_task(tasks[0])]
    else:
        with Pool(processes=len(tasks)) as pool:
            partials = pool.map(_sum_range_task, tasks)

    partials.sort(key=lambda part: part.start)
    rows = None
    if trace:
        rows = tuple(row for part in partials for row in part.trace)

    report = ReliabilityReport(
        reliability=math.fsum(part.reliability for part in partials),
        total_vectors=sum(part.total_vectors for part in partials),
        connected_vectors=sum(part.connected_vectors for part in partials),
        trace=rows,
    )
    logger.info(
        f"R = {report.reliability:.6f} from {report.connected_vectors} connected "
        f"of {report.total_vectors} vectors"
    )
    return report
