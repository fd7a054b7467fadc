"""
Crude Monte Carlo estimate of two-terminal reliability
"""

import logging
import math
from dataclasses import dataclass
from multiprocessing import Pool
from typing import Dict, List, Tuple

import numpy as np

from src.connectivity.plsa import dfs_connected
from src.enumeration.bat import partition
from src.network.model import Mode, Network, StateDistribution, StateVector
from src.utils.errors import StateError

logger = logging.getLogger(__name__)

DEFAULT_CHUNK_SIZE = 100_000


@dataclass(frozen=True)
class McEstimate:
    estimate: float
    samples: int
    std_error: float
    seed: int

    def within(self, value: float, sigmas: float = 3.0) -> bool:
        """True when value lies within `sigmas` standard errors of the estimate"""
        return abs(self.estimate - value) <= sigmas * self.std_error


def _expand(network: Network, draws: np.ndarray) -> Tuple[int, ...]:
    bits = tuple(int(bit) for bit in draws)
    if network.mode is Mode.AON:
        return (1,) + bits + (1,)
    return bits


def _count_connected(network: Network, probabilities: np.ndarray, samples: int,
                     seed_sequence: np.random.SeedSequence, chunk_size: int) -> int:
    rng = np.random.default_rng(seed_sequence)
    width = len(probabilities)
    verdicts: Dict[Tuple[int, ...], bool] = {}
    connected = 0
    remaining = samples

    while remaining > 0:
        size = min(chunk_size, remaining)
        remaining -= size
        if width == 0:
            states = np.zeros((1, 0), dtype=np.uint8)
            counts = np.array([size])
        else:
            draws = (rng.random((size, width)) < probabilities).astype(np.uint8)
            states, counts = np.unique(draws, axis=0, return_counts=True)
        for state, count in zip(states, counts):
            key = tuple(int(bit) for bit in state)
            if key not in verdicts:
                vector = StateVector(network.mode, _expand(network, state))
                verdicts[key] = bool(dfs_connected(network, vector))
            if verdicts[key]:
                connected += int(count)

    logger.debug(f"Monte Carlo worker tested {len(verdicts)} distinct vectors")
    return connected


def _count_task(args) -> int:
    return _count_connected(*args)


def mc_reliability(network: Network, dist: StateDistribution, samples: int, seed: int = 0,
                   workers: int = 1, chunk_size: int = DEFAULT_CHUNK_SIZE) -> McEstimate:
    """
    Estimate reliability by sampling independent component states

    Args:
        network: Network to evaluate
        dist: Success probability per failure-prone component
        samples: Number of sampled state vectors (>= 1)
        seed: Root seed; worker w draws from SeedSequence(seed).spawn(...)[w]
        workers: Number of processes, each with its own stream
        chunk_size: Samples drawn per batch

    Returns:
        McEstimate with the connected fraction and its standard error
    """
    if samples < 1:
        raise StateError(f"Monte Carlo needs at least one sample, got {samples}")

    probabilities = dist.probabilities(network)
    if network.mode is Mode.AON:
        probabilities = probabilities[1:-1]
    probabilities = np.asarray(probabilities, dtype=float)

    shares = partition(samples, workers)
    streams = np.random.SeedSequence(seed).spawn(len(shares))
    tasks = [
        (network, probabilities, len(share), stream, chunk_size)
        for share, stream in zip(shares, streams)
    ]
    logger.info(f"Sampling {samples} vectors with seed {seed} over {len(tasks)} stream(s)")

    if len(tasks) == 1:
        counts: List[int] = [_count_task(tasks[0])]
    else:
        with Pool(processes=len(tasks)) as pool:
            counts = pool.map(_count_task, tasks)

    estimate = sum(counts) / samples
    return McEstimate(
        estimate=estimate,
        samples=samples,
        std_error=math.sqrt(estimate * (1.0 - estimate) / samples),
        seed=seed,
    )
