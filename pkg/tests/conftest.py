"""
Shared fixtures: the five-node AOA bridge, the eight-node AON three-chain
network with its resolved distribution, and a random network factory.
"""

import os

import numpy as np
import pytest

from src.network.model import Mode, StateDistribution, build_network

NETWORKS_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "networks")

BRIDGE_ARCS = [(1, 2), (1, 3), (1, 4), (2, 4), (2, 5), (3, 5)]
BRIDGE_PROBABILITIES = {1: 0.85, 2: 0.80, 3: 0.85, 4: 0.80, 5: 0.75, 6: 0.90}

CHAIN_ARCS = [(1, 2), (2, 5), (5, 8), (1, 3), (3, 6), (6, 8), (1, 4), (4, 7), (7, 8)]
CHAIN_PROBABILITIES = {2: 0.80, 3: 0.940504, 4: 0.995000, 5: 0.987185, 6: 0.90, 7: 0.88}
CHAIN_RELIABILITY = 0.995984

# BAT index -> printed Pr(X_i) of every connected vector of the chain network
CHAIN_CONNECTED = {
    10: 2.82e-06, 12: 4.46e-05, 14: 0.000561, 16: 0.008869,
    19: 1.3e-06, 20: 5.21e-06, 23: 0.000259, 24: 0.001036,
    26: 2.54e-05, 27: 0.0001, 28: 0.000401, 30: 0.005049,
    31: 0.019954, 32: 0.079817, 37: 1.34e-05, 38: 5.34e-05,
    39: 0.000211, 40: 0.000844, 42: 2.07e-05, 44: 0.000327,
    45: 0.001029, 46: 0.004114, 47: 0.016259, 48: 0.065036,
    51: 9.55e-06, 52: 3.82e-05, 53: 0.00012, 54: 0.000481,
    55: 0.0019, 56: 0.007598, 58: 0.000186, 59: 0.000735,
    60: 0.002941, 61: 0.009257, 62: 0.037028, 63: 0.146331,
    64: 0.585325,
}


def chain_closed_form(p):
    """1 - (1 - p2 p5)(1 - p3 p6)(1 - p4 p7) for three disjoint two-node chains"""
    return 1 - (1 - p[2] * p[5]) * (1 - p[3] * p[6]) * (1 - p[4] * p[7])


@pytest.fixture
def bridge():
    return build_network(5, BRIDGE_ARCS, Mode.AOA)


@pytest.fixture
def bridge_dist():
    return StateDistribution(BRIDGE_PROBABILITIES)


@pytest.fixture
def chain():
    return build_network(8, CHAIN_ARCS, Mode.AON)


@pytest.fixture
def chain_dist():
    return StateDistribution(CHAIN_PROBABILITIES)


@pytest.fixture
def problem_path():
    def path(name):
        return os.path.join(NETWORKS_DIR, name)
    return path


def random_network(rng, mode, max_nodes=12, max_arcs=10, density=0.4, n=None):
    """Random simple network with 2..max_nodes nodes (or exactly n); AOA arc count is capped at max_arcs"""
    if n is None:
        n = int(rng.integers(2, max_nodes + 1))
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    chosen = [pair for pair in pairs if rng.random() < density]
    if not chosen:
        chosen = [pairs[int(rng.integers(len(pairs)))]]
    order = rng.permutation(len(chosen))
    arcs = [chosen[k] for k in order]
    if mode is Mode.AOA:
        arcs = arcs[:max_arcs]
    return build_network(n, arcs, mode)


def random_distribution(rng, network):
    return StateDistribution({c: float(rng.random()) for c in network.components})


@pytest.fixture
def random_networks():
    """100 seeded random networks of the requested mode"""
    def make(mode, count=100, seed=2024, **kwargs):
        rng = np.random.default_rng(seed)
        return [random_network(rng, mode, **kwargs) for _ in range(count)]
    return make
