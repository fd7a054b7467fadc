"""
Source-to-sink connectivity of a state vector

The layered search grows node layers Q_0 = {1}, Q_1, ... from the source,
each layer holding the unvisited nodes reachable from the previous one
through surviving components. It halts as soon as the sink enters a layer
or a layer comes out empty. Cost is O(n + m) per vector.
"""

from dataclasses import dataclass
from enum import Enum
from typing import FrozenSet, List, Sequence, Tuple

import networkx as nx

from src.network.model import Mode, Network, StateVector, check_vector, vector_subgraph
from src.utils.errors import StateError


class Verdict(str, Enum):
    CONNECTED = "connected"
    DISCONNECTED = "disconnected"

    def __bool__(self) -> bool:
        return self is Verdict.CONNECTED


@dataclass(frozen=True)
class LayerTrace:
    """Layers Q_0, Q_1, ... in search order and the visited set V*"""

    layers: Tuple[Tuple[int, ...], ...]
    visited: FrozenSet[int]
    verdict: Verdict


def _check(network: Network, vector: StateVector, mode: Mode) -> None:
    if network.mode is not mode:
        raise StateError(
            f"{mode.value.upper()} search used on a {network.mode.value.upper()} network"
        )
    check_vector(network, vector)


def _layered_search(network: Network, bits: Sequence[int]) -> LayerTrace:
    aoa = network.mode is Mode.AOA
    sink = network.sink
    adjacency = network.adjacency
    visited = {1}
    layers: List[Tuple[int, ...]] = [(1,)]
    frontier: Tuple[int, ...] = (1,)

    while True:
        layer = set()
        for u in frontier:
            for v, arc in adjacency[u]:
                if v in visited:
                    continue
                if bits[arc] if aoa else bits[v - 1]:
                    layer.add(v)
        if sink in layer:
            # the search halts on the sink; the final layer records it alone
            layers.append((sink,))
            visited.add(sink)
            return LayerTrace(tuple(layers), frozenset(visited), Verdict.CONNECTED)
        if not layer:
            return LayerTrace(tuple(layers), frozenset(visited), Verdict.DISCONNECTED)
        frontier = tuple(sorted(layer))
        layers.append(frontier)
        visited.update(layer)


def plsa_aoa(network: Network, vector: StateVector) -> Tuple[Verdict, LayerTrace]:
    """Layered search where arcs fail: arc e_{u,v} is usable iff X(e_{u,v}) = 1"""
    _check(network, vector, Mode.AOA)
    trace = _layered_search(network, vector.bits)
    return trace.verdict, trace


def plsa_aon(network: Network, vector: StateVector) -> Tuple[Verdict, LayerTrace]:
    """Layered search where nodes fail: node v can join a layer iff X(v) = 1"""
    _check(network, vector, Mode.AON)
    trace = _layered_search(network, vector.bits)
    return trace.verdict, trace


def plsa(network: Network, vector: StateVector) -> Tuple[Verdict, LayerTrace]:
    """Layered search in the network's own mode"""
    if network.mode is Mode.AOA:
        return plsa_aoa(network, vector)
    return plsa_aon(network, vector)


def is_connected(network: Network, bits: Sequence[int]) -> bool:
    """
    Trace-free layered search on raw coordinates

    No validation is done here; the enumeration loop feeds it vectors that
    already fit the network.
    """
    aoa = network.mode is Mode.AOA
    sink = network.sink
    adjacency = network.adjacency
    visited = {1}
    frontier = [1]
    while frontier:
        layer = []
        for u in frontier:
            for v, arc in adjacency[u]:
                if v in visited:
                    continue
                if bits[arc] if aoa else bits[v - 1]:
                    if v == sink:
                        return True
                    visited.add(v)
                    layer.append(v)
        frontier = layer
    return False


def dfs_connected(network: Network, vector: StateVector) -> Verdict:
    """Depth-first reachability from node 1 to node n over G(X); independent of the layered search"""
    view = vector_subgraph(network, vector)
    graph = nx.Graph()
    graph.add_nodes_from({1, network.sink} | view.nodes)
    graph.add_edges_from(view.arcs)
    if 1 in view.nodes and network.sink in nx.dfs_preorder_nodes(graph, 1):
        return Verdict.CONNECTED
    return Verdict.DISCONNECTED
