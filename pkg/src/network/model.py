"""
Network topology, state vectors and state distributions
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, FrozenSet, Iterable, List, Mapping, Sequence, Tuple

import networkx as nx

from src.utils.errors import NetworkError, StateError


class Mode(str, Enum):
    """Failure model: arcs fail (AOA) or nodes fail (AON)"""

    AOA = "aoa"
    AON = "aon"

    @classmethod
    def parse(cls, value) -> "Mode":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).strip().lower())
        except ValueError:
            raise NetworkError(f"Unknown mode: {value!r} (expected aoa or aon)") from None


Arc = Tuple[int, int]


@dataclass(frozen=True)
class Network:
    """
    Undirected two-terminal network with source 1 and sink n.

    `arcs` keeps input order (arc ordinal k is position k in this tuple,
    1-based) with each pair normalized to i < j.
    """

    n: int
    arcs: Tuple[Arc, ...]
    mode: Mode
    adjacency: Tuple[Tuple[Tuple[int, int], ...], ...] = field(
        init=False, repr=False, compare=False
    )

    def __post_init__(self):
        # adjacency[u] = ((v, arc_index0), ...) in ascending neighbour order
        neighbours: List[List[Tuple[int, int]]] = [[] for _ in range(self.n + 1)]
        for index, (i, j) in enumerate(self.arcs):
            neighbours[i].append((j, index))
            neighbours[j].append((i, index))
        object.__setattr__(
            self, "adjacency", tuple(tuple(sorted(entry)) for entry in neighbours)
        )

    @property
    def m(self) -> int:
        return len(self.arcs)

    @property
    def source(self) -> int:
        return 1

    @property
    def sink(self) -> int:
        return self.n

    @property
    def sorted_arcs(self) -> Tuple[Arc, ...]:
        return tuple(sorted(self.arcs))

    @property
    def vector_length(self) -> int:
        """Length of a state vector in this network's mode"""
        return self.m if self.mode is Mode.AOA else self.n

    @property
    def components(self) -> Tuple[int, ...]:
        """Ids of the failure-prone components (arc ordinals or interior nodes)"""
        if self.mode is Mode.AOA:
            return tuple(range(1, self.m + 1))
        return tuple(range(2, self.n))

    @property
    def mutable_bits(self) -> int:
        return len(self.components)

    def arc(self, k: int) -> Arc:
        """Arc a_k (1-based ordinal)"""
        return self.arcs[k - 1]


def build_network(n: int, arcs: Iterable[Sequence[int]], mode) -> Network:
    """
    Build and validate a network

    Args:
        n: Node count (>= 2); node 1 is the source, node n the sink
        arcs: Node pairs in input order
        mode: Mode or 'aoa' / 'aon'

    Returns:
        Validated Network
    """
    mode = Mode.parse(mode)
    if n < 2:
        raise NetworkError(f"Node count must be at least 2, got {n}")

    normalized: List[Arc] = []
    seen = set()
    for position, pair in enumerate(arcs, start=1):
        if len(pair) != 2:
            raise NetworkError(f"Arc {position} must have two endpoints, got {tuple(pair)}")
        i, j = int(pair[0]), int(pair[1])
        if i == j:
            raise NetworkError(f"Arc {position} is a self-loop on node {i}")
        for endpoint in (i, j):
            if not 1 <= endpoint <= n:
                raise NetworkError(
                    f"Arc {position} endpoint {endpoint} outside 1..{n}"
                )
        key = (min(i, j), max(i, j))
        if key in seen:
            raise NetworkError(f"Arc {position} duplicates arc {key[0]}-{key[1]}")
        seen.add(key)
        normalized.append(key)

    return Network(n=n, arcs=tuple(normalized), mode=mode)


@dataclass(frozen=True)
class StateVector:
    """Binary state of every coordinate; bits[k-1] is coordinate k"""

    mode: Mode
    bits: Tuple[int, ...]

    def __post_init__(self):
        if any(bit not in (0, 1) for bit in self.bits):
            raise StateError(f"State vector bits must be 0 or 1: {self.bits}")
        if self.mode is Mode.AON and self.bits and (self.bits[0] != 1 or self.bits[-1] != 1):
            raise StateError("AON vectors must keep the source and sink bits at 1")

    @classmethod
    def of(cls, mode, bits: Iterable[int]) -> "StateVector":
        return cls(Mode.parse(mode), tuple(int(bit) for bit in bits))

    def __len__(self) -> int:
        return len(self.bits)

    def state(self, k: int) -> int:
        """x_k, 1-based"""
        return self.bits[k - 1]

    @property
    def bitstring(self) -> str:
        return "".join(str(bit) for bit in self.bits)

    def __str__(self) -> str:
        return "(" + ", ".join(str(bit) for bit in self.bits) + ")"


def check_vector(network: Network, vector: StateVector) -> None:
    """Raise StateError unless vector fits the network's mode and size"""
    if vector.mode is not network.mode:
        raise StateError(
            f"{vector.mode.value.upper()} vector used on {network.mode.value.upper()} network"
        )
    if len(vector) != network.vector_length:
        raise StateError(
            f"Vector length {len(vector)} does not match expected {network.vector_length}"
        )


@dataclass(frozen=True)
class NetworkView:
    """Surviving part G(X) of a network under a state vector"""

    nodes: FrozenSet[int]
    arcs: Tuple[Arc, ...]
    arc_ordinals: Tuple[int, ...]


def network_graph(network: Network) -> nx.Graph:
    """Undirected networkx graph of every node and arc; edges carry their 1-based ordinal"""
    graph = nx.Graph()
    graph.add_nodes_from(range(1, network.n + 1))
    graph.add_edges_from((i, j, {'ordinal': k}) for k, (i, j) in enumerate(network.arcs, start=1))
    return graph


def vector_subgraph(network: Network, vector: StateVector) -> NetworkView:
    """
    Subgraph G(X) induced by a state vector

    AOA keeps every node and only the arcs whose bit is 1; AON keeps the
    nodes whose bit is 1 and the arcs joining two of them.
    """
    check_vector(network, vector)
    graph = network_graph(network)
    if network.mode is Mode.AOA:
        kept = graph.edge_subgraph(
            (i, j) for i, j, k in graph.edges(data='ordinal') if vector.state(k)
        )
        nodes = frozenset(graph.nodes)
    else:
        kept = nx.induced_subgraph(graph, [v for v in graph.nodes if vector.state(v)])
        nodes = frozenset(kept.nodes)
    ordinals = tuple(sorted(k for _, _, k in kept.edges(data='ordinal')))
    return NetworkView(
        nodes=nodes,
        arcs=tuple(network.arc(k) for k in ordinals),
        arc_ordinals=ordinals,
    )


@dataclass(frozen=True)
class StateDistribution:
    """Success probability per failure-prone component"""

    entries: Mapping[int, float]

    def __post_init__(self):
        cleaned: Dict[int, float] = {}
        for component, p in self.entries.items():
            p = float(p)
            if not 0.0 <= p <= 1.0:
                raise StateError(f"Probability of component {component} outside [0, 1]: {p}")
            cleaned[int(component)] = p
        object.__setattr__(self, "entries", dict(sorted(cleaned.items())))

    def __getitem__(self, component: int) -> float:
        try:
            return self.entries[component]
        except KeyError:
            raise StateError(f"No state distribution entry for component {component}") from None

    def __contains__(self, component: int) -> bool:
        return component in self.entries

    def validate_for(self, network: Network) -> None:
        """Check that entries cover exactly the network's failure-prone components"""
        expected = set(network.components)
        missing = sorted(expected - set(self.entries))
        extra = sorted(set(self.entries) - expected)
        if missing:
            raise StateError(f"Missing state distribution for components {missing}")
        if extra:
            what = "arcs" if network.mode is Mode.AOA else "interior nodes"
            raise StateError(f"Components {extra} are not {what} of the network")

    def probabilities(self, network: Network) -> Tuple[float, ...]:
        """Success probability per coordinate; terminals in AON mode get 1.0"""
        self.validate_for(network)
        if network.mode is Mode.AOA:
            return tuple(self.entries[k] for k in range(1, network.m + 1))
        return (1.0,) + tuple(self.entries[v] for v in range(2, network.n)) + (1.0,)


@dataclass(frozen=True)
class ExpertRatingSet:
    """Linguistic ratings per uncertainty component, one per expert"""

    entries: Mapping[int, Tuple[str, ...]]

    def __post_init__(self):
        cleaned = {}
        lengths = set()
        for component, ratings in self.entries.items():
            ratings = tuple(ratings)
            if not ratings:
                raise StateError(f"Component {component} has no expert ratings")
            lengths.add(len(ratings))
            cleaned[int(component)] = ratings
        if len(lengths) > 1:
            raise StateError(
                f"Every rated component needs the same number of experts, got {sorted(lengths)}"
            )
        object.__setattr__(self, "entries", dict(sorted(cleaned.items())))

    @property
    def experts(self) -> int:
        """h, the number of experts (0 when nothing is rated)"""
        return len(next(iter(self.entries.values()))) if self.entries else 0

    def validate_for(self, network: Network) -> None:
        valid = set(network.components)
        for component in self.entries:
            if component not in valid:
                raise StateError(
                    f"Rated component {component} is not an uncertainty component of the network"
                )
