import networkx as nx
import pytest

from src.connectivity.plsa import (
    Verdict,
    dfs_connected,
    is_connected,
    plsa,
    plsa_aoa,
    plsa_aon,
)
from src.enumeration.bat import enumerate_aoa, enumerate_aon
from src.network.model import Mode, StateVector, build_network, vector_subgraph
from src.utils.errors import StateError

from conftest import CHAIN_CONNECTED


def aoa(*bits):
    return StateVector.of(Mode.AOA, bits)


def aon(*bits):
    return StateVector.of(Mode.AON, bits)


def all_vectors(network):
    if network.mode is Mode.AOA:
        return enumerate_aoa(network.m)
    return enumerate_aon(network.n)


class TestBridgeSearch:

    def test_worked_vector(self, bridge):
        verdict, trace = plsa_aoa(bridge, aoa(1, 1, 0, 1, 1, 0))
        assert verdict is Verdict.CONNECTED
        assert trace.layers == ((1,), (2, 3), (5,))
        assert 5 in trace.visited

    def test_all_zeros(self, bridge):
        verdict, trace = plsa_aoa(bridge, aoa(0, 0, 0, 0, 0, 0))
        assert verdict is Verdict.DISCONNECTED
        assert trace.layers == ((1,),)
        assert not verdict

    def test_path_through_back_arc(self, bridge):
        verdict, trace = plsa_aoa(bridge, aoa(0, 0, 1, 1, 1, 0))
        assert verdict is Verdict.CONNECTED
        assert trace.layers == ((1,), (4,), (2,), (5,))

    def test_dead_end(self, bridge):
        verdict, trace = plsa_aoa(bridge, aoa(0, 1, 1, 1, 0, 0))
        assert verdict is Verdict.DISCONNECTED
        assert trace.layers == ((1,), (3, 4), (2,))
        assert trace.visited == frozenset({1, 2, 3, 4})

    def test_layers_are_disjoint_and_sorted(self, bridge):
        for vector in enumerate_aoa(6):
            _, trace = plsa(bridge, vector)
            flat = [node for layer in trace.layers for node in layer]
            assert len(flat) == len(set(flat))
            assert all(list(layer) == sorted(layer) for layer in trace.layers)


class TestChainSearch:

    def test_connected_pattern_matches_known_set(self, chain):
        connected = {
            index for index, vector in enumerate(enumerate_aon(8), start=1)
            if plsa_aon(chain, vector)[0]
        }
        assert connected == set(CHAIN_CONNECTED)

    def test_connected_pattern_matches_chain_rule(self, chain):
        for vector in enumerate_aon(8):
            x = {k: vector.state(k) for k in range(1, 9)}
            expected = (x[2] and x[5]) or (x[3] and x[6]) or (x[4] and x[7])
            assert bool(plsa(chain, vector)[0]) == bool(expected)

    def test_failed_node_blocks_layer(self, chain):
        verdict, trace = plsa_aon(chain, aon(1, 1, 0, 0, 0, 0, 0, 1))
        assert verdict is Verdict.DISCONNECTED
        assert trace.layers == ((1,), (2,))

    def test_two_node_network(self):
        network = build_network(2, [(1, 2)], Mode.AON)
        verdict, trace = plsa(network, aon(1, 1))
        assert verdict is Verdict.CONNECTED
        assert trace.layers == ((1,), (2,))


class TestDepthFirstOracle:

    def test_bridge_exhaustive(self, bridge):
        for vector in enumerate_aoa(6):
            assert plsa(bridge, vector)[0] == dfs_connected(bridge, vector)

    def test_chain_exhaustive(self, chain):
        for vector in enumerate_aon(8):
            assert plsa(chain, vector)[0] == dfs_connected(chain, vector)

    @pytest.mark.parametrize("mode", [Mode.AOA, Mode.AON])
    def test_random_networks(self, random_networks, mode):
        for network in random_networks(mode):
            for vector in all_vectors(network):
                verdict, _ = plsa(network, vector)
                assert verdict == dfs_connected(network, vector)
                assert is_connected(network, vector.bits) == bool(verdict)

    @pytest.mark.parametrize("mode", [Mode.AOA, Mode.AON])
    def test_agrees_with_has_path_on_surviving_subgraph(self, random_networks, mode):
        for network in random_networks(mode, count=30, seed=11):
            for vector in all_vectors(network):
                view = vector_subgraph(network, vector)
                graph = nx.Graph(list(view.arcs))
                graph.add_nodes_from([1, network.sink])
                expected = nx.has_path(graph, 1, network.sink)
                assert bool(dfs_connected(network, vector)) == expected


class TestMonotonicity:

    @pytest.mark.parametrize("mode", [Mode.AOA, Mode.AON])
    def test_turning_a_component_on_never_disconnects(self, random_networks, mode):
        for network in random_networks(mode, count=30, seed=77):
            for vector in all_vectors(network):
                if not is_connected(network, vector.bits):
                    continue
                first = 0 if mode is Mode.AOA else 1
                last = len(vector) if mode is Mode.AOA else len(vector) - 1
                for k in range(first, last):
                    if vector.bits[k] == 0:
                        raised = list(vector.bits)
                        raised[k] = 1
                        assert is_connected(network, raised)


class TestLayerContents:

    def test_each_layer_is_reachable_from_previous(self, random_networks):
        for network in random_networks(Mode.AOA, count=30, seed=5):
            for vector in enumerate_aoa(network.m):
                _, trace = plsa(network, vector)
                for previous, layer in zip(trace.layers, trace.layers[1:]):
                    for node in layer:
                        assert any(
                            vector.bits[arc] for u in previous
                            for v, arc in network.adjacency[u] if v == node
                        )

    def test_search_stops_at_sink(self):
        # the sink is one hop away; deeper nodes never enter a layer
        network = build_network(5, [(1, 5), (1, 2), (2, 3), (3, 4)], Mode.AOA)
        _, trace = plsa(network, aoa(1, 1, 1, 1))
        assert trace.layers == ((1,), (5,))
        assert trace.visited == frozenset({1, 5})


class TestMismatches:

    def test_mode_mismatch(self, bridge, chain):
        with pytest.raises(StateError):
            plsa_aon(bridge, aoa(1, 1, 1, 1, 1, 1))
        with pytest.raises(StateError):
            plsa_aoa(chain, aon(1, 1, 1, 1, 1, 1, 1, 1))

    def test_length_mismatch(self, bridge):
        with pytest.raises(StateError):
            plsa(bridge, aoa(1, 1, 1))
        with pytest.raises(StateError):
            dfs_connected(bridge, aoa(1, 1, 1))
