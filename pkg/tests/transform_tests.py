# -*- coding: utf-8 -*-

"""This file is part of the ICNC library.

ICNC is free software: you can redistribute it and/or modify
it under the terms of the GNU Lesser General Public License as
published by the Free Software Foundation, either version 3 of
the License, or (at your option) any later version.

ICNC is distributed in the hope that it will be useful,
but WITHOUT ANY WARRANTY; without even the implied warranty of
MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE. See the
GNU Lesser General Public License for more details.

You should have received a copy of the GNU Lesser General Public
License along with ICNC. If not, see <http://www.gnu.org/licenses/>.

"""

from nose.tools import assert_equal, assert_raises, assert_true, assert_in, assert_is_none

from icnc.classifier import unipaths
from icnc.digraph import Digraph, Path
from icnc.sideinfo import SIGraph, min_feedback_vertex_sets, unicycles
from icnc.transform import Network, TrailMap, build_ncnetwork, dashed_label, demand_label, receiver_label

# 1 -> 2 -> 3 -> 1
three_cycle = SIGraph(3, {1: [3], 2: [1], 3: [2]})
five_cycle = SIGraph(5, {1: [2, 5], 2: [1, 3], 3: [2, 4], 4: [3, 5], 5: [1, 4]})


def test_labels():
    """Assert that the helper labels name dashed, demand and receiver vertices."""
    assert_equal(dashed_label(3), "3'")
    assert_equal(demand_label(3), 'D_3')
    assert_equal(receiver_label(3), "D_3'")


def test_build_ncnetwork_three_cycle():
    """Assert that the 3-cycle with vtau = {1} gives an 8-vertex, 7-edge network."""
    network = build_ncnetwork(three_cycle, [1])
    graph = network.graph
    assert_equal(graph.vertices, ('1', "1'", '2', "2'", '3', "3'", 'D_1', "D_1'"))
    assert_equal(graph.edge_count, 7)
    assert_equal(network.sources, ('1',))
    assert_equal(network.receivers, ("D_1'",))
    assert_equal(sorted(network.coding_edges),
                 [('1', "1'"), ('2', "2'"), ('3', "3'"), ('D_1', "D_1'")])
    assert_equal(sorted(network.forwarding_edges), [("1'", '2'), ("2'", '3'), ("3'", 'D_1')])
    assert_true(graph.is_acyclic())
    assert_equal(network.demand_edge("D_1'"), ('D_1', "D_1'"))
    assert_equal(network.coding_edge(2), ('2', "2'"))
    assert_equal(network.message_of("2"), 2)
    assert_is_none(network.message_of("2'"))


def test_build_ncnetwork_rejects_bad_vtau():
    """Assert that a vertex set that does not acyclify, or names unknown vertices, is refused."""
    assert_raises(ValueError, build_ncnetwork, three_cycle, [])
    assert_raises(ValueError, build_ncnetwork, three_cycle, [4])
    assert_raises(ValueError, build_ncnetwork, five_cycle, [1, 3])


def test_unipaths_match_unicycles():
    """Assert that every source has as many unipaths as unicycles for every minimum vertex set."""
    _, sets = min_feedback_vertex_sets(five_cycle)
    for vtau in sets:
        network = build_ncnetwork(five_cycle, vtau)
        assert_true(network.graph.is_acyclic())
        for w in vtau:
            assert_equal(len(unipaths(network, w).items), len(unicycles(five_cycle, vtau, w)))


def test_trail_map_round_trip():
    """Assert that a G_SI cycle maps to a unipath and back to a closed trail."""
    network = build_ncnetwork(three_cycle, [1])
    trails = TrailMap(network)
    paths = trails.sigraph_cycle_to_nc_paths([1, 2, 3])
    assert_equal(paths, [Path(('1', "1'", '2', "2'", '3', "3'", 'D_1', "D_1'"))])
    assert_equal(trails.nc_path_to_sigraph_trail(paths[0]), (1, 2, 3, 1))
    assert_equal(paths, unipaths(network, 1).items)


def test_trail_map_splits_at_vtau():
    """Assert that a cycle through two vtau vertices splits into two source-to-receiver paths."""
    network = build_ncnetwork(five_cycle, (1, 2, 4))
    paths = TrailMap(network).sigraph_cycle_to_nc_paths([1, 2])
    assert_equal(paths, [Path(('1', "1'", 'D_2', "D_2'")), Path(('2', "2'", 'D_1', "D_1'"))])
    assert_raises(ValueError, TrailMap(network).sigraph_cycle_to_nc_paths, [1, 3])


def test_network_validation():
    """Assert that Network refuses cycles, fed sources and receivers without one demand edge."""
    graph = Digraph(['s', 'a', 't'], [('s', 'a'), ('a', 't')])
    network = Network(graph, ['s'], ['t'], coding_edges=[('s', 'a')])
    assert_equal(network.receiver_of('s'), 't')
    assert_equal(network.tau, 1)
    assert_true(network.root is network)
    assert_raises(ValueError, Network, graph, ['a'], ['t'])
    assert_raises(ValueError, Network, graph, ['s'], ['t', 'a'])
    assert_raises(ValueError, Network, Digraph(['a', 'b'], [('a', 'b'), ('b', 'a')]), [], [])
    assert_raises(ValueError, Network, graph, ['s'], ['t'], coding_edges=[('s', 't')])
    assert_raises(ValueError, network.source_index, 'a')


def test_subnetwork():
    """Assert that subnetworks keep or drop edges and remember their root."""
    network = build_ncnetwork(five_cycle, (1, 2, 4))
    unipath = unipaths(network, 1).items[0]
    split = network.subnetwork(['1'], keep_edges=unipath.edges())
    assert_equal(split.graph.vertices, tuple(unipath))
    assert_true(split.root is network)
    rest = network.subnetwork(['2', '4'], drop_edges=unipath.edges())
    assert_equal(rest.graph.edge_count, network.graph.edge_count - len(unipath.edges()))
    assert_equal(rest.receivers, ("D_2'", "D_4'"))
    assert_true(rest.root is network)


def test_network_exports():
    """Assert that DOT marks coding edges solid and forwarding edges dashed, and to_dict adds n and vtau."""
    network = build_ncnetwork(three_cycle, [1])
    dot = network.to_dot()
    assert_in('"1" -> "1\'" [style=solid];', dot)
    assert_in('"1\'" -> "2" [style=dashed];', dot)
    assert_in('"1" [shape=box];', dot)
    assert_in('"D_1\'" [shape=doublecircle];', dot)
    data = network.to_dict()
    assert_equal(data['n'], 3)
    assert_equal(data['vtau'], [1])
    assert_equal(len(data['edges']), 7)
    assert_equal(sum(1 for edge in data['edges'] if edge['kind'] == 'coding'), 4)
