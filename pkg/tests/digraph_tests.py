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

from itertools import combinations

from nose.tools import assert_equal, assert_raises, assert_true, assert_false, assert_in

from icnc.digraph import Cycle, Digraph, Path

complete_dag = Digraph(range(1, 6), combinations(range(1, 6), 2))
bidirected_c5 = Digraph(range(1, 6), [(i, i % 5 + 1) for i in range(1, 6)] +
                        [(i % 5 + 1, i) for i in range(1, 6)])


def test_digraph_rejects_malformed_input():
    """Assert that Digraph refuses duplicates, self-loops, parallel edges and unknown endpoints."""
    assert_raises(ValueError, Digraph, [1, 1], [])
    assert_raises(ValueError, Digraph, [1], [(1, 1)])
    assert_raises(ValueError, Digraph, [1, 2], [(1, 2), (1, 2)])
    assert_raises(ValueError, Digraph, [1, 2], [(1, 3)])


def test_digraph_accessors():
    """Assert that successors follow the vertex index and degrees are counted."""
    G = Digraph(['a', 'b', 'c'], [('a', 'c'), ('a', 'b'), ('b', 'c')])
    assert_equal(G.edges, (('a', 'b'), ('a', 'c'), ('b', 'c')))
    assert_equal(G.successors('a'), ['b', 'c'])
    assert_equal(G.predecessors('c'), ['a', 'b'])
    assert_equal(G.in_degree('c'), 2)
    assert_equal(G.out_degree('c'), 0)
    assert_equal(G.in_edges('c'), [('a', 'c'), ('b', 'c')])
    assert_raises(ValueError, G.successors, 'd')


def test_reachable():
    """Assert that reachability is reflexive and follows edge direction."""
    assert_true(complete_dag.reachable(1, 5))
    assert_false(complete_dag.reachable(5, 1))
    assert_true(complete_dag.reachable(3, 3))


def test_enumerate_simple_paths_complete_dag():
    """Assert that the complete DAG on 5 vertices has 8 paths from 1 to 5, in lexicographic order."""
    paths, overflow = complete_dag.enumerate_simple_paths(1, 5, 100)
    assert_false(overflow)
    assert_equal(len(paths), 8)
    assert_equal(paths[0], Path((1, 2, 3, 4, 5)))
    assert_equal(paths[-1], Path((1, 5)))
    assert_equal(paths, sorted(paths, key=complete_dag.sort_key))


def test_enumerate_simple_paths_overflow():
    """Assert that a capped enumeration returns the first items and flags the overflow."""
    paths, overflow = complete_dag.enumerate_simple_paths(1, 5, 3)
    assert_true(overflow)
    assert_equal(len(paths), 3)
    paths, overflow = complete_dag.enumerate_simple_paths(1, 5, 8)
    assert_false(overflow)


def test_enumerate_simple_paths_trivial():
    """Assert that u == v gives the zero-length path and an invalid limit raises."""
    paths, overflow = complete_dag.enumerate_simple_paths(2, 2, 1)
    assert_equal(paths, [Path((2,))])
    assert_false(overflow)
    assert_raises(ValueError, complete_dag.enumerate_simple_paths, 1, 5, 0)


def test_enumerate_cycles_bidirected_c5():
    """Assert that the bidirected 5-cycle has five 2-cycles and two 5-cycles."""
    cycles, overflow = bidirected_c5.enumerate_cycles(100)
    assert_false(overflow)
    assert_equal(len(cycles), 7)
    assert_equal(sorted(len(cycle) for cycle in cycles), [2, 2, 2, 2, 2, 5, 5])
    assert_in(Cycle((1, 2, 3, 4, 5)), cycles)
    assert_in(Cycle((1, 5, 4, 3, 2)), cycles)
    assert_true(all(cycle[0] == min(cycle) for cycle in cycles))


def test_enumerate_cycles_overflow():
    """Assert that cycle enumeration honours its cap."""
    cycles, overflow = bidirected_c5.enumerate_cycles(3)
    assert_equal(len(cycles), 3)
    assert_true(overflow)


def test_cycle_normalization():
    """Assert that a cycle is stored from its smallest vertex and compares by rotation."""
    assert_equal(Cycle((3, 1, 2)), Cycle((1, 2, 3)))
    assert_equal(tuple(Cycle((3, 1, 2))), (1, 2, 3))
    assert_equal(Cycle((3, 1, 2)).rotated_to(2), (2, 3, 1))
    assert_equal(Cycle((1, 2, 3)).edges(), [(1, 2), (2, 3), (3, 1)])
    assert_raises(ValueError, Cycle, (1,))


def test_path_validation():
    """Assert that Path refuses repeated vertices and missing edges, and cuts segments."""
    assert_raises(ValueError, Path, (1, 2, 1))
    assert_raises(ValueError, Path, (5, 1), complete_dag)
    path = Path((1, 2, 4, 5), complete_dag)
    assert_equal(path.segment(2, 5), Path((2, 4, 5)))
    assert_equal(path.edges(), [(1, 2), (2, 4), (4, 5)])
    assert_raises(ValueError, path.segment, 4, 2)


def test_acyclicity_and_topological_order():
    """Assert that acyclicity is detected and the topological order is lexicographic."""
    assert_true(complete_dag.is_acyclic())
    assert_false(bidirected_c5.is_acyclic())
    G = Digraph([3, 1, 2], [(1, 2)])
    assert_equal(G.topological_order(), [3, 1, 2])
    assert_raises(ValueError, bidirected_c5.topological_order)


def test_subgraphs():
    """Assert that induced, edge-deleted and edge-generated subgraphs keep the right parts."""
    H = bidirected_c5.induced_subgraph([1, 2, 3])
    assert_equal(H.vertices, (1, 2, 3))
    assert_equal(H.edge_count, 4)
    assert_false(bidirected_c5.induced_subgraph([1, 3, 5]).is_acyclic())
    assert_equal(bidirected_c5.without_edges([(1, 2)]).edge_count, 9)
    E = bidirected_c5.edge_subgraph([(1, 2), (2, 3)])
    assert_equal(E.vertices, (1, 2, 3))
    assert_raises(ValueError, bidirected_c5.edge_subgraph, [(1, 3)])


def test_isomorphism_and_dot():
    """Assert that relabeled graphs are isomorphic and DOT output quotes labels."""
    relabeled = Digraph(['a', 'b'], [('b', 'a')])
    assert_true(Digraph([1, 2], [(1, 2)]).is_isomorphic(relabeled))
    dot = Digraph(["1", "1'"], [("1", "1'")]).to_dot(name='G', edge_attrs={("1", "1'"): 'style=solid'})
    assert_in('"1" -> "1\'" [style=solid];', dot)
    assert_true(dot.startswith('digraph G {'))
