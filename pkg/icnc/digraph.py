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

from collections import namedtuple
import itertools

import networkx as nx


# Result of a capped enumeration: the first `limit` items and whether more existed.
Enumeration = namedtuple('Enumeration', ['items', 'overflow'])


class Path(tuple):
    """A directed path: an ordered tuple of distinct vertices.

    Passing graph checks that consecutive vertices are joined by an edge.
    """

    def __new__(cls, vertices, graph=None):
        vertices = tuple(vertices)
        if not vertices:
            raise ValueError('A path needs at least one vertex.')
        if len(set(vertices)) != len(vertices):
            raise ValueError('Path revisits a vertex: {}'.format(vertices))
        if graph is not None:
            for tail, head in zip(vertices, vertices[1:]):
                if not graph.has_edge(tail, head):
                    raise ValueError('({}, {}) is not an edge of the graph.'.format(tail, head))
        return super(Path, cls).__new__(cls, vertices)

    @property
    def source(self):
        return self[0]

    @property
    def target(self):
        return self[-1]

    def edges(self):
        return list(zip(self, self[1:]))

    def segment(self, start, stop):
        """Return the subpath from vertex start to vertex stop, both included."""
        i, j = self.index(start), self.index(stop)
        if i > j:
            raise ValueError('{} does not precede {} on the path.'.format(start, stop))
        return Path(self[i:j + 1])

    def __repr__(self):
        return 'Path({})'.format(' -> '.join(str(v) for v in self))


def _cycle_from_normalized(vertices):
    return tuple.__new__(Cycle, vertices)


class Cycle(tuple):
    """A simple directed cycle, rotated so that its smallest vertex comes first.

    The closing edge from the last vertex back to the first is implicit.
    """

    def __new__(cls, vertices, key=None):
        vertices = tuple(vertices)
        if len(vertices) < 2:
            raise ValueError('A cycle in a simple digraph has at least two vertices.')
        if len(set(vertices)) != len(vertices):
            raise ValueError('Cycle revisits a vertex: {}'.format(vertices))
        start = vertices.index(min(vertices, key=key))
        return super(Cycle, cls).__new__(cls, vertices[start:] + vertices[:start])

    def __reduce__(self):
        return (_cycle_from_normalized, (tuple(self),))

    def edges(self):
        return list(zip(self, self[1:] + self[:1]))

    def rotated_to(self, vertex):
        """Return the vertex sequence of the cycle starting at vertex."""
        i = self.index(vertex)
        return tuple(self[i:] + self[:i])

    def __repr__(self):
        return 'Cycle({})'.format(' -> '.join(str(v) for v in self + self[:1]))


class Digraph(object):
    """Simple directed graph with an insertion-order vertex index.

    Vertex labels are any hashable values (side-information graphs use ints,
    the coding networks built from them use strings such as "3'" or "D_1'").
    The index fixes the order in which every enumeration reports its results.
    Storage and traversal are delegated to a frozen networkx.DiGraph.
    """

    def __init__(self, vertices=(), edges=()):
        vertices = list(vertices)
        self._index = {}
        for v in vertices:
            if v in self._index:
                raise ValueError('Duplicate vertex: {}'.format(v))
            self._index[v] = len(self._index)
        edges = list(edges)
        for tail, head in edges:
            if tail not in self._index or head not in self._index:
                raise ValueError('Edge ({}, {}) has an undeclared endpoint.'.format(tail, head))
            if tail == head:
                raise ValueError('Self-loop at {} is not allowed.'.format(tail))
        edges.sort(key=lambda edge: (self._index[edge[0]], self._index[edge[1]]))
        for first, second in zip(edges, edges[1:]):
            if first == second:
                raise ValueError('Parallel edge ({}, {}) is not allowed.'.format(*first))

        graph = nx.DiGraph()
        graph.add_nodes_from(vertices)
        graph.add_edges_from(edges)
        self._graph = nx.freeze(graph)
        self._vertices = tuple(vertices)
        self._edges = tuple((tail, head) for tail, head in edges)

    @property
    def vertices(self):
        return self._vertices

    @property
    def edges(self):
        return self._edges

    @property
    def vertex_count(self):
        return len(self._vertices)

    @property
    def edge_count(self):
        return len(self._edges)

    @property
    def nx_graph(self):
        """The underlying (frozen) networkx graph."""
        return self._graph

    def _check_vertex(self, v):
        if v not in self._index:
            raise ValueError('Unknown vertex: {}'.format(v))

    def index(self, v):
        self._check_vertex(v)
        return self._index[v]

    def sort_key(self, vertices):
        """Key ordering vertex sequences lexicographically by index."""
        return tuple(self._index[v] for v in vertices)

    def has_vertex(self, v):
        return v in self._index

    def has_edge(self, tail, head):
        return self._graph.has_edge(tail, head)

    def successors(self, v):
        self._check_vertex(v)
        return list(self._graph.successors(v))

    def predecessors(self, v):
        self._check_vertex(v)
        return sorted(self._graph.predecessors(v), key=self._index.__getitem__)

    def in_edges(self, v):
        return [(u, v) for u in self.predecessors(v)]

    def out_edges(self, v):
        return [(v, w) for w in self.successors(v)]

    def in_degree(self, v):
        self._check_vertex(v)
        return self._graph.in_degree(v)

    def out_degree(self, v):
        self._check_vertex(v)
        return self._graph.out_degree(v)

    def is_acyclic(self):
        """True iff the graph has no directed cycle."""
        return nx.is_directed_acyclic_graph(self._graph)

    def reachable(self, u, v):
        """True iff a directed path leads from u to v; every vertex reaches itself."""
        self._check_vertex(u)
        self._check_vertex(v)
        return u == v or nx.has_path(self._graph, u, v)

    def enumerate_simple_paths(self, u, v, limit):
        """Enumerate simple u -> v paths in lexicographic index order.

        Parameters
        ----------
        u: vertex
            Start vertex.
        v: vertex
            End vertex. u == v gives the single zero-length path.
        limit: int
            Maximum number of paths to return.

        Returns
        -------
        result: Enumeration
            items is a list of Path, overflow is True when more than limit
            paths exist.
        """
        self._check_vertex(u)
        self._check_vertex(v)
        if limit <= 0:
            raise ValueError('Enumeration limit must be positive, got {}.'.format(limit))
        if u == v:
            return Enumeration([Path((u,))], False)
        # Successors are stored in index order, so the depth-first search
        # below yields paths in lexicographic order.
        found = list(itertools.islice(nx.all_simple_paths(self._graph, u, v), limit + 1))
        paths = [Path(path) for path in found[:limit]]
        return Enumeration(paths, len(found) > limit)

    def enumerate_cycles(self, limit):
        """Enumerate the elementary circuits of the graph.

        Cycles are found with Johnson's algorithm, rotated to start at their
        smallest-index vertex and sorted lexicographically.

        Parameters
        ----------
        limit: int
            Maximum number of cycles to return.

        Returns
        -------
        result: Enumeration
            items is a list of Cycle, overflow is True when more than limit
            cycles exist.
        """
        if limit <= 0:
            raise ValueError('Enumeration limit must be positive, got {}.'.format(limit))
        found = list(itertools.islice(nx.simple_cycles(self._graph), limit + 1))
        cycles = [Cycle(cycle, key=self._index.__getitem__) for cycle in found[:limit]]
        cycles.sort(key=self.sort_key)
        return Enumeration(cycles, len(found) > limit)

    def induced_subgraph(self, S):
        """Return the subgraph on S with every edge whose endpoints are both in S."""
        S = set(S)
        for v in S:
            self._check_vertex(v)
        return Digraph([v for v in self._vertices if v in S],
                       [(tail, head) for tail, head in self._edges if tail in S and head in S])

    def without_edges(self, edges):
        """Return the graph on the same vertices with the given edges removed."""
        dropped = set(edges)
        return Digraph(self._vertices, [edge for edge in self._edges if edge not in dropped])

    def edge_subgraph(self, edges):
        """Return the graph formed by the given edges and their endpoints."""
        kept = set(edges)
        for tail, head in kept:
            if not self.has_edge(tail, head):
                raise ValueError('({}, {}) is not an edge of the graph.'.format(tail, head))
        touched = set(itertools.chain.from_iterable(kept))
        return Digraph([v for v in self._vertices if v in touched],
                       [edge for edge in self._edges if edge in kept])

    def topological_order(self):
        """Return the lexicographically smallest topological order of the vertices."""
        try:
            return list(nx.lexicographical_topological_sort(self._graph, key=self._index.__getitem__))
        except nx.NetworkXUnfeasible:
            raise ValueError('The graph has a directed cycle and no topological order.')

    def is_isomorphic(self, other):
        return nx.is_isomorphic(self._graph, other.nx_graph)

    def to_dot(self, name='G', vertex_attrs=None, edge_attrs=None):
        """Render the graph in Graphviz DOT, one vertex or edge per line.

        Parameters
        ----------
        name: str
            Graph name.
        vertex_attrs: dict or None
            Optional vertex -> attribute string, e.g. 'shape=box'.
        edge_attrs: dict or None
            Optional (tail, head) -> attribute string, e.g. 'style=dashed'.

        Returns
        -------
        dot: str
        """
        vertex_attrs = vertex_attrs or {}
        edge_attrs = edge_attrs or {}
        lines = ['digraph {} {{'.format(name)]
        for v in self._vertices:
            attrs = vertex_attrs.get(v)
            lines.append('  "{}"{};'.format(v, ' [{}]'.format(attrs) if attrs else ''))
        for tail, head in self._edges:
            attrs = edge_attrs.get((tail, head))
            lines.append('  "{}" -> "{}"{};'.format(tail, head, ' [{}]'.format(attrs) if attrs else ''))
        lines.append('}')
        return '\n'.join(lines) + '\n'

    def __eq__(self, other):
        if not isinstance(other, Digraph):
            return NotImplemented
        return self._vertices == other._vertices and set(self._edges) == set(other._edges)

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    def __repr__(self):
        return 'Digraph(vertices={}, edges={})'.format(len(self._vertices), len(self._edges))
