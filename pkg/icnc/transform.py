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

from .digraph import Digraph, Path


def dashed_label(v):
    return "{}'".format(v)


def demand_label(w):
    return 'D_{}'.format(w)


def receiver_label(w):
    return "D_{}'".format(w)


class Network(object):
    """An acyclic multiple-unicast network with unit-capacity edges.

    Parameters
    ----------
    graph: Digraph
        The network; must be acyclic.
    sources: sequence
        Source vertices. Their order fixes the basis index of each source.
    receivers: sequence
        Receiver vertex demanding the message of the source at the same position.
        A receiver has exactly one incoming edge, its demand edge.
    coding_edges: iterable, optional
        Edges tagged as coding edges; every other edge is a forwarding edge.
    root: Network, optional
        The network this one was cut out of, if any.
    """

    def __init__(self, graph, sources, receivers, coding_edges=(), root=None):
        sources = tuple(sources)
        receivers = tuple(receivers)
        if len(sources) != len(receivers):
            raise ValueError('Got {} sources but {} receivers.'.format(len(sources), len(receivers)))
        if not graph.is_acyclic():
            raise ValueError('A network must be acyclic.')
        for source in sources:
            if graph.in_degree(source) != 0:
                raise ValueError('Source {} has incoming edges.'.format(source))
        for receiver in receivers:
            if graph.in_degree(receiver) != 1:
                raise ValueError('Receiver {} must have exactly one incoming edge.'.format(receiver))
        coding_edges = frozenset(coding_edges)
        for tail, head in coding_edges:
            if not graph.has_edge(tail, head):
                raise ValueError('Coding edge ({}, {}) is not an edge of the network.'.format(tail, head))
        self._graph = graph
        self._sources = sources
        self._receivers = receivers
        self._coding_edges = coding_edges
        self._root = root

    @property
    def graph(self):
        return self._graph

    @property
    def sources(self):
        return self._sources

    @property
    def receivers(self):
        return self._receivers

    @property
    def tau(self):
        return len(self._sources)

    @property
    def root(self):
        return self if self._root is None else self._root

    @property
    def edges(self):
        return self._graph.edges

    @property
    def coding_edges(self):
        return self._coding_edges

    @property
    def forwarding_edges(self):
        return frozenset(edge for edge in self._graph.edges if edge not in self._coding_edges)

    def source_index(self, source):
        try:
            return self._sources.index(source)
        except ValueError:
            raise ValueError('{} is not a source of the network.'.format(source))

    def receiver_of(self, source):
        return self._receivers[self.source_index(source)]

    def demand_edge(self, receiver):
        """The single incoming edge of a receiver."""
        return self._graph.in_edges(receiver)[0]

    def subnetwork(self, sources, keep_edges=None, drop_edges=None):
        """Cut a network out of this one.

        Parameters
        ----------
        sources: sequence
            Sources (of this network) that the subnetwork serves.
        keep_edges: iterable, optional
            Keep only these edges and their endpoints.
        drop_edges: iterable, optional
            Keep every vertex and every edge except these.

        Returns
        -------
        network: Network
            Shares this network's root.
        """
        if keep_edges is not None:
            graph = self._graph.edge_subgraph(keep_edges)
        else:
            graph = self._graph.without_edges(drop_edges or ())
        receivers = [self.receiver_of(source) for source in sources]
        coding = [edge for edge in self._coding_edges if graph.has_vertex(edge[0]) and
                  graph.has_vertex(edge[1]) and graph.has_edge(*edge)]
        return Network(graph, sources, receivers, coding, root=self.root)

    def to_dot(self, name='G_NC'):
        """DOT rendering: coding edges solid, forwarding edges dashed,
        sources boxed and receivers double-circled."""
        vertex_attrs = dict((source, 'shape=box') for source in self._sources)
        vertex_attrs.update((receiver, 'shape=doublecircle') for receiver in self._receivers)
        edge_attrs = dict((edge, 'style=solid' if edge in self._coding_edges else 'style=dashed')
                          for edge in self._graph.edges)
        return self._graph.to_dot(name=name, vertex_attrs=vertex_attrs, edge_attrs=edge_attrs)

    def to_dict(self):
        return {
            'vertices': [str(v) for v in self._graph.vertices],
            'edges': [{'tail': str(tail), 'head': str(head),
                       'kind': 'coding' if (tail, head) in self._coding_edges else 'forwarding'}
                      for tail, head in self._graph.edges],
            'sources': [str(v) for v in self._sources],
            'receivers': [str(v) for v in self._receivers],
        }

    def __repr__(self):
        return '{}(vertices={}, edges={}, sources={})'.format(
            type(self).__name__, self._graph.vertex_count, self._graph.edge_count, list(self._sources))


class NCNetwork(Network):
    """The coding network of a side-information graph and an acyclifying set.

    Use build_ncnetwork to construct one.
    """

    def __init__(self, sigraph, vtau, graph, coding_edges):
        self._sigraph = sigraph
        self._vtau = tuple(vtau)
        super(NCNetwork, self).__init__(
            graph,
            [str(w) for w in self._vtau],
            [receiver_label(w) for w in self._vtau],
            coding_edges
        )
        self._message_of = dict((str(v), v) for v in sigraph.vertices)
        self._check_structure()

    def _check_structure(self):
        graph = self.graph
        for v in self._sigraph.vertices:
            if graph.predecessors(dashed_label(v)) != [str(v)]:
                raise RuntimeError('Dashed vertex {} must be fed by its coding edge only.'.format(dashed_label(v)))
        for w in self._vtau:
            if graph.predecessors(receiver_label(w)) != [demand_label(w)]:
                raise RuntimeError('Receiver {} must be fed by ({}, {}) only.'.format(
                    receiver_label(w), demand_label(w), receiver_label(w)))

    @property
    def sigraph(self):
        return self._sigraph

    @property
    def vtau(self):
        return self._vtau

    @property
    def n(self):
        return self._sigraph.n

    def coding_edge(self, v):
        """The coding edge (v, v') of message v."""
        return (str(v), dashed_label(v))

    def message_of(self, label):
        """Message index of an undashed vertex label, None for any other vertex."""
        return self._message_of.get(label)

    def source_of_receiver(self, receiver):
        return self.sources[self.receivers.index(receiver)]

    def to_dict(self):
        data = super(NCNetwork, self).to_dict()
        data['n'] = self.n
        data['vtau'] = list(self._vtau)
        return data


def build_ncnetwork(G, vtau):
    """Build the acyclic multiple-unicast network of G for the vertex set vtau.

    Every message v becomes a coding edge (v, v'). Every w in vtau also gets
    a source w and a receiver D_w' fed by the coding edge (D_w, D_w'). A side
    information edge (v, w) becomes the forwarding edge (v', w), or (v', D_w)
    when w is in vtau.

    Parameters
    ----------
    G: SIGraph
    vtau: iterable of int
        Vertices whose removal leaves G acyclic. Their ascending order fixes
        the basis index of each source.

    Returns
    -------
    network: NCNetwork
        2n + 2|vtau| vertices and n + |vtau| + |E(G)| edges.
    """
    vtau = tuple(sorted(set(vtau)))
    for w in vtau:
        if w not in G.vertices:
            raise ValueError('Vertex {} is not a vertex of the graph.'.format(w))
    chosen = set(vtau)
    rest = [v for v in G.vertices if v not in chosen]
    if not G.to_digraph().induced_subgraph(rest).is_acyclic():
        raise ValueError('Removing {} does not leave the side-information graph acyclic.'.format(list(vtau)))

    vertices = []
    coding = []
    for v in G.vertices:
        vertices.extend([str(v), dashed_label(v)])
        coding.append((str(v), dashed_label(v)))
    for w in vtau:
        vertices.extend([demand_label(w), receiver_label(w)])
        coding.append((demand_label(w), receiver_label(w)))
    forwarding = []
    for w in G.vertices:
        head = demand_label(w) if w in chosen else str(w)
        for v in sorted(G.side_information(w)):
            forwarding.append((dashed_label(v), head))
    graph = Digraph(vertices, coding + forwarding)
    return NCNetwork(G, vtau, graph, coding)


class TrailMap(object):
    """Correspondence between trails of a side-information graph and paths of
    its coding network: message v <-> coding edge (v, v')."""

    def __init__(self, network):
        self.network = network

    def sigraph_cycle_to_nc_paths(self, cycle):
        """Split a cycle of G_SI at its vtau vertices into network paths.

        Parameters
        ----------
        cycle: sequence of int
            Vertices of a G_SI cycle, closing edge implicit.

        Returns
        -------
        paths: list of Path
            One path v_i -> D_{v_{i+1}}' per vtau vertex v_i met by the cycle,
            starting from the first vtau vertex in the given order. A cycle
            through a single vtau vertex gives its unipath.
        """
        network = self.network
        G = network.sigraph
        cycle = tuple(cycle)
        for tail, head in zip(cycle, cycle[1:] + cycle[:1]):
            if tail not in G.side_information(head):
                raise ValueError('({}, {}) is not an edge of the side-information graph.'.format(tail, head))
        hits = [k for k, v in enumerate(cycle) if v in network.vtau]
        if not hits:
            raise ValueError('Cycle {} avoids every vertex of {}.'.format(cycle, list(network.vtau)))
        sequence = cycle[hits[0]:] + cycle[:hits[0]]
        hits = [k for k, v in enumerate(sequence) if v in network.vtau]
        paths = []
        for position, start in enumerate(hits):
            stop = hits[position + 1] if position + 1 < len(hits) else len(sequence)
            following = sequence[stop % len(sequence)]
            labels = []
            for v in sequence[start:stop]:
                labels.extend([str(v), dashed_label(v)])
            labels.extend([demand_label(following), receiver_label(following)])
            paths.append(Path(labels, network.graph))
        return paths

    def nc_path_to_sigraph_trail(self, path):
        """Read the G_SI trail off the coding edges a source -> receiver path uses.

        Returns
        -------
        trail: tuple of int
            The messages whose coding edges the path traverses, followed by the
            message demanded at its receiver. A unipath gives a closed trail
            (first and last entries equal).
        """
        network = self.network
        path = Path(path, network.graph)
        if path.source not in network.sources:
            raise ValueError('Path starts at {}, which is not a source.'.format(path.source))
        if path.target not in network.receivers:
            raise ValueError('Path ends at {}, which is not a receiver.'.format(path.target))
        trail = []
        for tail, head in path.edges():
            v = network.message_of(tail)
            if v is not None and head == dashed_label(v):
                trail.append(v)
        trail.append(int(network.source_of_receiver(path.target)))
        return tuple(trail)
