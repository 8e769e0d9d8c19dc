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

from .digraph import Path
from .exceptions import AssignmentConflictError, InfeasibleCodeError
from .linalg import BinMatrix, BinVector, in_span, inverse, nullspace_basis, rank
from .sideinfo import index_code_failures
from .transform import NCNetwork


class FeasibilityReport(object):
    """Why a network code is or is not feasible.

    Attributes
    ----------
    flow_violations: list of edge
        Edges whose vector is not a combination of the vectors entering their tail.
    decoding_violations: list of vertex
        Receivers whose demand edge does not carry their source's basis vector.
    """

    def __init__(self, flow_violations=(), decoding_violations=()):
        self.flow_violations = list(flow_violations)
        self.decoding_violations = list(decoding_violations)

    @property
    def feasible(self):
        return not self.flow_violations and not self.decoding_violations

    def __bool__(self):
        return self.feasible

    __nonzero__ = __bool__

    def to_dict(self):
        return {
            'feasible': self.feasible,
            'flow_violations': [[str(tail), str(head)] for tail, head in self.flow_violations],
            'decoding_violations': [str(receiver) for receiver in self.decoding_violations],
        }

    def __repr__(self):
        return 'FeasibilityReport(feasible={}, flow_violations={}, decoding_violations={})'.format(
            self.feasible, self.flow_violations, self.decoding_violations)


class NetworkCode(object):
    """A linear network code: one global encoding vector per edge.

    Values are immutable; assignment helpers return new codes. Edges without
    an assignment carry the zero vector.

    Parameters
    ----------
    network: Network
        The network the code lives on.
    dim: int, optional
        Length of the encoding vectors, by default the number of sources.
    vectors: dict, optional
        Edge -> BinVector.
    sources: sequence, optional
        Sources in basis order: the source at position i owns coordinate i.
        Defaults to the network's source order.
    """

    def __init__(self, network, dim=None, vectors=None, sources=None):
        sources = tuple(network.sources if sources is None else sources)
        dim = len(sources) if dim is None else dim
        if len(sources) != dim:
            raise ValueError('A code of dimension {} needs {} sources, got {}.'.format(dim, dim, len(sources)))
        if len(set(sources)) != len(sources):
            raise ValueError('Duplicate source in {}.'.format(list(sources)))
        for source in sources:
            if source not in network.sources:
                raise ValueError('{} is not a source of the network.'.format(source))
        vectors = dict(vectors or {})
        for (tail, head), vector in vectors.items():
            if not network.graph.has_edge(tail, head):
                raise ValueError('({}, {}) is not an edge of the network.'.format(tail, head))
            if vector.dim != dim:
                raise ValueError('Edge ({}, {}) carries a vector of dimension {}, expected {}.'.format(
                    tail, head, vector.dim, dim))
        self._network = network
        self._dim = dim
        self._sources = sources
        self._vectors = vectors

    @property
    def network(self):
        return self._network

    @property
    def dim(self):
        return self._dim

    @property
    def sources(self):
        return self._sources

    @property
    def assigned(self):
        """Explicitly assigned edges (a copy)."""
        return dict(self._vectors)

    @property
    def vectors(self):
        """Every edge of the network with its vector, zero where unassigned."""
        return dict((edge, self.vector(edge)) for edge in self._network.edges)

    def basis_index(self, source):
        return self._sources.index(source)

    def basis_vector(self, source):
        return BinVector.basis(self._dim, self.basis_index(source))

    def vector(self, edge):
        vector = self._vectors.get(tuple(edge))
        return BinVector.zeros(self._dim) if vector is None else vector

    def updated(self, vectors):
        merged = dict(self._vectors)
        merged.update(vectors)
        return NetworkCode(self._network, self._dim, merged, self._sources)

    def reorder(self, sources):
        """Return the same code expressed in the basis order given by sources."""
        sources = tuple(sources)
        if sorted(sources, key=str) != sorted(self._sources, key=str):
            raise ValueError('{} is not a permutation of {}.'.format(list(sources), list(self._sources)))
        order = [self._sources.index(source) for source in sources]
        vectors = dict((edge, vector.permute(order)) for edge, vector in self._vectors.items())
        return NetworkCode(self._network, self._dim, vectors, sources)

    def to_json(self):
        """List of {"edge": [tail, head], "vector": bitstring} for every edge."""
        return [{'edge': [str(tail), str(head)], 'vector': self.vector((tail, head)).to_bitstring()}
                for tail, head in self._network.edges]

    @classmethod
    def from_json(cls, network, entries, sources=None):
        labels = dict((str(v), v) for v in network.graph.vertices)
        vectors = {}
        for entry in entries:
            tail, head = entry['edge']
            if tail not in labels or head not in labels:
                raise ValueError('Unknown edge {} in code.'.format(entry['edge']))
            vectors[(labels[tail], labels[head])] = BinVector.from_bitstring(entry['vector'])
        dims = set(vector.dim for vector in vectors.values())
        if len(dims) > 1:
            raise ValueError('Code mixes vector lengths {}.'.format(sorted(dims)))
        return cls(network, dims.pop() if dims else None, vectors, sources)

    def __repr__(self):
        return 'NetworkCode(dim={}, assigned={}, sources={})'.format(
            self._dim, len(self._vectors), list(self._sources))


def assign_along_path(code, path, vector):
    """Assign one vector to every edge of a path.

    Assignments are write-once: an edge that already carries a different
    nonzero vector raises AssignmentConflictError.

    Parameters
    ----------
    code: NetworkCode
    path: sequence of vertices
        Consecutive vertices must be joined by network edges.
    vector: BinVector

    Returns
    -------
    code: NetworkCode
        A new code with the path assigned.
    """
    path = Path(path, code.network.graph)
    if vector.dim != code.dim:
        raise ValueError('Vector of dimension {} does not fit a code of dimension {}.'.format(vector.dim, code.dim))
    current = code.assigned
    updates = {}
    for edge in path.edges():
        prior = current.get(edge)
        if prior is not None and not prior.is_zero() and prior != vector:
            raise AssignmentConflictError('Edge {} already carries {}; cannot assign {}.'.format(
                edge, prior.to_bitstring(), vector.to_bitstring()), edge=edge)
        updates[edge] = vector
    return code.updated(updates)


def _span_matrix(vectors, dim):
    return BinMatrix([list(vector) for vector in vectors], cols=dim)


def check_feasible(code):
    """Check flow conservation and decodability of a network code.

    An edge leaving a source may carry a multiple of that source's basis
    vector; any other edge must carry a combination of the vectors entering
    its tail. Each receiver's demand edge must carry exactly the basis vector
    of its source.

    Parameters
    ----------
    code: NetworkCode

    Returns
    -------
    report: FeasibilityReport
    """
    network = code.network
    graph = network.graph
    flow = []
    for edge in graph.edges:
        vector = code.vector(edge)
        if vector.is_zero():
            continue
        tail = edge[0]
        if tail in network.sources:
            generators = [code.basis_vector(tail)] if tail in code.sources else []
        else:
            generators = [code.vector(incoming) for incoming in graph.in_edges(tail)]
        if not in_span(vector, _span_matrix(generators, code.dim)):
            flow.append(edge)
    decoding = []
    for source, receiver in zip(network.sources, network.receivers):
        if source not in code.sources:
            decoding.append(receiver)
        elif code.vector(network.demand_edge(receiver)) != code.basis_vector(source):
            decoding.append(receiver)
    return FeasibilityReport(flow, decoding)


def extract_coding_matrix(code):
    """Stack the vectors of the coding edges (v, v') into the matrix A.

    Parameters
    ----------
    code: NetworkCode
        A feasible code on a network built by build_ncnetwork.

    Returns
    -------
    A: BinMatrix
        dim x n matrix whose column v - 1 is the vector on (v, v').
    """
    network = code.network
    if not isinstance(network, NCNetwork):
        raise TypeError('Coding matrix extraction needs a network built by build_ncnetwork.')
    report = check_feasible(code)
    if not report.feasible:
        raise InfeasibleCodeError('Refusing to extract a coding matrix from an infeasible code: {}'.format(
            report), report=report)
    columns = [code.vector(network.coding_edge(v)) for v in network.sigraph.vertices]
    return BinMatrix([[column[i] for column in columns] for i in range(code.dim)], cols=network.n)


def merge_decomposed_codes(code1, code2):
    """Merge codes living on edge-disjoint parts of one network.

    code1's vectors occupy the low coordinates and code2's the high ones;
    the merged basis order is code1.sources followed by code2.sources.

    Parameters
    ----------
    code1: NetworkCode
    code2: NetworkCode
        Both networks must have been cut out of the same root network.

    Returns
    -------
    code: NetworkCode
        A code of dimension code1.dim + code2.dim on the root network.
    """
    root = code1.network.root
    if code2.network.root is not root:
        raise ValueError('Only codes on parts of the same network can be merged.')
    dim = code1.dim + code2.dim
    vectors = {}
    for edge, vector in code1.assigned.items():
        if not vector.is_zero():
            vectors[edge] = vector.embed(dim, 0)
    for edge, vector in code2.assigned.items():
        if vector.is_zero():
            continue
        if edge in vectors:
            raise AssignmentConflictError('Both codes assign a nonzero vector to edge {}.'.format(edge), edge=edge)
        vectors[edge] = vector.embed(dim, code1.dim)
    return NetworkCode(root, dim, vectors, code1.sources + code2.sources)


def code_from_index_code(network, B):
    """Build a feasible network code from a valid index code of length n - tau.

    The null space A of B is brought to the form where the column of every
    source w is its basis vector. The column of message v then goes on the
    coding edge (v, v') and on every forwarding edge leaving v'.

    Parameters
    ----------
    network: NCNetwork
    B: BinMatrix
        Valid index code for network.sigraph.

    Returns
    -------
    code: NetworkCode
    """
    G = network.sigraph
    failures = index_code_failures(G, B)
    if failures:
        raise ValueError('Not a valid index code; receivers {} cannot decode.'.format(failures))
    A = nullspace_basis(B)
    if A.rows != network.tau:
        raise ValueError('The dual of a length-{} code has rank {}, but the network has {} sources.'.format(
            rank(B), A.rows, network.tau))
    source_columns = A.select_columns([w - 1 for w in network.vtau])
    try:
        A = inverse(source_columns).dot(A)
    except ValueError:
        raise ValueError('The source columns of the dual code are dependent.')

    vectors = {}
    for v in G.vertices:
        column = A.column(v - 1)
        vectors[network.coding_edge(v)] = column
        for edge in network.graph.out_edges(network.coding_edge(v)[1]):
            vectors[edge] = column
    for source, receiver in zip(network.sources, network.receivers):
        vectors[network.demand_edge(receiver)] = BinVector.basis(network.tau, network.source_index(source))
    return NetworkCode(network, network.tau, vectors)
