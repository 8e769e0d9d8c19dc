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

import io
import itertools
import re

import networkx as nx

from .config import DEFAULT_LIMITS, merge_limits
from .digraph import Digraph
from .exceptions import CapExceededError, SigFormatError
from .linalg import BinMatrix, _packed_rank, _packed_row_spaces, column_rank_of_subset


class SIGraph(object):
    """Side-information graph of a single-unicast index coding instance.

    Receivers and messages are the vertices 1..n. The edge (j, i) means that
    receiver i already knows message x_j, i.e. j is in S(i).

    Parameters
    ----------
    n: int
        Number of messages (and receivers).
    side_information: dict, optional
        Receiver i -> iterable of the message indices it knows.
    """

    def __init__(self, n, side_information=None):
        if not isinstance(n, int) or n < 0:
            raise ValueError('Invalid number of messages: {}'.format(n))
        self._n = n
        side = dict((i, frozenset()) for i in range(1, n + 1))
        for i, members in (side_information or {}).items():
            if i not in side:
                raise ValueError('Receiver {} is outside 1..{}.'.format(i, n))
            members = frozenset(members)
            for j in members:
                if j not in side:
                    raise ValueError('Message {} known at receiver {} is outside 1..{}.'.format(j, i, n))
            if i in members:
                raise ValueError('Receiver {} cannot have its own message as side information.'.format(i))
            side[i] = members
        self._side = side
        self._digraph = None

    @classmethod
    def from_edges(cls, n, edges):
        """Build a graph from (j, i) pairs meaning "receiver i knows x_j"."""
        side = dict((i, set()) for i in range(1, n + 1))
        for j, i in edges:
            if i not in side:
                raise ValueError('Receiver {} is outside 1..{}.'.format(i, n))
            side[i].add(j)
        return cls(n, side)

    @property
    def n(self):
        return self._n

    @property
    def vertices(self):
        return tuple(range(1, self._n + 1))

    def side_information(self, i):
        """Return S(i), the messages known at receiver i."""
        if i not in self._side:
            raise ValueError('Unknown receiver: {}'.format(i))
        return self._side[i]

    @property
    def edges(self):
        return sorted((j, i) for i, members in self._side.items() for j in members)

    @property
    def edge_count(self):
        return sum(len(members) for members in self._side.values())

    def to_digraph(self):
        if self._digraph is None:
            self._digraph = Digraph(self.vertices, self.edges)
        return self._digraph

    def with_edge(self, j, i):
        """Return a copy where receiver i additionally knows x_j."""
        side = dict(self._side)
        side[i] = side[i] | {j}
        return SIGraph(self._n, side)

    def to_dot(self, name='G_SI'):
        return self.to_digraph().to_dot(name=name)

    def __eq__(self, other):
        if not isinstance(other, SIGraph):
            return NotImplemented
        return self._n == other._n and self._side == other._side

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self._n, tuple(sorted(self.edges))))

    def __repr__(self):
        return 'SIGraph(n={}, edges={})'.format(self._n, self.edges)


_HEADER = re.compile(r'^n\s*=\s*(\d+)$')


def _parse_vertex(token, n, line_number):
    try:
        value = int(token)
    except ValueError:
        raise SigFormatError('invalid vertex \'{}\''.format(token), line_number)
    if value < 1 or value > n:
        raise SigFormatError('vertex {} is outside 1..{}'.format(value, n), line_number)
    return value


def parse_sig(text):
    """Parse the .sig text format.

    The first non-comment line is ``n=<count>``; every further line reads
    ``i : j k l`` and lists S(i). Receivers that are not listed know nothing.
    ``#`` starts a comment.

    Parameters
    ----------
    text: str
        File contents.

    Returns
    -------
    G: SIGraph
    """
    n = None
    side = {}
    for line_number, raw in enumerate(text.splitlines(), 1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        if n is None:
            match = _HEADER.match(line)
            if match is None:
                raise SigFormatError('expected "n=<count>" header, got \'{}\''.format(line), line_number)
            n = int(match.group(1))
            continue
        if ':' not in line:
            raise SigFormatError('expected "i : j k ...", got \'{}\''.format(line), line_number)
        head, _, tail = line.partition(':')
        i = _parse_vertex(head.strip(), n, line_number)
        if i in side:
            raise SigFormatError('receiver {} is listed twice'.format(i), line_number)
        members = [_parse_vertex(token, n, line_number) for token in tail.split()]
        if i in members:
            raise SigFormatError('receiver {} cannot know its own message'.format(i), line_number)
        side[i] = members
    if n is None:
        raise SigFormatError('missing "n=<count>" header')
    return SIGraph(n, side)


def format_sig(G, comment=None):
    """Render G in the .sig text format, one line per receiver."""
    out = io.StringIO()
    if comment:
        for line in comment.splitlines():
            out.write(u'# {}\n'.format(line))
    out.write(u'n={}\n'.format(G.n))
    for i in G.vertices:
        members = sorted(G.side_information(i))
        out.write(u'{} :{}\n'.format(i, ''.join(' {}'.format(j) for j in members)))
    return out.getvalue()


def read_sig(path):
    with io.open(path, encoding='utf-8') as handle:
        return parse_sig(handle.read())


def write_sig(G, path, comment=None):
    with io.open(path, 'w', encoding='utf-8') as handle:
        handle.write(format_sig(G, comment=comment))


class BoundsReport(object):
    """The bound chain MAIS = n - tau <= minrank2 <= n - nu for one graph."""

    def __init__(self, n, mais, tau, nu, all_min_fvs, minrank2=None):
        self.n = n
        self.mais = mais
        self.tau = tau
        self.nu = nu
        self.all_min_fvs = [tuple(vertex_set) for vertex_set in all_min_fvs]
        self.minrank2 = minrank2

    def holds(self):
        if self.mais + self.tau != self.n:
            return False
        if self.minrank2 is not None:
            return self.mais <= self.minrank2 <= self.n - self.nu
        return self.mais <= self.n - self.nu

    def check(self):
        """Raise RuntimeError when the bound chain does not hold."""
        if not self.holds():
            raise RuntimeError('Bound chain violated: {}'.format(self.to_dict()))
        return self

    def to_dict(self):
        return {
            'n': self.n,
            'mais': self.mais,
            'tau': self.tau,
            'nu': self.nu,
            'minrank2': self.minrank2,
            'all_min_fvs': [list(vertex_set) for vertex_set in self.all_min_fvs],
        }

    def __repr__(self):
        return 'BoundsReport(mais={}, tau={}, nu={}, minrank2={})'.format(
            self.mais, self.tau, self.nu, self.minrank2)


def _check_exhaustive_size(G, max_n, cap):
    limit = DEFAULT_LIMITS[cap] if max_n is None else max_n
    if G.n > limit:
        raise CapExceededError(
            'Exhaustive search is capped at n={} ({}), got n={}.'.format(limit, cap, G.n),
            cap=cap, value=G.n
        )


def _acyclifying_sets(G, size):
    graph = G.to_digraph().nx_graph
    vertices = G.vertices
    for removed in itertools.combinations(vertices, size):
        dropped = set(removed)
        kept = [v for v in vertices if v not in dropped]
        if nx.is_directed_acyclic_graph(graph.subgraph(kept)):
            yield removed


def min_feedback_vertex_sets(G, max_n=None):
    """Find the feedback vertex number and every minimum feedback vertex set.

    Parameters
    ----------
    G: SIGraph
        The side-information graph.
    max_n: int, optional
        Largest n accepted by the exhaustive subset search.

    Returns
    -------
    tau: int
        Minimum number of vertices whose removal leaves G acyclic.
    sets: list of tuple
        All such vertex sets of size tau, sorted lexicographically.
    """
    _check_exhaustive_size(G, max_n, 'mais_max_n')
    for size in range(G.n + 1):
        sets = list(_acyclifying_sets(G, size))
        if sets:
            return size, sets
    return G.n, [G.vertices]


def feedback_number(G, max_n=None):
    """Return tau without listing every minimum feedback vertex set."""
    _check_exhaustive_size(G, max_n, 'mais_max_n')
    for size in range(G.n + 1):
        if next(_acyclifying_sets(G, size), None) is not None:
            return size
    return G.n


def mais(G, max_n=None):
    """Size of the maximum acyclic induced subgraph of G (n - tau)."""
    return G.n - feedback_number(G, max_n=max_n)


def _cycle_mask(cycle):
    mask = 0
    for v in cycle:
        mask |= 1 << v
    return mask


def _max_packing(masks, used):
    candidates = [mask for mask in masks if not mask & used]
    if not candidates:
        return 0
    union = 0
    for mask in candidates:
        union |= mask
    lowest = union & -union
    # Either no chosen cycle covers the lowest vertex, or exactly one does.
    best = _max_packing(candidates, used | lowest)
    for mask in candidates:
        if mask & lowest:
            best = max(best, 1 + _max_packing(candidates, used | mask))
    return best


def max_disjoint_cycles(G, cycle_limit=None):
    """Maximum number of vertex-disjoint directed cycles in G.

    Parameters
    ----------
    G: SIGraph
    cycle_limit: int, optional
        Cap on the number of enumerated cycles.

    Returns
    -------
    nu: int
    """
    limit = DEFAULT_LIMITS['cycle_limit'] if cycle_limit is None else cycle_limit
    cycles, overflow = G.to_digraph().enumerate_cycles(limit)
    if overflow:
        raise CapExceededError('More than {} cycles; nu cannot be computed exactly.'.format(limit),
                               cap='cycle_limit', value=limit)
    masks = sorted(set(_cycle_mask(cycle) for cycle in cycles))
    # A cycle whose vertex set contains another cycle's is never needed.
    minimal = [mask for mask in masks if not any(other != mask and other & mask == other for other in masks)]
    return _max_packing(minimal, 0)


def unicycles(G, vtau, w, cycle_limit=None):
    """Cycles of G through w that avoid every other vertex of vtau."""
    limit = DEFAULT_LIMITS['cycle_limit'] if cycle_limit is None else cycle_limit
    cycles, overflow = G.to_digraph().enumerate_cycles(limit)
    if overflow:
        raise CapExceededError('More than {} cycles in the side-information graph.'.format(limit),
                               cap='cycle_limit', value=limit)
    others = set(vtau) - {w}
    return [cycle for cycle in cycles if w in cycle and not others.intersection(cycle)]


def index_code_failures(G, B):
    """Receivers that cannot decode from the broadcast B.

    Receiver v decodes iff r([n] - S(v)) = 1 + r([n] - S(v) - {v}), where r
    is the column rank function of B.

    Parameters
    ----------
    G: SIGraph
    B: BinMatrix
        Coding matrix with one column per message.

    Returns
    -------
    failures: list of int
        Receivers violating the rank condition, ascending.
    """
    if B.cols != G.n:
        raise ValueError('Coding matrix has {} columns but the graph has {} messages.'.format(B.cols, G.n))
    failures = []
    for v in G.vertices:
        unknown = [j - 1 for j in G.vertices if j not in G.side_information(v)]
        interfering = [j for j in unknown if j != v - 1]
        if column_rank_of_subset(B, unknown) != 1 + column_rank_of_subset(B, interfering):
            failures.append(v)
    return failures


def is_valid_index_code(G, B):
    """True iff every receiver of G decodes its message from B."""
    return not index_code_failures(G, B)


def _decoding_masks(G):
    n = G.n
    full = (1 << n) - 1
    masks = []
    for v in G.vertices:
        known = 0
        for j in G.side_information(v):
            known |= 1 << (n - j)
        unknown = full & ~known
        masks.append((unknown, unknown & ~(1 << (n - v))))
    return masks


def _packed_valid(rows, masks):
    for unknown, interfering in masks:
        if _packed_rank([row & unknown for row in rows]) != 1 + _packed_rank([row & interfering for row in rows]):
            return False
    return True


def minrank_search(G, max_n=None, lower_bound=0):
    """Shortest valid scalar linear index code over GF(2), by exhaustive search.

    Validity depends only on the row space of the coding matrix, so one
    reduced row-echelon representative per subspace is tried, shortest first.

    Parameters
    ----------
    G: SIGraph
    max_n: int, optional
        Largest n accepted by the subspace enumeration.
    lower_bound: int, default 0
        Smallest length to try.

    Returns
    -------
    length: int
        minrank of G over GF(2).
    B: BinMatrix
        The first valid length x n code found.
    """
    _check_exhaustive_size(G, max_n, 'minrank_max_n')
    masks = _decoding_masks(G)
    for k in range(max(lower_bound, 0), G.n + 1):
        for rows in _packed_row_spaces(G.n, k):
            if _packed_valid(rows, masks):
                return k, BinMatrix.from_packed(rows, G.n)
    raise RuntimeError('No valid index code of length at most {} was found.'.format(G.n))


def minrank2(G, max_n=None, lower_bound=0):
    """Minimum length of a valid scalar linear binary index code for G."""
    return minrank_search(G, max_n=max_n, lower_bound=lower_bound)[0]


def compute_bounds(G, with_minrank=True, limits=None):
    """Compute MAIS, tau, nu and (when small enough) minrank2 of G.

    Parameters
    ----------
    G: SIGraph
    with_minrank: bool, default True
        Run the minrank search when n is within the minrank_max_n cap.
    limits: dict, optional
        Caps overriding icnc.config.DEFAULT_LIMITS.

    Returns
    -------
    report: BoundsReport
    """
    limits = merge_limits(limits)
    tau, sets = min_feedback_vertex_sets(G, max_n=limits['mais_max_n'])
    nu = max_disjoint_cycles(G, cycle_limit=limits['cycle_limit'])
    minrank = None
    if with_minrank and G.n <= limits['minrank_max_n']:
        minrank = minrank2(G, max_n=limits['minrank_max_n'])
    return BoundsReport(G.n, G.n - tau, tau, nu, sets, minrank2=minrank)
