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

from sklearn.utils import check_random_state

from .sideinfo import SIGraph


FINAL_CONFIGURATIONS = ('S21', 'S22', 'S23', 'S24')

# Vertices 1, 2 and 3 form the feedback vertex set; 4 -> 5 -> 6 is the
# shared trunk every unipath runs along.
_TRUNK = {4: (1, 2), 5: (4, 3), 6: (5,)}

_CANONICAL_SIDE_INFORMATION = {
    ('A', 'S21'): {1: (6, 2, 3), 2: (6, 1, 3), 3: (5, 1, 2)},
    ('A', 'S22'): {1: (6, 2, 3), 2: (6, 1, 3), 3: (5, 4, 2)},
    ('A', 'S23'): {6: (5, 3), 1: (6, 2), 2: (6, 1, 3), 3: (5, 1, 2)},
    ('A', 'S24'): {6: (5, 3), 1: (6, 2), 2: (6, 1, 3), 3: (5, 4, 2)},
    ('B', 'S21'): {6: (5, 2), 1: (6, 3), 2: (5, 1, 3), 3: (6, 1, 2)},
    ('B', 'S22'): {1: (6, 2, 3), 2: (5, 1, 3), 3: (6, 1, 2)},
    ('B', 'S23'): {1: (6, 2, 3), 2: (5, 1, 3), 3: (6, 4, 2)},
    ('B', 'S24'): {6: (5, 2), 1: (6, 3), 2: (5, 1, 3), 3: (6, 4, 2)},
}

# Style B configurations that cannot arise from a minimal feedback vertex
# set; their graphs have tau = 2, so callers force V_tau = {1, 2, 3}.
_ILLEGITIMATE_SIDE_INFORMATION = {
    10: {1: (6, 3), 2: (5, 1, 3), 3: (6, 7), 4: (1, 2), 5: (4, 3), 6: (5, 2), 7: (4,)},
    12: {1: (6, 3), 2: (5, 1, 3), 3: (6, 4), 4: (1, 2), 5: (4, 3), 6: (5, 7), 7: (2,)},
}


def _side_information(G):
    return dict((i, set(G.side_information(i))) for i in G.vertices)


def canonical_instance(style, reduced):
    """Smallest side-information graph whose network has the given final configuration.

    Parameters
    ----------
    style: {'A', 'B'}
    reduced: {'S21', 'S22', 'S23', 'S24'}

    Returns
    -------
    G: SIGraph
        Six messages; {1, 2, 3} is its first minimum feedback vertex set.
    """
    key = (style, reduced)
    if key not in _CANONICAL_SIDE_INFORMATION:
        raise ValueError('No final configuration {} in style {}.'.format(reduced, style))
    side = dict(_TRUNK)
    side.update(_CANONICAL_SIDE_INFORMATION[key])
    return SIGraph(6, side)


def subdivide(G, edge, count):
    """Replace the edge (j, i) of G by a path through count new messages."""
    j, i = edge
    if j not in G.side_information(i):
        raise ValueError('({}, {}) is not an edge of the graph.'.format(j, i))
    side = _side_information(G)
    n = G.n
    previous = j
    for _ in range(count):
        n += 1
        side[n] = {previous}
        previous = n
    side[i] = (side[i] - {j}) | {previous}
    return SIGraph(n, side)


def randomized_instance(style, reduced, random_state=None, max_messages=12):
    """Canonical instance with randomly subdivided edges.

    Each edge, visited in random order, is replaced by a path of length one
    to three while the graph has at most max_messages messages. Subdividing
    keeps the cycle structure, so the instance still has tau = 3 and the
    same final configuration.

    Parameters
    ----------
    style: {'A', 'B'}
    reduced: {'S21', 'S22', 'S23', 'S24'}
    random_state: int, RandomState instance or None
    max_messages: int, default 12

    Returns
    -------
    G: SIGraph
    """
    rng = check_random_state(random_state)
    G = canonical_instance(style, reduced)
    edges = G.edges
    for position in rng.permutation(len(edges)):
        count = min(int(rng.randint(0, 3)), max_messages - G.n)
        if count > 0:
            G = subdivide(G, edges[position], count)
    return G


def illegitimate_instance(config_id):
    """Graph whose network on V_tau = {1, 2, 3} has an illegitimate style B configuration.

    The graph itself has tau = 2, which is why the configuration cannot come
    out of a minimum feedback vertex set.
    """
    if config_id not in _ILLEGITIMATE_SIDE_INFORMATION:
        raise ValueError('Only style B configurations {} are illegitimate.'.format(
            sorted(_ILLEGITIMATE_SIDE_INFORMATION)))
    return SIGraph(7, _ILLEGITIMATE_SIDE_INFORMATION[config_id])


def decomposable_instance():
    """tau = 3 graph whose network splits off the unipath of message 1."""
    return SIGraph(5, {1: (4,), 4: (1,), 5: (2, 3), 2: (5, 3), 3: (5, 2)})


def two_source_instance():
    """tau = 2 graph made of two disjoint cycles through messages 1 and 2, linked by message 3."""
    return SIGraph(11, {
        4: (1,), 6: (4,), 9: (6,), 10: (9,), 1: (10, 7),
        11: (2,), 5: (11, 3), 7: (5,), 8: (7,), 2: (8,), 3: (1,),
    })
