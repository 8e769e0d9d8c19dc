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

from .exceptions import DualityError
from .linalg import column_rank_of_subset, nullspace_basis, rank


class DualCheckReport(object):
    """Outcome of the dual decodability condition r(S(v) + v) = r(S(v)).

    Attributes
    ----------
    failures: list of int
        Vertices where adding v raises the rank of its side-information columns.
    ranks: dict
        Vertex -> (r(S(v)), r(S(v) + v)).
    """

    def __init__(self, failures, ranks):
        self.failures = list(failures)
        self.ranks = dict(ranks)

    @property
    def passed(self):
        return not self.failures

    def __bool__(self):
        return self.passed

    __nonzero__ = __bool__

    def to_dict(self):
        return {
            'passed': self.passed,
            'failures': self.failures,
            'ranks': dict((str(v), list(pair)) for v, pair in sorted(self.ranks.items())),
        }

    def __repr__(self):
        return 'DualCheckReport(passed={}, failures={})'.format(self.passed, self.failures)


def dual_rank(M, X):
    """Rank of the column set X in the dual of the vector matroid of M.

    Parameters
    ----------
    M: BinMatrix
    X: iterable of int
        0-based column indices.

    Returns
    -------
    rank: int
        |X| - r(E) + r(E - X), E being all columns of M.
    """
    X = set(X)
    for j in X:
        if j < 0 or j >= M.cols:
            raise ValueError('Column index {} out of range for a matrix with {} columns.'.format(j, M.cols))
    rest = [j for j in range(M.cols) if j not in X]
    return len(X) - rank(M) + column_rank_of_subset(M, rest)


def check_dual_condition(G, A):
    """Check whether the null space of A is a valid index code for G.

    Column v - 1 of A belongs to message v. B = nullspace_basis(A) is a valid
    index code iff, in the column matroid of A, every v lies in the closure of
    its side-information set S(v).

    Parameters
    ----------
    G: SIGraph
    A: BinMatrix
        Matrix with n columns, typically the coding-edge vectors of a network code.

    Returns
    -------
    report: DualCheckReport
    """
    if A.cols != G.n:
        raise ValueError('Matrix has {} columns but the graph has {} messages.'.format(A.cols, G.n))
    failures = []
    ranks = {}
    for v in G.vertices:
        side = [j - 1 for j in sorted(G.side_information(v))]
        pair = (column_rank_of_subset(A, side), column_rank_of_subset(A, side + [v - 1]))
        ranks[v] = pair
        if pair[0] != pair[1]:
            failures.append(v)
    return DualCheckReport(failures, ranks)


def dualize_to_index_code(G, A, tau=None):
    """Turn a coding matrix satisfying the dual condition into an index code.

    Parameters
    ----------
    G: SIGraph
    A: BinMatrix
        Matrix with n columns passing check_dual_condition.
    tau: int, optional
        Expected rank of A. A rank-deficient A would give a code longer than
        n - tau and is refused.

    Returns
    -------
    B: BinMatrix
        (n - rank(A)) x n index code in reduced row-echelon form.
    """
    report = check_dual_condition(G, A)
    if not report.passed:
        raise DualityError('The dual condition fails at vertices {}.'.format(report.failures),
                           failures=report.failures)
    if tau is not None and rank(A) != tau:
        raise DualityError('Coding matrix has rank {} but {} was expected; refusing to dualize.'.format(
            rank(A), tau))
    return nullspace_basis(A)
