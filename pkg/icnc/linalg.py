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

import itertools

import numpy as np


SUPPORTED_FIELDS = (2, 3, 5, 7)


def _check_field(field):
    if field not in SUPPORTED_FIELDS:
        raise ValueError('Unsupported field order: {}. Use one of {}.'.format(field, SUPPORTED_FIELDS))
    return field


def _pack(values):
    """Pack a 0/1 sequence into an int, first entry in the most significant bit."""
    packed = 0
    for value in values:
        packed = (packed << 1) | int(value)
    return packed


def _unpack(packed, width):
    return [(packed >> (width - 1 - j)) & 1 for j in range(width)]


def _column_mask(cols, indices):
    mask = 0
    for j in indices:
        mask |= 1 << (cols - 1 - j)
    return mask


def _packed_rank(rows):
    basis = {}
    for row in rows:
        while row:
            lead = row.bit_length() - 1
            if lead not in basis:
                basis[lead] = row
                break
            row ^= basis[lead]
    return len(basis)


def _packed_rref(rows, cols):
    pending = [row for row in rows if row]
    reduced = []
    pivots = []
    for col in range(cols):
        bit = 1 << (cols - 1 - col)
        pick = next((i for i, row in enumerate(pending) if row & bit), None)
        if pick is None:
            continue
        pivot_row = pending.pop(pick)
        pending = [row ^ pivot_row if row & bit else row for row in pending]
        pending = [row for row in pending if row]
        reduced = [row ^ pivot_row if row & bit else row for row in reduced]
        reduced.append(pivot_row)
        pivots.append(col)
        if not pending:
            break
    return reduced, pivots


def _modular_rref(array, field):
    work = np.array(array, dtype=np.int64) % field
    n_rows, n_cols = work.shape
    pivots = []
    top = 0
    for col in range(n_cols):
        if top == n_rows:
            break
        nonzero = np.nonzero(work[top:, col])[0]
        if nonzero.size == 0:
            continue
        pick = top + int(nonzero[0])
        work[[top, pick]] = work[[pick, top]]
        inverse = pow(int(work[top, col]), field - 2, field)
        work[top] = (work[top] * inverse) % field
        for i in range(n_rows):
            if i != top and work[i, col]:
                work[i] = (work[i] - work[i, col] * work[top]) % field
        pivots.append(col)
        top += 1
    return work[:top], pivots


class BinVector(object):
    """A vector over GF(2), or over a small prime field when field is given."""

    __slots__ = ('_entries', '_field')

    def __init__(self, entries, field=2):
        self._field = _check_field(field)
        entries = tuple(int(value) for value in entries)
        for value in entries:
            if value < 0 or value >= field:
                raise ValueError('Entry {} is outside GF({}).'.format(value, field))
        self._entries = entries

    @classmethod
    def zeros(cls, dim, field=2):
        return cls((0,) * dim, field=field)

    @classmethod
    def basis(cls, dim, index, field=2):
        """Return the standard basis vector e_index of length dim (0-based index)."""
        if index < 0 or index >= dim:
            raise ValueError('Basis index {} out of range for dimension {}.'.format(index, dim))
        entries = [0] * dim
        entries[index] = 1
        return cls(entries, field=field)

    @classmethod
    def from_bitstring(cls, text, field=2):
        return cls([int(char) for char in text.strip()], field=field)

    @property
    def dim(self):
        return len(self._entries)

    @property
    def field(self):
        return self._field

    @property
    def entries(self):
        return self._entries

    @property
    def packed(self):
        return _pack(self._entries)

    def is_zero(self):
        return not any(self._entries)

    def embed(self, dim, offset=0):
        """Zero-pad into a vector of length dim, starting at coordinate offset."""
        if offset < 0 or offset + self.dim > dim:
            raise ValueError('Cannot embed a {}-vector at offset {} into dimension {}.'.format(
                self.dim, offset, dim))
        entries = [0] * dim
        entries[offset:offset + self.dim] = self._entries
        return BinVector(entries, field=self._field)

    def permute(self, order):
        """Return the vector whose coordinate i is coordinate order[i] of this one."""
        return BinVector([self._entries[j] for j in order], field=self._field)

    def to_bitstring(self):
        return ''.join(str(value) for value in self._entries)

    def __add__(self, other):
        if not isinstance(other, BinVector):
            return NotImplemented
        if other.dim != self.dim or other.field != self.field:
            raise ValueError('Cannot add vectors of dimension {} and {}.'.format(self.dim, other.dim))
        return BinVector([(a + b) % self._field for a, b in zip(self._entries, other._entries)],
                         field=self._field)

    def __len__(self):
        return len(self._entries)

    def __iter__(self):
        return iter(self._entries)

    def __getitem__(self, index):
        return self._entries[index]

    def __eq__(self, other):
        if not isinstance(other, BinVector):
            return NotImplemented
        return self._field == other._field and self._entries == other._entries

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self._field, self._entries))

    def __repr__(self):
        return 'BinVector(\'{}\')'.format(self.to_bitstring())


class BinMatrix(object):
    """An immutable matrix over GF(2) (or a small prime field).

    Entries are held in a read-only numpy array. Over GF(2) the rows are also
    packed into Python ints, column 0 in the most significant bit, which is the
    representation rank and elimination work on.
    """

    def __init__(self, entries, cols=None, field=2):
        self._field = _check_field(field)
        array = np.array(entries, dtype=np.int64)
        if array.size == 0:
            n_rows = array.shape[0] if array.ndim == 2 else 0
            if cols is None:
                cols = array.shape[1] if array.ndim == 2 else 0
            array = np.zeros((n_rows, cols), dtype=np.int64)
        if array.ndim != 2:
            raise ValueError('A matrix needs a 2-dimensional entry grid, got {} dimensions.'.format(array.ndim))
        if cols is not None and array.shape[1] != cols:
            raise ValueError('Expected {} columns, got {}.'.format(cols, array.shape[1]))
        if array.size and (array.min() < 0 or array.max() >= field):
            raise ValueError('Matrix entries must lie in GF({}).'.format(field))
        array.setflags(write=False)
        self._array = array
        self._packed = None

    @classmethod
    def from_packed(cls, rows, cols):
        """Build a GF(2) matrix from packed int rows of width cols."""
        return cls([_unpack(row, cols) for row in rows], cols=cols)

    @classmethod
    def from_bitstrings(cls, rows, cols=None, field=2):
        return cls([[int(char) for char in row.strip()] for row in rows], cols=cols, field=field)

    @classmethod
    def identity(cls, n, field=2):
        return cls(np.eye(n, dtype=np.int64), cols=n, field=field)

    @classmethod
    def zeros(cls, rows, cols, field=2):
        return cls(np.zeros((rows, cols), dtype=np.int64), cols=cols, field=field)

    @classmethod
    def stack(cls, matrices, cols=None, field=2):
        """Stack matrices vertically. cols is required when matrices is empty."""
        matrices = list(matrices)
        if not matrices:
            return cls.zeros(0, cols or 0, field=field)
        widths = set(matrix.cols for matrix in matrices)
        if len(widths) != 1:
            raise ValueError('Cannot stack matrices with column counts {}.'.format(sorted(widths)))
        return cls(np.vstack([matrix._array for matrix in matrices]), cols=widths.pop(),
                   field=matrices[0].field)

    @property
    def rows(self):
        return self._array.shape[0]

    @property
    def cols(self):
        return self._array.shape[1]

    @property
    def shape(self):
        return self._array.shape

    @property
    def field(self):
        return self._field

    @property
    def packed(self):
        if self._field != 2:
            raise ValueError('Packed rows are only available over GF(2).')
        if self._packed is None:
            self._packed = tuple(_pack(row) for row in self._array)
        return self._packed

    def to_numpy(self):
        return self._array.copy()

    def to_bitstrings(self):
        return [''.join(str(int(value)) for value in row) for row in self._array]

    def row(self, i):
        return BinVector(self._array[i], field=self._field)

    def column(self, j):
        return BinVector(self._array[:, j], field=self._field)

    def select_columns(self, indices):
        indices = list(indices)
        _check_columns(self, indices)
        return BinMatrix(self._array[:, indices], cols=len(indices), field=self._field)

    def transpose(self):
        return BinMatrix(self._array.T, cols=self.rows, field=self._field)

    T = property(transpose)

    def dot(self, other):
        if self.cols != other.rows or self.field != other.field:
            raise ValueError('Cannot multiply a {} matrix by a {} matrix.'.format(self.shape, other.shape))
        return BinMatrix(self._array.dot(other._array) % self._field, cols=other.cols, field=self._field)

    def is_zero(self):
        return not self._array.any()

    def __eq__(self, other):
        if not isinstance(other, BinMatrix):
            return NotImplemented
        return (self._field == other._field and self.shape == other.shape and
                bool(np.array_equal(self._array, other._array)))

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self._field, self.shape, self._array.tobytes()))

    def __repr__(self):
        return 'BinMatrix({}, cols={})'.format(self.to_bitstrings(), self.cols)


def _check_columns(M, indices):
    for j in indices:
        if j < 0 or j >= M.cols:
            raise ValueError('Column index {} out of range for a matrix with {} columns.'.format(j, M.cols))


def rank(M):
    """Return the rank of M over its field.

    Parameters
    ----------
    M: BinMatrix
        The matrix.

    Returns
    -------
    rank: int
        Dimension of the column space (equivalently the row space) of M.
    """
    if M.field == 2:
        return _packed_rank(M.packed)
    return len(_modular_rref(M.to_numpy(), M.field)[1])


def rref(M):
    """Return the reduced row-echelon form of M with zero rows removed.

    Parameters
    ----------
    M: BinMatrix
        The matrix.

    Returns
    -------
    R: BinMatrix
        rank(M) x cols matrix in reduced row-echelon form.
    pivots: list of int
        Pivot column of each row of R, ascending.
    """
    if M.field == 2:
        reduced, pivots = _packed_rref(M.packed, M.cols)
        return BinMatrix.from_packed(reduced, M.cols), pivots
    reduced, pivots = _modular_rref(M.to_numpy(), M.field)
    return BinMatrix(reduced, cols=M.cols, field=M.field), pivots


def column_rank_of_subset(M, S):
    """Return the rank of the submatrix of M made of the columns in S.

    This is the rank function of the vector matroid of M.

    Parameters
    ----------
    M: BinMatrix
        The matrix.
    S: iterable of int
        0-based column indices.

    Returns
    -------
    rank: int
        r(S); r of the empty set is 0.
    """
    S = list(S)
    _check_columns(M, S)
    if not S:
        return 0
    if M.field == 2:
        mask = _column_mask(M.cols, S)
        return _packed_rank([row & mask for row in M.packed])
    return rank(M.select_columns(sorted(set(S))))


def nullspace_basis(M):
    """Return the null space of M in canonical form.

    Parameters
    ----------
    M: BinMatrix
        r x n matrix.

    Returns
    -------
    N: BinMatrix
        (n - rank(M)) x n matrix in reduced row-echelon form with M . N^T = 0.
        Its vector matroid is the dual of the vector matroid of M.
    """
    cols = M.cols
    if M.field == 2:
        reduced, pivots = _packed_rref(M.packed, cols)
        free = [j for j in range(cols) if j not in set(pivots)]
        vectors = []
        for f in free:
            vector = 1 << (cols - 1 - f)
            f_bit = 1 << (cols - 1 - f)
            for row, pivot in zip(reduced, pivots):
                if row & f_bit:
                    vector |= 1 << (cols - 1 - pivot)
            vectors.append(vector)
        canonical, _ = _packed_rref(vectors, cols)
        return BinMatrix.from_packed(canonical, cols)

    field = M.field
    reduced, pivots = _modular_rref(M.to_numpy(), field)
    free = [j for j in range(cols) if j not in set(pivots)]
    vectors = np.zeros((len(free), cols), dtype=np.int64)
    for k, f in enumerate(free):
        vectors[k, f] = 1
        for row, pivot in zip(reduced, pivots):
            vectors[k, pivot] = (-row[f]) % field
    canonical, _ = _modular_rref(vectors, field) if len(free) else (vectors, [])
    return BinMatrix(canonical, cols=cols, field=field)


def in_span(v, basis):
    """Check whether v lies in the row space of basis.

    Parameters
    ----------
    v: BinVector
        Candidate vector, of length basis.cols.
    basis: BinMatrix
        Spanning rows; need not be independent.

    Returns
    -------
    result: bool
        True iff v is a linear combination of the rows of basis.
    """
    if v.dim != basis.cols:
        raise ValueError('Vector of dimension {} does not match rows of length {}.'.format(v.dim, basis.cols))
    if v.is_zero():
        return True
    if basis.field == 2:
        rows = basis.packed
        return _packed_rank(rows + (v.packed,)) == _packed_rank(rows)
    extended = BinMatrix.stack([basis, BinMatrix([list(v)], cols=v.dim, field=basis.field)])
    return rank(extended) == rank(basis)


def gaussian_binomial(n, k, q=2):
    """Number of k-dimensional subspaces of GF(q)^n."""
    if k < 0 or k > n:
        return 0
    numerator = 1
    denominator = 1
    for i in range(k):
        numerator *= q ** (n - i) - 1
        denominator *= q ** (i + 1) - 1
    return numerator // denominator


def _packed_row_spaces(n, k):
    for pivots in itertools.combinations(range(n), k):
        pivot_set = set(pivots)
        free_slots = [(i, j) for i, pivot in enumerate(pivots)
                      for j in range(pivot + 1, n) if j not in pivot_set]
        for bits in itertools.product((0, 1), repeat=len(free_slots)):
            rows = [1 << (n - 1 - pivot) for pivot in pivots]
            for (i, j), bit in zip(free_slots, bits):
                if bit:
                    rows[i] |= 1 << (n - 1 - j)
            yield tuple(rows)


def enumerate_row_spaces(n, k):
    """Yield every k-dimensional subspace of GF(2)^n once.

    Each subspace is given by its unique k x n reduced row-echelon basis, in
    lexicographic order of pivot columns and then of free entries.

    Parameters
    ----------
    n: int
        Ambient dimension.
    k: int
        Subspace dimension, 0 <= k <= n.

    Returns
    -------
    spaces: generator of BinMatrix
    """
    if k < 0 or k > n:
        raise ValueError('Subspace dimension {} is outside [0, {}].'.format(k, n))
    for rows in _packed_row_spaces(n, k):
        yield BinMatrix.from_packed(rows, n)


def inverse(M):
    """Inverse of a square matrix over its field; raises ValueError if singular."""
    if M.rows != M.cols:
        raise ValueError('Only square matrices have inverses, got shape {}.'.format(M.shape))
    n = M.rows
    augmented = np.hstack([M.to_numpy(), np.eye(n, dtype=np.int64)])
    reduced, pivots = _modular_rref(augmented, M.field)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise ValueError('The matrix is singular.')
    return BinMatrix(reduced[:n, n:], cols=n, field=M.field)
