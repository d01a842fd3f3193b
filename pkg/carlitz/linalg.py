# Copyright (c) 2026 The Carlitz Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
# implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Exact integer matrices: determinant, rank over Q and row sums."""

import math

from oslo_log import log as logging

from carlitz import exceptions

LOG = logging.getLogger(__name__)


class IntMatrix(object):
    """An immutable rows x cols matrix of Python integers, row-major."""

    def __init__(self, rows, cols, entries):
        entries = tuple(int(e) for e in entries)
        if rows < 0 or cols < 0 or len(entries) != rows * cols:
            raise exceptions.InvalidInput(
                name='matrix entries',
                value='%d entries for shape %dx%d' % (len(entries), rows,
                                                     cols))
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def from_rows(cls, rows, cols=None):
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise exceptions.InvalidInput(
                    name='matrix rows',
                    value='row of length %d in a matrix with %d columns'
                    % (len(r), cols))
        return cls(len(rows), cols, [e for r in rows for e in r])

    @classmethod
    def identity(cls, n):
        return cls(n, n, [int(i == j) for i in range(n) for j in range(n)])

    @property
    def shape(self):
        return (self.rows, self.cols)

    def is_square(self):
        return self.rows == self.cols

    def __getitem__(self, index):
        i, j = index
        return self.entries[i * self.cols + j]

    def row(self, i):
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self):
        return [list(self.row(i)) for i in range(self.rows)]

    def column(self, j):
        return tuple(self.entries[i * self.cols + j]
                     for i in range(self.rows))

    def transpose(self):
        return IntMatrix(self.cols, self.rows,
                         [self[i, j] for j in range(self.cols)
                          for i in range(self.rows)])

    def submatrix(self, row_indices, col_indices):
        row_indices = list(row_indices)
        col_indices = list(col_indices)
        return IntMatrix(len(row_indices), len(col_indices),
                         [self[i, j] for i in row_indices
                          for j in col_indices])

    def drop_column(self, j):
        return self.submatrix(range(self.rows),
                              [c for c in range(self.cols) if c != j])

    def permuted(self, row_perm=None, col_perm=None):
        """Row i of the result is row row_perm[i] of self."""
        if row_perm is None:
            row_perm = range(self.rows)
        if col_perm is None:
            col_perm = range(self.cols)
        return self.submatrix(row_perm, col_perm)

    def to_json(self):
        """Arrays of decimal strings, so precision survives JSON."""
        return [[str(e) for e in r] for r in self.to_rows()]

    def __eq__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        return 'IntMatrix(%s)' % self.to_rows()


def det_exact(m):
    """Determinant by Bareiss elimination.

    Every division below is exact, so intermediates stay integral.
    """
    if not m.is_square():
        raise exceptions.NotSquare(rows=m.rows, cols=m.cols)
    n = m.rows
    if n == 0:
        return 1
    a = m.to_rows()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            row_i, row_k = a[i], a[k]
            factor = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - factor * row_k[j]) // prev
        prev = pivot
    return sign * a[n - 1][n - 1]


def _primitive(row):
    content = 0
    for e in row:
        content = math.gcd(content, e)
    if content > 1:
        return [e // content for e in row]
    return row


def rank_exact(m):
    """Rank over Q by integer row echelon form.

    Rows are cross-multiplied against the pivot row and divided by their
    content, so no fractions appear and every zero test is exact.
    """
    a = [_primitive(r) for r in m.to_rows()]
    rank = 0
    for col in range(m.cols):
        if rank == m.rows:
            break
        pivot_row = None
        for i in range(rank, m.rows):
            if a[i][col]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        a[rank], a[pivot_row] = a[pivot_row], a[rank]
        top = a[rank]
        pivot = top[col]
        for i in range(rank + 1, m.rows):
            factor = a[i][col]
            if factor:
                a[i] = _primitive([x * pivot - factor * y
                                   for x, y in zip(a[i], top)])
        rank += 1
    LOG.debug('Rank of a %(r)sx%(c)s matrix is %(rank)s',
              {'r': m.rows, 'c': m.cols, 'rank': rank})
    return rank


def row_sums(m):
    return [sum(m.row(i)) for i in range(m.rows)]
