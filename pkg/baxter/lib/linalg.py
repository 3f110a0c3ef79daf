#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Distributed under the terms of the GNU General Public License v2

##
#
# Exact rational linear algebra.
#
# Matrices are dense and row-major with Fraction entries.  Rank, kernel
# and solve run fraction-free elimination on integer rows; pivots are
# taken as the first nonzero entry in column order so every result is
# deterministic.
#
##

from fractions import Fraction
from math import gcd

from baxter.lib import ContractError, logging


zero = Fraction(0)
one = Fraction(1)


def toRational(value):
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


def zeroVector(size):
    return (zero, ) * size


def unitVector(size, index):
    """ Returns the standard basis vector e_index of the given size.

    """
    values = [zero] * size
    values[index] = one
    return tuple(values)


def nonzero(vector):
    """ Yields (index, value) for the nonzero coordinates of a vector.

    """
    return [(i, v) for i, v in enumerate(vector) if v]


def addVectors(u, v):
    if len(u) != len(v):
        raise ContractError('vector lengths differ: %s != %s' % (len(u), len(v)))
    return tuple(a + b for a, b in zip(u, v))


def subVectors(u, v):
    if len(u) != len(v):
        raise ContractError('vector lengths differ: %s != %s' % (len(u), len(v)))
    return tuple(a - b for a, b in zip(u, v))


def scaleVector(factor, vector):
    factor = toRational(factor)
    return tuple(factor * v for v in vector)


def combine(terms, size):
    """ Sums coefficient * vector over (coefficient, vector) pairs.

    @param terms iterable of (coefficient, vector)
    @param size length of the result
    @return tuple of Fractions
    """
    values = [zero] * size
    for coefficient, vector in terms:
        if not coefficient:
            continue
        for i, v in enumerate(vector):
            if v:
                values[i] += coefficient * v
    return tuple(values)


def isZeroVector(vector):
    return not any(vector)


def _lcm(a, b):
    return a * b // gcd(a, b)


class Matrix(object):
    """ Dense exact matrix.

    @param rows number of rows
    @param cols number of columns
    @keyparam entries row-major sequence of rows*cols values; zeros if None
    """
    def __init__(self, rows, cols, entries=None):
        if entries is None:
            entries = (zero, ) * (rows * cols)
        else:
            entries = tuple(toRational(e) for e in entries)
        if len(entries) != rows * cols:
            raise ContractError('matrix %sx%s given %s entries'
                                % (rows, cols, len(entries)))
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def fromRows(cls, rows, cols=None):
        """ Builds a matrix from a list of rows.

        @param rows sequence of sequences
        @keyparam cols column count, required when rows is empty
        @return Matrix instance
        """
        rows = [list(row) for row in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for row in rows:
            if len(row) != cols:
                raise ContractError('ragged rows: %s != %s' % (len(row), cols))
        return cls(len(rows), cols, [v for row in rows for v in row])

    @classmethod
    def fromColumns(cls, columns, rows):
        columns = list(columns)
        entries = [zero] * (rows * len(columns))
        for j, column in enumerate(columns):
            if len(column) != rows:
                raise ContractError('column %s has length %s, expected %s'
                                    % (j, len(column), rows))
            for i, value in enumerate(column):
                entries[i * len(columns) + j] = value
        return cls(rows, len(columns), entries)

    @classmethod
    def fromDict(cls, rows, cols, items):
        """ Builds a matrix from a mapping of (row, col) to value.

        """
        entries = [zero] * (rows * cols)
        for (i, j), value in items.items():
            entries[i * cols + j] = value
        return cls(rows, cols, entries)

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols)

    @classmethod
    def identity(cls, size):
        return cls.scalar(size, one)

    @classmethod
    def scalar(cls, size, value):
        entries = [zero] * (size * size)
        for i in range(size):
            entries[i * size + i] = value
        return cls(size, size, entries)

    @classmethod
    def block(cls, blocks):
        """ Assembles a block matrix.

        @param blocks list of block rows, each a list of Matrix instances
        @return Matrix instance
        """
        rowHeights = [row[0].rows for row in blocks]
        colWidths = [m.cols for m in blocks[0]] if blocks else []
        for row in blocks:
            if [m.cols for m in row] != colWidths:
                raise ContractError('block widths do not line up')
            for m in row:
                if m.rows != row[0].rows:
                    raise ContractError('block heights do not line up')
        rows = []
        for height, row in zip(rowHeights, blocks):
            for i in range(height):
                line = []
                for m in row:
                    line.extend(m.row(i))
                rows.append(line)
        return cls.fromRows(rows, sum(colWidths))

    @classmethod
    def blockDiagonal(cls, matrices):
        matrices = list(matrices)
        rows = sum(m.rows for m in matrices)
        cols = sum(m.cols for m in matrices)
        items = {}
        r = c = 0
        for m in matrices:
            for i in range(m.rows):
                for j in range(m.cols):
                    value = m[i, j]
                    if value:
                        items[r + i, c + j] = value
            r += m.rows
            c += m.cols
        return cls.fromDict(rows, cols, items)

    def __getitem__(self, key):
        i, j = key
        return self.entries[i * self.cols + j]

    def row(self, i):
        start = i * self.cols
        return self.entries[start:start + self.cols]

    def column(self, j):
        return self.entries[j::self.cols] if self.cols else ()

    def rowsList(self):
        return [self.row(i) for i in range(self.rows)]

    def nonzeroRow(self, i):
        start = i * self.cols
        return [(j, v) for j, v in enumerate(self.entries[start:start + self.cols]) if v]

    def apply(self, vector):
        """ Returns the matrix-vector product as a tuple.

        """
        if len(vector) != self.cols:
            raise ContractError('cannot apply %sx%s matrix to vector of length %s'
                                % (self.rows, self.cols, len(vector)))
        support = nonzero(vector)
        values = []
        for i in range(self.rows):
            start = i * self.cols
            entries = self.entries
            values.append(sum((entries[start + j] * v for j, v in support), zero))
        return tuple(values)

    def __mul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ContractError('cannot multiply %sx%s by %sx%s'
                                % (self.rows, self.cols, other.rows, other.cols))
        right = [other.nonzeroRow(k) for k in range(other.rows)]
        width = other.cols
        out = [zero] * (self.rows * width)
        for i in range(self.rows):
            base = i * width
            for k, a in self.nonzeroRow(i):
                for j, b in right[k]:
                    out[base + j] += a * b
        return Matrix(self.rows, width, out)

    def __add__(self, other):
        self._checkShape(other)
        return Matrix(self.rows, self.cols,
                      [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other):
        self._checkShape(other)
        return Matrix(self.rows, self.cols,
                      [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self):
        return Matrix(self.rows, self.cols, [-a for a in self.entries])

    def scaled(self, factor):
        factor = toRational(factor)
        return Matrix(self.rows, self.cols, [factor * a for a in self.entries])

    def transpose(self):
        return Matrix.fromColumns(self.rowsList(), self.cols)

    def isZero(self):
        return not any(self.entries)

    def isSquare(self):
        return self.rows == self.cols

    def firstNonzero(self):
        """ Returns (row, col) of the first nonzero entry, or None.

        """
        for index, value in enumerate(self.entries):
            if value:
                return divmod(index, self.cols)
        return None

    def firstDifference(self, other):
        self._checkShape(other)
        for index, (a, b) in enumerate(zip(self.entries, other.entries)):
            if a != b:
                return divmod(index, self.cols)
        return None

    def inverse(self):
        """ Returns the inverse matrix; raises ContractError when singular.

        """
        if not self.isSquare():
            raise ContractError('only square matrices have inverses')
        columns = []
        for j in range(self.cols):
            x = solve(self, unitVector(self.rows, j))
            if x is None:
                raise ContractError('matrix is singular')
            columns.append(x)
        return Matrix.fromColumns(columns, self.rows)

    def _checkShape(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ContractError('shape mismatch: %sx%s vs %sx%s'
                                % (self.rows, self.cols, other.rows, other.cols))

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == \
               (other.rows, other.cols, other.entries)

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        rows = ['[%s]' % ', '.join(str(v) for v in row) for row in self.rowsList()]
        return 'Matrix(%sx%s, [%s])' % (self.rows, self.cols, ', '.join(rows))


def _integerRow(values):
    """ Scales a row of Fractions to a row of integers.

    """
    scale = 1
    for v in values:
        if v.denominator != 1:
            scale = _lcm(scale, v.denominator)
    return [v.numerator * (scale // v.denominator) for v in values], scale


def _echelon(rows, ncols, stats=None):
    """ Fraction-free row echelon form, in place.

    Each update divides exactly by the previous pivot, so the entries stay
    integral minors of the input and do not grow past them.

    @param rows list of integer lists
    @param ncols number of columns to eliminate
    @keyparam stats optional dict receiving the swap count
    @return list of pivot columns
    """
    pivots = []
    previous = 1
    swaps = 0
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        p = None
        for i in range(r, nrows):
            if rows[i][c]:
                p = i
                break
        if p is None:
            continue
        if p != r:
            rows[r], rows[p] = rows[p], rows[r]
            swaps += 1
        pivotRow = rows[r]
        pivot = pivotRow[c]
        tail = range(c + 1, len(pivotRow))
        for i in range(r + 1, nrows):
            row = rows[i]
            factor = row[c]
            if factor:
                for j in tail:
                    row[j] = (pivot * row[j] - factor * pivotRow[j]) // previous
            elif pivot != previous:
                for j in tail:
                    if row[j]:
                        row[j] = (pivot * row[j]) // previous
            row[c] = 0
        previous = pivot
        pivots.append(c)
        r += 1
    if stats is not None:
        stats['swaps'] = swaps
    return pivots


def _reduced(rows, pivots):
    """ Converts echelon pivot rows to reduced row echelon form over Q.

    """
    reduced = [[Fraction(v) for v in rows[i]] for i in range(len(pivots))]
    for i in reversed(range(len(pivots))):
        c = pivots[i]
        inverse = 1 / reduced[i][c]
        reduced[i] = [v * inverse for v in reduced[i]]
        pivotRow = reduced[i]
        for k in range(i):
            factor = reduced[k][c]
            if factor:
                reduced[k] = [a - factor * b for a, b in zip(reduced[k], pivotRow)]
    return reduced


def _eliminate(A, extra=None):
    rows = []
    for i in range(A.rows):
        values = list(A.row(i))
        if extra is not None:
            values.append(toRational(extra[i]))
        rows.append(_integerRow(values)[0])
    ncols = A.cols + (1 if extra is not None else 0)
    pivots = _echelon(rows, ncols)
    return rows, pivots


def rank(A):
    """ Returns the exact rank of A over the rationals.

    """
    if not A.rows or not A.cols:
        return 0
    return len(_eliminate(A)[1])


def pivotColumns(A):
    if not A.rows or not A.cols:
        return []
    return _eliminate(A)[1]


def kernelBasis(A):
    """ Returns a basis of the null space of A.

    @param A Matrix instance
    @return list of cols - rank(A) vectors v with A v = 0
    """
    if not A.rows:
        return [unitVector(A.cols, j) for j in range(A.cols)]
    rows, pivots = _eliminate(A)
    reduced = _reduced(rows, pivots)
    pivotSet = set(pivots)
    basis = []
    for free in range(A.cols):
        if free in pivotSet:
            continue
        vector = [zero] * A.cols
        vector[free] = one
        for i, c in enumerate(pivots):
            vector[c] = -reduced[i][free]
        basis.append(tuple(vector))
    logging.debug('kernel of %sx%s matrix has dimension %s',
                  A.rows, A.cols, len(basis))
    return basis


def imageBasis(A):
    """ Returns the pivot columns of A, a basis of its column space.

    """
    return [A.column(c) for c in pivotColumns(A)]


def solve(A, b):
    """ Solves A x = b exactly.

    @param A Matrix instance
    @param b vector of length A.rows
    @return some solution x (free variables set to zero) or None
    """
    if len(b) != A.rows:
        raise ContractError('right hand side has length %s, expected %s'
                            % (len(b), A.rows))
    if not A.rows:
        return zeroVector(A.cols)
    rows, pivots = _eliminate(A, b)
    if pivots and pivots[-1] == A.cols:
        return None
    reduced = _reduced(rows, pivots)
    x = [zero] * A.cols
    for i, c in enumerate(pivots):
        x[c] = reduced[i][A.cols]
    return tuple(x)


def determinant(A):
    """ Returns the determinant of a square matrix.

    """
    if not A.isSquare():
        raise ContractError('determinant needs a square matrix')
    if not A.rows:
        return one
    rows, scale = [], one
    for i in range(A.rows):
        row, factor = _integerRow(list(A.row(i)))
        rows.append(row)
        scale *= factor
    stats = {}
    pivots = _echelon(rows, A.cols, stats)
    if len(pivots) < A.rows:
        return zero
    sign = -1 if stats['swaps'] % 2 else 1
    return Fraction(sign * rows[-1][-1]) / scale


def inSpan(vectors, target):
    """ True when target is a linear combination of the given vectors.

    """
    if not vectors:
        return isZeroVector(target)
    return solve(Matrix.fromColumns(vectors, len(target)), target) is not None
