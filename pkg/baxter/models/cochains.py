#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Distributed under the terms of the GNU General Public License v2

##
#
# Cochain spaces.
#
# A degree-n cochain (n >= 2) takes 2n-1 vector arguments: n-2 skew pairs
# followed by one totally skew triple.  Degree 1 takes one vector and
# degree 0 none.  Values live in an m-dimensional module.  Cochains are
# stored on canonical argument keys in lexicographic order with the
# module coordinate innermost.
#
##

from collections import namedtuple
from functools import lru_cache
from itertools import combinations, product
from math import comb

from baxter.lib import ContractError, SizeRefused, sortSign
from baxter.lib.defaults import defaults
from baxter.lib.linalg import Matrix, isZeroVector, nonzero, one, toRational, zero


@lru_cache(maxsize=64)
def argumentKeys(d, n):
    """ Canonical argument keys of degree-n cochains, in enumeration order.

    Degree 0 has the single key (), degree 1 the keys (i, ), and degree
    n >= 2 the keys (pairs, triple).
    """
    if n < 0:
        raise ContractError('negative cochain degree %s' % n)
    if n == 0:
        return ((), )
    if n == 1:
        return tuple((i, ) for i in range(d))
    pairs = list(combinations(range(d), 2))
    triples = list(combinations(range(d), 3))
    return tuple((prefix, triple)
                 for prefix in product(pairs, repeat=n - 2)
                 for triple in triples)


@lru_cache(maxsize=64)
def keyIndex(d, n):
    return dict((key, i) for i, key in enumerate(argumentKeys(d, n)))


def cochainDimension(d, m, n):
    """ Returns C(d,2)^(n-2) C(d,3) m for n >= 2, d m for n = 1, m for n = 0.

    """
    if n == 0:
        return m
    if n == 1:
        return d * m
    return comb(d, 2) ** (n - 2) * comb(d, 3) * m


def checkSize(d, m, n, limit=None):
    """ Raises SizeRefused when the degree-n cochain space is too large.

    """
    if limit is None:
        limit = defaults.maxCochainSize
    size = cochainDimension(d, m, n)
    if size > limit:
        raise SizeRefused(size, limit)
    return size


def slotCount(n):
    return 0 if n == 0 else 2 * n - 1


def keyArgs(key, n):
    """ Flattens an argument key to its 2n-1 basis indexes.

    """
    if n <= 1:
        return tuple(key)
    prefix, triple = key
    return tuple(i for pair in prefix for i in pair) + tuple(triple)


def canonicalKey(args, n):
    """ Sorts each pair and the final triple of an index tuple.

    @param args 2n-1 basis indexes
    @param n degree
    @return (sign, key) with sign 0 when a pair or the triple repeats an index
    """
    args = tuple(args)
    if len(args) != slotCount(n):
        raise ContractError('degree %s cochains take %s arguments, got %s'
                            % (n, slotCount(n), len(args)))
    if n <= 1:
        return 1, args
    sign = 1
    pairs = []
    for k in range(n - 2):
        s, pair = sortSign(args[2 * k:2 * k + 2])
        sign *= s
        pairs.append(pair)
    s, triple = sortSign(args[-3:])
    sign *= s
    return sign, (tuple(pairs), triple)


class CochainIndex(namedtuple('CochainIndex', 'degree pairs tail target')):
    """ One basis element of a cochain space.

    """
    @property
    def args(self):
        if self.degree == 0:
            return ()
        if self.degree == 1:
            return (self.tail, )
        return tuple(i for pair in self.pairs for i in pair) + tuple(self.tail)

    @property
    def key(self):
        if self.degree == 0:
            return ()
        if self.degree == 1:
            return (self.tail, )
        return (self.pairs, self.tail)


def enumerateBasis(d, m, n):
    """ Lists the basis of the degree-n cochain space.

    @return CochainIndex list, lexicographic with the target innermost
    """
    basis = []
    for key in argumentKeys(d, n):
        for target in range(m):
            if n == 0:
                basis.append(CochainIndex(0, (), None, target))
            elif n == 1:
                basis.append(CochainIndex(1, (), key[0], target))
            else:
                basis.append(CochainIndex(n, key[0], key[1], target))
    return basis


def _pairTerms(u, v):
    terms = {}
    vs = nonzero(v)
    for i, a in nonzero(u):
        for j, b in vs:
            if i == j:
                continue
            if i < j:
                key, value = (i, j), a * b
            else:
                key, value = (j, i), -a * b
            terms[key] = terms.get(key, zero) + value
    return dict((k, c) for k, c in terms.items() if c)


def _tripleTerms(u, v, w):
    terms = {}
    vs, ws = nonzero(v), nonzero(w)
    for i, a in nonzero(u):
        for j, b in vs:
            if i == j:
                continue
            ab = a * b
            for k, c in ws:
                sign, key = sortSign((i, j, k))
                if sign:
                    terms[key] = terms.get(key, zero) + sign * ab * c
    return dict((k, c) for k, c in terms.items() if c)


def expandSlots(slots, n):
    """ Expands vector arguments into canonical keys.

    f(v_1, ..., v_{2n-1}) = sum of coefficient * f(key) over the result.

    @param slots 2n-1 coordinate vectors
    @param n degree
    @return dict of canonical key to coefficient
    """
    if len(slots) != slotCount(n):
        raise ContractError('degree %s cochains take %s arguments, got %s'
                            % (n, slotCount(n), len(slots)))
    if n == 0:
        return {(): one}
    if n == 1:
        return dict(((i, ), a) for i, a in nonzero(slots[0]))
    partial = {(): one}
    for k in range(n - 2):
        terms = _pairTerms(slots[2 * k], slots[2 * k + 1])
        if not terms:
            return {}
        partial = dict((prefix + (pair, ), c * c2)
                       for prefix, c in partial.items()
                       for pair, c2 in terms.items())
    triples = _tripleTerms(*slots[-3:])
    return dict(((prefix, triple), c * c3)
                for prefix, c in partial.items()
                for triple, c3 in triples.items())


class Cochain(object):
    """ A degree-n cochain with values in an m-dimensional module.

    @param d algebra dimension
    @param m module dimension
    @param degree n
    @keyparam values coordinates in enumeration order; zero when None
    """
    def __init__(self, d, m, degree, values=None):
        size = cochainDimension(d, m, degree)
        if values is None:
            values = (zero, ) * size
        values = tuple(toRational(v) for v in values)
        if len(values) != size:
            raise ContractError('degree %s cochain needs %s coordinates, got %s'
                                % (degree, size, len(values)))
        self.d = d
        self.m = m
        self.degree = degree
        self.values = values

    @classmethod
    def fromEntries(cls, d, m, degree, entries):
        """ Builds a cochain from values on argument tuples.

        Non-canonical tuples are canonicalized with their sign; entries on
        tuples with a repeated index must be zero.

        @param entries mapping of index tuples to module vectors
        """
        values = [zero] * cochainDimension(d, m, degree)
        index = keyIndex(d, degree)
        for args, vector in entries.items():
            sign, key = canonicalKey(args, degree)
            if len(vector) != m:
                raise ContractError('value at %r has length %s, expected %s'
                                    % (args, len(vector), m))
            if not sign:
                if not isZeroVector(vector):
                    raise ContractError('nonzero value on degenerate arguments %r'
                                        % (args, ))
                continue
            if key not in index:
                raise ContractError('arguments %r out of range' % (args, ))
            base = index[key] * m
            for t, v in enumerate(vector):
                values[base + t] += sign * toRational(v)
        return cls(d, m, degree, values)

    @classmethod
    def fromFunction(cls, d, m, degree, function):
        """ Tabulates function(args) on every canonical argument tuple.

        """
        values = []
        for key in argumentKeys(d, degree):
            vector = function(keyArgs(key, degree))
            if len(vector) != m:
                raise ContractError('function value has length %s, expected %s'
                                    % (len(vector), m))
            values.extend(vector)
        return cls(d, m, degree, values)

    def value(self, key):
        base = keyIndex(self.d, self.degree)[key] * self.m
        return self.values[base:base + self.m]

    def evaluate(self, args):
        """ Returns f(e_args) for arbitrary basis indexes, with signs.

        """
        sign, key = canonicalKey(args, self.degree)
        if not sign:
            return (zero, ) * self.m
        value = self.value(key)
        return value if sign > 0 else tuple(-v for v in value)

    def evaluateVectors(self, slots):
        """ Returns f(v_1, ..., v_{2n-1}) for coordinate vectors.

        """
        out = [zero] * self.m
        for key, c in expandSlots(slots, self.degree).items():
            for t, v in enumerate(self.value(key)):
                if v:
                    out[t] += c * v
        return tuple(out)

    def entries(self):
        """ Returns the nonzero values keyed by canonical argument tuples.

        """
        result = {}
        for key in argumentKeys(self.d, self.degree):
            value = self.value(key)
            if not isZeroVector(value):
                result[keyArgs(key, self.degree)] = value
        return result

    def _check(self, other):
        if (self.d, self.m, self.degree) != (other.d, other.m, other.degree):
            raise ContractError('cochains live in different spaces')

    def __add__(self, other):
        self._check(other)
        return Cochain(self.d, self.m, self.degree,
                       [a + b for a, b in zip(self.values, other.values)])

    def __sub__(self, other):
        self._check(other)
        return Cochain(self.d, self.m, self.degree,
                       [a - b for a, b in zip(self.values, other.values)])

    def scaled(self, factor):
        factor = toRational(factor)
        return Cochain(self.d, self.m, self.degree, [factor * v for v in self.values])

    def isZero(self):
        return isZeroVector(self.values)

    def __eq__(self, other):
        if not isinstance(other, Cochain):
            return NotImplemented
        return (self.d, self.m, self.degree, self.values) == \
               (other.d, other.m, other.degree, other.values)

    def __hash__(self):
        return hash((self.d, self.m, self.degree, self.values))

    def __repr__(self):
        return 'Cochain(d=%s, m=%s, degree=%s, nonzero=%s)' % (
            self.d, self.m, self.degree, len(nonzero(self.values)))


def cochainFromBracket(algebra, m=None):
    """ Reads a skew trilinear map as a degree-2 cochain.

    @param algebra ThreeLieAlgebra-like object with dim and bracket(i, j, k)
    @keyparam m value dimension; algebra.dim when None
    """
    m = algebra.dim if m is None else m
    return Cochain.fromFunction(algebra.dim, m, 2, lambda args: algebra.bracket(*args))


def cochainFromMatrix(matrix):
    """ Reads an m x d matrix as the degree-1 cochain e_i -> column i.

    """
    return Cochain.fromFunction(matrix.cols, matrix.rows, 1,
                                lambda args: matrix.column(args[0]))


def matrixFromCochain(f):
    """ Returns the m x d matrix of a degree-1 cochain.

    """
    if f.degree != 1:
        raise ContractError('only degree 1 cochains are linear maps')
    return Matrix.fromColumns([f.value((i, )) for i in range(f.d)], f.m)


def constantsFromCochain(f):
    """ Returns the increasing-triple constants of a degree-2 cochain.

    """
    if f.degree != 2:
        raise ContractError('only degree 2 cochains are trilinear maps')
    constants = {}
    for (prefix, triple) in argumentKeys(f.d, 2):
        value = f.value((prefix, triple))
        if not isZeroVector(value):
            constants[triple] = value
    return constants


def splitCoordinates(vector, sizes):
    """ Splits a concatenated coordinate vector into consecutive blocks.

    """
    if len(vector) != sum(sizes):
        raise ContractError('vector of length %s does not split into %r'
                            % (len(vector), sizes))
    blocks, start = [], 0
    for size in sizes:
        blocks.append(tuple(vector[start:start + size]))
        start += size
    return blocks
