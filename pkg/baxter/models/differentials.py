#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Distributed under the terms of the GNU General Public License v2

##
#
# Exact matrices of the three cochain complexes.
#
# delta is the 3-Lie coboundary, partial the coboundary of the derived
# structure (computed twice: once as delta over (g_T, rho_T) and once from
# the fully expanded formula), phi the chain map between them, and rba the
# differential of the shifted mapping cone.  Matrices are assembled by
# evaluating each formula on canonical basis tuples of the target space.
#
##

from baxter.lib import ConsistencyError, ContractError, logging
from baxter.lib.linalg import Matrix, one, unitVector, zero, zeroVector
from baxter.algebra.basic import (RBRepresentation, Representation, Verdict,
                                  requireVerified)
from baxter.algebra.advanced import derivedRepresentation, derivedStructure
from baxter.models.cochains import (argumentKeys, cochainDimension, checkSize,
                                    expandSlots, keyArgs, keyIndex, slotCount)


class ComplexMap(object):
    """ A linear map between two enumerated cochain spaces.

    @param which 'delta', 'partial', 'phi' or 'rba'
    @param source degree of the domain
    @param target degree of the codomain
    @param matrix Matrix in the enumerated bases
    """
    def __init__(self, which, source, target, matrix):
        self.which = which
        self.source = source
        self.target = target
        self.matrix = matrix

    def __repr__(self):
        return 'ComplexMap(%s, %s -> %s, %sx%s)' % (
            self.which, self.source, self.target,
            self.matrix.rows, self.matrix.cols)


class _Assembler(object):
    """ Accumulates f(slots) terms into matrix entries row by row.

    """
    def __init__(self, d, m, degree):
        self.index = keyIndex(d, degree)
        self.degree = degree
        self.m = m
        self.items = {}

    def add(self, rowKey, coefficient, op, slots):
        """ Adds coefficient * op(f(slots)) to the rows of one target tuple.

        @param rowKey position of the target tuple
        @param op module matrix applied to the value, identity when None
        """
        if not coefficient:
            return
        m = self.m
        items = self.items
        rowBase = rowKey * m
        for key, c in expandSlots(slots, self.degree).items():
            colBase = self.index[key] * m
            value = coefficient * c
            for t in range(m):
                if op is None:
                    cell = (rowBase + t, colBase + t)
                    items[cell] = items.get(cell, zero) + value
                else:
                    for s, entry in op.nonzeroRow(t):
                        cell = (rowBase + t, colBase + s)
                        items[cell] = items.get(cell, zero) + value * entry

    def matrix(self, rows, cols):
        return Matrix.fromDict(rows, cols, self.items)


def _representation(P):
    if isinstance(P, RBRepresentation):
        return P.rep
    if isinstance(P, Representation):
        return P
    raise ContractError('expected a representation, got %r' % (P, ))


def _flat(pairs):
    return [v for pair in pairs for v in pair]


def _deltaTerms(n, z, bracket, actionTerms):
    """ Yields (coefficient, op, slots) terms of the coboundary at z.

    @param n source degree, n >= 1
    @param z 2n+1 coordinate vectors
    @param bracket callable (x, y, z) -> vector
    @param actionTerms callable (x, y) -> [(coefficient, module matrix)]
    """
    pairs = [(z[2 * j], z[2 * j + 1]) for j in range(n)]
    last = z[2 * n]
    for j in range(n):
        xj, yj = pairs[j]
        sign = -one if j % 2 == 0 else one
        rest = pairs[:j] + pairs[j + 1:]
        for k in range(j + 1, n):
            xk, yk = pairs[k]
            pos = k - 1
            first = rest[:pos] + [(bracket(xj, yj, xk), yk)] + rest[pos + 1:]
            second = rest[:pos] + [(xk, bracket(xj, yj, yk))] + rest[pos + 1:]
            yield sign, None, _flat(first) + [last]
            yield sign, None, _flat(second) + [last]
        yield sign, None, _flat(rest) + [bracket(xj, yj, last)]
        for coefficient, op in actionTerms(xj, yj):
            yield -sign * coefficient, op, _flat(rest) + [last]
    xn, yn = pairs[n - 1]
    head = _flat(pairs[:n - 1])
    sign = one if (n + 1) % 2 == 0 else -one
    for coefficient, op in actionTerms(yn, last):
        yield sign * coefficient, op, head + [xn]
    for coefficient, op in actionTerms(last, xn):
        yield sign * coefficient, op, head + [yn]


def _assembleDelta(d, m, n, bracket, actionTerms):
    """ Assembles the coboundary C^n -> C^(n+1) for n >= 1.

    """
    assembler = _Assembler(d, m, n)
    for row, key in enumerate(argumentKeys(d, n + 1)):
        z = [unitVector(d, i) for i in keyArgs(key, n + 1)]
        for coefficient, op, slots in _deltaTerms(n, z, bracket, actionTerms):
            assembler.add(row, coefficient, op, slots)
    return assembler.matrix(cochainDimension(d, m, n + 1), cochainDimension(d, m, n))


def _sumTerms(f, terms, m):
    out = [zero] * m
    for coefficient, op, slots in terms:
        value = f.evaluateVectors(slots)
        if op is not None:
            value = op.apply(value)
        for t, v in enumerate(value):
            if v:
                out[t] += coefficient * v
    return tuple(out)


def deltaMatrix(P, n):
    """ Returns the 3-Lie coboundary delta^n: C^n -> C^(n+1).

    @param P verified Representation or RBRepresentation
    @param n degree, delta^0 is zero
    @return ComplexMap
    """
    rep = _representation(P)
    requireVerified(rep, 'representation')
    d, m = rep.dim, rep.mdim
    if n == 0:
        return ComplexMap('delta', 0, 1, Matrix.zeros(d * m, m))
    algebra = rep.algebra
    matrix = _assembleDelta(d, m, n, algebra.bracketVectors,
                            lambda x, y: [(one, rep.actionVectors(x, y))])
    return ComplexMap('delta', n, n + 1, matrix)


def _expandedActionTerms(P):
    act = P.rep.actionVectors
    T = P.rb.T.apply
    TM = P.TM
    w = P.weight

    def actionTerms(x, y):
        tx, ty = T(x), T(y)
        return [(one, act(tx, ty)), (-one, TM * act(tx, y)),
                (-one, TM * act(x, ty)), (-w, TM * act(x, y))]

    return actionTerms


def _expandedPartial(P, n):
    """ Assembles partial^n from the expanded formula in T, T_M and the weight.

    """
    return _assembleDelta(P.dim, P.mdim, n, P.rb.derived, _expandedActionTerms(P))


def partialValue(P, f, args):
    """ Evaluates partial^n(f) at basis indexes from the expanded formula.

    No verification is required, so this also serves data that is not yet
    known to be a representation.

    @param P RBRepresentation
    @param f degree-n Cochain, n >= 1
    @param args 2n+1 basis indexes
    @return module vector
    """
    n = f.degree
    if n == 0:
        return zeroVector(P.mdim)
    if len(args) != slotCount(n + 1):
        raise ContractError('partial^%s takes %s arguments, got %s'
                            % (n, slotCount(n + 1), len(args)))
    z = [unitVector(P.dim, i) for i in args]
    terms = _deltaTerms(n, z, P.rb.derived, _expandedActionTerms(P))
    return _sumTerms(f, terms, P.mdim)


def partialMatrix(P, n, derived=None):
    """ Returns the operator coboundary partial^n: C^n -> C^(n+1).

    Route one is delta over the derived representation, route two the
    expanded formula; the two must agree entrywise.

    @param P verified RBRepresentation
    @keyparam derived precomputed derivedRepresentation(P)
    @return ComplexMap holding the route one matrix
    """
    requireVerified(P, 'rota-baxter representation')
    d, m = P.dim, P.mdim
    if n == 0:
        return ComplexMap('partial', 0, 1, Matrix.zeros(d * m, m))
    if derived is None:
        derived = derivedRepresentation(P)
    generic = deltaMatrix(derived, n).matrix
    expanded = _expandedPartial(P, n)
    difference = generic.firstDifference(expanded)
    if difference is not None:
        row, col = difference[:2]
        raise ConsistencyError(
            'partial^%s routes disagree at (%s, %s): %s != %s'
            % (n, row, col, generic[row, col], expanded[row, col]), (n, row, col))
    return ComplexMap('partial', n, n + 1, generic)


def _phiTerms(P, n, z):
    """ Yields (coefficient, op, slots) terms of phi^n(f)(z).

    """
    T = P.rb.T.apply
    w = P.weight
    size = slotCount(n)
    tz = [T(v) for v in z]
    yield one, None, tz
    for mask in range(2 ** size - 1):
        count = bin(mask).count('1')
        coefficient = w ** (size - 1 - count)
        if not coefficient:
            continue
        slots = [tz[i] if mask >> i & 1 else z[i] for i in range(size)]
        yield -coefficient, P.TM, slots


def phiMatrix(P, n):
    """ Returns the chain map phi^n from 3-Lie cochains to operator cochains.

    phi^n(f)(z) = f(Tz) - sum over proper subsets S of the slots of
    w^(2n-2-|S|) T_M f(z with T applied on S).

    @param P verified RBRepresentation
    @param n degree, phi^0 is the identity
    @return ComplexMap
    """
    requireVerified(P, 'rota-baxter representation')
    d, m = P.dim, P.mdim
    if n == 0:
        return ComplexMap('phi', 0, 0, Matrix.identity(m))
    assembler = _Assembler(d, m, n)
    for row, key in enumerate(argumentKeys(d, n)):
        z = [unitVector(d, i) for i in keyArgs(key, n)]
        for coefficient, op, slots in _phiTerms(P, n, z):
            assembler.add(row, coefficient, op, slots)
    size = cochainDimension(d, m, n)
    return ComplexMap('phi', n, n, assembler.matrix(size, size))


def phiValue(P, f, args):
    """ Evaluates phi^n(f) on arbitrary basis indexes straight from its sum.

    @param P RBRepresentation, verified or not
    @param f Cochain
    @param args 2n-1 basis indexes, any order
    @return module vector
    """
    n = f.degree
    if n == 0:
        return tuple(f.values)
    if len(args) != slotCount(n):
        raise ContractError('degree %s cochains take %s arguments, got %s'
                            % (n, slotCount(n), len(args)))
    z = [unitVector(P.dim, i) for i in args]
    return _sumTerms(f, _phiTerms(P, n, z), P.mdim)


def rbaDimension(d, m, n):
    if n == 0:
        return cochainDimension(d, m, 0)
    return cochainDimension(d, m, n) + cochainDimension(d, m, n - 1)


class Complexes(object):
    """ Memoized differentials of one Rota-Baxter representation.

    @param P verified RBRepresentation
    @keyparam limit largest cochain space allowed, defaults.maxCochainSize when None
    """
    def __init__(self, P, limit=None):
        requireVerified(P, 'rota-baxter representation')
        self.P = P
        self.limit = limit
        self.d = P.dim
        self.m = P.mdim
        self.cache = {}
        self._derived = None

    def derived(self):
        if self._derived is None:
            self._derived = derivedRepresentation(self.P, derivedStructure(self.P.rb))
        return self._derived

    def _memo(self, which, n, build):
        key = (which, n)
        if key not in self.cache:
            checkSize(self.d, self.m, n + 1, self.limit)
            self.cache[key] = build()
            matrix = self.cache[key]
            logging.debug('built %s^%s, %sx%s', which, n, matrix.rows, matrix.cols)
        return self.cache[key]

    def delta(self, n):
        return self._memo('delta', n, lambda: deltaMatrix(self.P, n).matrix)

    def partial(self, n):
        if n == 0:
            return self._memo('partial', n, lambda: partialMatrix(self.P, 0).matrix)
        return self._memo('partial', n,
                          lambda: partialMatrix(self.P, n, self.derived()).matrix)

    def phi(self, n):
        return self._memo('phi', n, lambda: phiMatrix(self.P, n).matrix)

    def rba(self, n):
        return self._memo('rba', n, lambda: self._rba(n))

    def _rba(self, n):
        d, m = self.d, self.m
        if n == 0:
            return Matrix.block([[self.delta(0)], [-self.phi(0)]])
        zeros = Matrix.zeros(cochainDimension(d, m, n + 1), cochainDimension(d, m, n - 1))
        return Matrix.block([[self.delta(n), zeros],
                             [-self.phi(n), -self.partial(n - 1)]])

    def differential(self, which, n):
        """ Returns the degree-n differential of the named complex.

        @param which '3lie', 'rbo' or 'rba'
        """
        if which == '3lie':
            return self.delta(n)
        if which == 'rbo':
            return self.partial(n)
        if which == 'rba':
            return self.rba(n)
        raise ContractError('unknown complex %r' % (which, ))

    def dimension(self, which, n):
        if which == 'rba':
            return rbaDimension(self.d, self.m, n)
        if which in ('3lie', 'rbo'):
            return cochainDimension(self.d, self.m, n)
        raise ContractError('unknown complex %r' % (which, ))


def rbaDifferential(P, n, complexes=None):
    """ Returns d^n = [[delta^n, 0], [-phi^n, -partial^(n-1)]].

    @param P verified RBRepresentation
    @param n degree
    @keyparam complexes Complexes cache to reuse
    @return ComplexMap
    """
    if complexes is None:
        complexes = Complexes(P)
    return ComplexMap('rba', n, n + 1, complexes.rba(n))


def squareZeroCheck(P, which, nMax, complexes=None):
    """ Checks D^(n+1) D^n = 0 for n = 0..nMax.

    @return Verdict with violations (n, row, col)
    """
    if complexes is None:
        complexes = Complexes(P)
    verdict = Verdict('%s square zero' % which)
    for n in range(nMax + 1):
        product = complexes.differential(which, n + 1) * complexes.differential(which, n)
        found = product.firstNonzero()
        if found is not None:
            row, col = found[:2]
            verdict.add('%s square zero' % which, (n, row, col), str(product[row, col]))
    return verdict


def chainMapCheck(P, nMax, complexes=None):
    """ Checks partial^n phi^n = phi^(n+1) delta^n for n = 0..nMax.

    @param P verified RBRepresentation
    @param nMax highest degree checked
    @return Verdict; the first violation carries (n, row, col)
    """
    if complexes is None:
        complexes = Complexes(P)
    verdict = Verdict('chain map')
    for n in range(nMax + 1):
        lhs = complexes.partial(n) * complexes.phi(n)
        rhs = complexes.phi(n + 1) * complexes.delta(n)
        difference = lhs.firstDifference(rhs)
        if difference is not None:
            row, col = difference[:2]
            verdict.add('chain map', (n, row, col),
                        '%s != %s' % (lhs[row, col], rhs[row, col]))
    logging.debug('chain map check to degree %s: %s', nMax, verdict.ok)
    return verdict
