#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Distributed under the terms of the GNU General Public License v2

##
#
# Core structure-constant objects and their verifiers.
#
# Brackets are stored on strictly increasing index triples and actions on
# strictly increasing index pairs; every extension by skew-symmetry goes
# through baxter.lib.sortSign.  Constructors accept raw data, including
# data that fails the axioms; the verify* functions set the `verified`
# flag that downstream operations require.
#
##

from itertools import combinations, product

from baxter.lib import ContractError, Rational, formatRational, logging, sortSign
from baxter.lib.linalg import (Matrix, combine, isZeroVector, nonzero,
                               subVectors, unitVector, zero, zeroVector)


class Violation(object):
    """ One failed instance of an identity.

    @param name identity name
    @param indexes basis index tuple where the identity fails
    @keyparam detail optional description of the defect
    """
    def __init__(self, name, indexes, detail=None):
        self.name = name
        self.indexes = tuple(indexes)
        self.detail = detail

    def asDict(self):
        data = {'name': self.name, 'indexes': list(self.indexes)}
        if self.detail is not None:
            data['detail'] = self.detail
        return data

    def __eq__(self, other):
        if not isinstance(other, Violation):
            return NotImplemented
        return (self.name, self.indexes) == (other.name, other.indexes)

    def __hash__(self):
        return hash((self.name, self.indexes))

    def __repr__(self):
        return 'Violation(%r, %r)' % (self.name, self.indexes)


class Verdict(object):
    """ Outcome of a verifier: true when no violation was recorded.

    """
    def __init__(self, name, violations=None):
        self.name = name
        self.violations = list(violations or [])

    @property
    def ok(self):
        return not self.violations

    def __bool__(self):
        return self.ok

    def add(self, name, indexes, detail=None):
        self.violations.append(Violation(name, indexes, detail))

    def extend(self, other):
        self.violations.extend(other.violations)
        return self

    def first(self):
        return self.violations[0] if self.violations else None

    def names(self):
        seen = []
        for violation in self.violations:
            if violation.name not in seen:
                seen.append(violation.name)
        return seen

    def asDict(self, limit=None):
        violations = self.violations
        if limit is not None:
            violations = violations[:limit]
        return {
            'name': self.name,
            'ok': self.ok,
            'violationCount': len(self.violations),
            'violations': [v.asDict() for v in violations],
        }

    def __repr__(self):
        return 'Verdict(%r, ok=%s, violations=%s)' % (
            self.name, self.ok, len(self.violations))


def formatVector(vector):
    return '(%s)' % ', '.join(formatRational(v) for v in vector)


def requireVerified(item, what):
    if not getattr(item, 'verified', False):
        raise ContractError('%s is not verified' % (what, ))


class ThreeLieAlgebra(object):
    """ Finite-dimensional totally skew trilinear bracket.

    @param dim dimension d
    @keyparam constants mapping of increasing triples (i, j, k) to
              length-d vectors, the coordinates of [e_i, e_j, e_k]
    @keyparam names basis labels
    """
    def __init__(self, dim, constants=None, names=None):
        self.dim = dim
        self.names = list(names) if names else ['e%s' % (i + 1) for i in range(dim)]
        if len(self.names) != dim:
            raise ContractError('expected %s basis names' % dim)
        self.constants = {}
        for key, value in (constants or {}).items():
            key = tuple(key)
            if len(key) != 3 or not all(0 <= i < dim for i in key):
                raise ContractError('bad bracket index triple %r' % (key, ))
            if not (key[0] < key[1] < key[2]):
                raise ContractError('bracket triple %r is not increasing' % (key, ))
            value = tuple(Rational(v) for v in value)
            if len(value) != dim:
                raise ContractError('bracket value for %r has length %s'
                                    % (key, len(value)))
            if not isZeroVector(value):
                self.constants[key] = value
        self.table = self._buildTable()
        self.verified = False

    def _buildTable(self):
        dim = self.dim
        table = [[None] * dim for _ in range(dim)]
        for (i, j, k), value in self.constants.items():
            support = nonzero(value)
            for perm in ((i, j, k), (j, k, i), (k, i, j),
                         (j, i, k), (i, k, j), (k, j, i)):
                sign = sortSign(perm)[0]
                a, b, c = perm
                if table[a][b] is None:
                    table[a][b] = [None] * dim
                table[a][b][c] = [(t, sign * w) for t, w in support]
        return table

    @classmethod
    def abelian(cls, dim, names=None):
        return cls(dim, {}, names)

    def isAbelian(self):
        return not self.constants

    def bracket(self, i, j, k):
        """ Returns [e_i, e_j, e_k] for arbitrary basis indexes.

        """
        sign, key = sortSign((i, j, k))
        if not sign or key not in self.constants:
            return zeroVector(self.dim)
        value = self.constants[key]
        return value if sign > 0 else tuple(-v for v in value)

    def bracketVectors(self, x, y, z):
        """ Returns [x, y, z] for coordinate vectors, extended trilinearly.

        """
        out = [zero] * self.dim
        table = self.table
        zs = nonzero(z)
        for i, a in nonzero(x):
            row = table[i]
            for j, b in nonzero(y):
                cells = row[j]
                if cells is None:
                    continue
                ab = a * b
                for k, c in zs:
                    cell = cells[k]
                    if cell is None:
                        continue
                    coefficient = ab * c
                    for t, w in cell:
                        out[t] += coefficient * w
        return tuple(out)

    def unit(self, i):
        return unitVector(self.dim, i)

    def sameAs(self, other):
        return self.dim == other.dim and self.constants == other.constants

    def __repr__(self):
        return 'ThreeLieAlgebra(dim=%s, constants=%s)' % (self.dim, len(self.constants))


class RotaBaxterStructure(object):
    """ A 3-Lie algebra with an operator T and a weight.

    """
    def __init__(self, algebra, T, weight):
        if (T.rows, T.cols) != (algebra.dim, algebra.dim):
            raise ContractError('operator must be %sx%s' % (algebra.dim, algebra.dim))
        self.algebra = algebra
        self.T = T
        self.weight = Rational(weight)
        self.verified = False

    @property
    def dim(self):
        return self.algebra.dim

    def derived(self, x, y, z):
        """ Returns the inner sum of the Rota-Baxter relation.

        [Tx,Ty,z] + [Tx,y,Tz] + [x,Ty,Tz]
          + w([Tx,y,z] + [x,Ty,z] + [x,y,Tz]) + w^2 [x,y,z]
        """
        br = self.algebra.bracketVectors
        T = self.T.apply
        w = self.weight
        tx, ty, tz = T(x), T(y), T(z)
        return combine([
            (1, br(tx, ty, z)), (1, br(tx, y, tz)), (1, br(x, ty, tz)),
            (w, br(tx, y, z)), (w, br(x, ty, z)), (w, br(x, y, tz)),
            (w * w, br(x, y, z)),
            ], self.dim)

    def sameAs(self, other):
        return (self.algebra.sameAs(other.algebra) and self.T == other.T
                and self.weight == other.weight)

    def __repr__(self):
        return 'RotaBaxterStructure(dim=%s, weight=%s)' % (
            self.dim, formatRational(self.weight))


class Representation(object):
    """ Pair-indexed action of a 3-Lie algebra on an m-dimensional space.

    @param algebra ThreeLieAlgebra instance
    @param mdim dimension m of the module
    @keyparam rho mapping of increasing pairs (i, j) to m x m matrices
    """
    def __init__(self, algebra, mdim, rho=None):
        self.algebra = algebra
        self.mdim = mdim
        self.rho = {}
        dim = algebra.dim
        for key, matrix in (rho or {}).items():
            key = tuple(key)
            if len(key) != 2 or not all(0 <= i < dim for i in key) or key[0] >= key[1]:
                raise ContractError('action pair %r is not an increasing index pair'
                                    % (key, ))
            if (matrix.rows, matrix.cols) != (mdim, mdim):
                raise ContractError('action matrix for %r must be %sx%s'
                                    % (key, mdim, mdim))
            if not matrix.isZero():
                self.rho[key] = matrix
        self.zeroMatrix = Matrix.zeros(mdim, mdim)
        self.table = [[None] * dim for _ in range(dim)]
        for (i, j), matrix in self.rho.items():
            self.table[i][j] = matrix
            self.table[j][i] = -matrix
        self.verified = False

    @property
    def dim(self):
        return self.algebra.dim

    def action(self, i, j):
        """ Returns rho(e_i, e_j), extended by skew-symmetry.

        """
        matrix = self.table[i][j]
        return self.zeroMatrix if matrix is None else matrix

    def actionVectors(self, x, y):
        """ Returns rho(x, y) for coordinate vectors x and y.

        """
        m = self.mdim
        out = [zero] * (m * m)
        for i, a in nonzero(x):
            row = self.table[i]
            for j, b in nonzero(y):
                matrix = row[j]
                if matrix is None:
                    continue
                ab = a * b
                for index, value in enumerate(matrix.entries):
                    if value:
                        out[index] += ab * value
        return Matrix(m, m, out)

    def isZero(self):
        return not self.rho

    def sameAs(self, other):
        return (self.algebra.sameAs(other.algebra) and self.mdim == other.mdim
                and self.rho == other.rho)

    def __repr__(self):
        return 'Representation(dim=%s, mdim=%s)' % (self.dim, self.mdim)


class RBRepresentation(object):
    """ A representation with a compatible operator T_M.

    @param rep Representation instance
    @param TM m x m operator on the module
    @param rb RotaBaxterStructure being represented
    """
    def __init__(self, rep, TM, rb):
        if (TM.rows, TM.cols) != (rep.mdim, rep.mdim):
            raise ContractError('module operator must be %sx%s' % (rep.mdim, rep.mdim))
        if rep.algebra is not rb.algebra and not rep.algebra.sameAs(rb.algebra):
            raise ContractError('representation and operator act on different algebras')
        self.rep = rep
        self.TM = TM
        self.rb = rb
        self.verified = False

    @property
    def mdim(self):
        return self.rep.mdim

    @property
    def dim(self):
        return self.rb.dim

    @property
    def weight(self):
        return self.rb.weight

    def derivedAction(self, x, y):
        """ Returns rho(Tx,Ty) - T_M(rho(Tx,y) + rho(x,Ty) + w rho(x,y)).

        """
        act = self.rep.actionVectors
        T = self.rb.T.apply
        tx, ty = T(x), T(y)
        inner = act(tx, y) + act(x, ty) + act(x, y).scaled(self.weight)
        return act(tx, ty) - self.TM * inner

    def __repr__(self):
        return 'RBRepresentation(dim=%s, mdim=%s, weight=%s)' % (
            self.dim, self.mdim, formatRational(self.weight))


def verifyFundamentalIdentity(algebra):
    """ Checks the Fundamental Identity on all basis tuples.

    Increasing (x1, x2) and (x3, x4, x5) suffice since both sides are skew
    in those groups.

    @param algebra ThreeLieAlgebra instance
    @return Verdict listing every violating 5-tuple
    """
    verdict = Verdict('fundamental identity')
    br = algebra.bracketVectors
    unit = algebra.unit
    for a, b in combinations(range(algebra.dim), 2):
        ua, ub = unit(a), unit(b)
        for c, e, h in combinations(range(algebra.dim), 3):
            uc, ue, uh = unit(c), unit(e), unit(h)
            lhs = br(ua, ub, algebra.bracket(c, e, h))
            rhs = combine([
                (1, br(algebra.bracket(a, b, c), ue, uh)),
                (1, br(uc, algebra.bracket(a, b, e), uh)),
                (1, br(uc, ue, algebra.bracket(a, b, h))),
                ], algebra.dim)
            if lhs != rhs:
                verdict.add('fundamental identity', (a, b, c, e, h),
                            formatVector(subVectors(lhs, rhs)))
    algebra.verified = verdict.ok
    logging.debug('fundamental identity on dim %s: %s violations',
                  algebra.dim, len(verdict.violations))
    return verdict


def verifyRotaBaxter(structure):
    """ Checks the Rota-Baxter relation on increasing basis triples.

    @param structure RotaBaxterStructure with a verified algebra
    @return Verdict
    """
    requireVerified(structure.algebra, 'algebra')
    verdict = Verdict('rota-baxter relation')
    algebra = structure.algebra
    T = structure.T.apply
    unit = algebra.unit
    for i, j, k in combinations(range(algebra.dim), 3):
        x, y, z = unit(i), unit(j), unit(k)
        lhs = algebra.bracketVectors(T(x), T(y), T(z))
        rhs = T(structure.derived(x, y, z))
        if lhs != rhs:
            verdict.add('rota-baxter relation', (i, j, k),
                        formatVector(subVectors(lhs, rhs)))
    structure.verified = verdict.ok
    return verdict


def verifyRepresentation(rep):
    """ Checks both representation identities on all basis 4-tuples.

    """
    requireVerified(rep.algebra, 'algebra')
    verdict = Verdict('representation')
    algebra = rep.algebra
    act = rep.action
    actv = rep.actionVectors
    unit = algebra.unit
    indexes = range(algebra.dim)
    for a, b, c, e in product(indexes, repeat=4):
        lhs = act(a, b) * act(c, e) - act(c, e) * act(a, b)
        rhs = actv(algebra.bracket(a, b, c), unit(e)) + \
              actv(unit(c), algebra.bracket(a, b, e))
        if lhs != rhs:
            verdict.add('representation commutator', (a, b, c, e))
        lhs = actv(unit(a), algebra.bracket(b, c, e))
        rhs = act(c, e) * act(a, b) - act(b, e) * act(a, c) + act(b, c) * act(a, e)
        if lhs != rhs:
            verdict.add('representation bracket', (a, b, c, e))
    rep.verified = verdict.ok
    return verdict


def verifyRbRepresentation(rbrep):
    """ Checks the T_M compatibility law on basis pairs and module vectors.

    @param rbrep RBRepresentation whose rep and structure are verified
    @return Verdict; violation indexes are (i, j, m)
    """
    requireVerified(rbrep.rep, 'representation')
    requireVerified(rbrep.rb, 'rota-baxter structure')
    verdict = Verdict('rota-baxter representation')
    act = rbrep.rep.actionVectors
    T = rbrep.rb.T.apply
    TM = rbrep.TM
    w = rbrep.weight
    unit = rbrep.rb.algebra.unit
    for i, j in combinations(range(rbrep.dim), 2):
        x, y = unit(i), unit(j)
        tx, ty = T(x), T(y)
        both, left, right, plain = act(tx, ty), act(tx, y), act(x, ty), act(x, y)
        lhs = both * TM
        inner = both + left * TM + right * TM + left.scaled(w) + right.scaled(w) \
                + (plain * TM).scaled(w) + plain.scaled(w * w)
        rhs = TM * inner
        if lhs != rhs:
            for m in range(rbrep.mdim):
                if lhs.column(m) != rhs.column(m):
                    verdict.add('rota-baxter representation', (i, j, m))
    rbrep.verified = verdict.ok
    return verdict


def verifyStructure(item):
    """ Runs every verifier that applies, bottom up.

    Stops before a verifier whose precondition failed.

    @param item ThreeLieAlgebra, RotaBaxterStructure or RBRepresentation
    @return combined Verdict
    """
    verdict = Verdict('structure')
    if isinstance(item, ThreeLieAlgebra):
        return verdict.extend(verifyFundamentalIdentity(item))
    if isinstance(item, RotaBaxterStructure):
        rb, rbrep = item, None
    elif isinstance(item, RBRepresentation):
        rb, rbrep = item.rb, item
    else:
        raise ContractError('cannot verify %r' % (item, ))
    if not verdict.extend(verifyFundamentalIdentity(rb.algebra)).ok:
        return verdict
    verdict.extend(verifyRotaBaxter(rb))
    if rbrep is not None:
        if rbrep.rep.algebra is not rb.algebra:
            verifyFundamentalIdentity(rbrep.rep.algebra)
        if verdict.extend(verifyRepresentation(rbrep.rep)).ok:
            verdict.extend(verifyRbRepresentation(rbrep))
    return verdict


def isRotaBaxterMorphism(source, target, phi):
    """ Checks that phi is a bracket morphism intertwining the operators.

    @param source RotaBaxterStructure
    @param target RotaBaxterStructure
    @param phi target.dim x source.dim matrix
    @return Verdict
    """
    verdict = Verdict('rota-baxter morphism')
    if (phi.rows, phi.cols) != (target.dim, source.dim):
        raise ContractError('morphism must be %sx%s' % (target.dim, source.dim))
    f = phi.apply
    for i, j, k in combinations(range(source.dim), 3):
        lhs = f(source.algebra.bracket(i, j, k))
        unit = source.algebra.unit
        rhs = target.algebra.bracketVectors(f(unit(i)), f(unit(j)), f(unit(k)))
        if lhs != rhs:
            verdict.add('bracket morphism', (i, j, k))
    difference = phi * source.T - target.T * phi
    location = difference.firstNonzero()
    if location is not None:
        verdict.add('operator morphism', location)
    return verdict


def rotaBaxterDefect(algebra, T, weight):
    """ Returns the first failing triple of the Rota-Baxter relation, or None.

    Lightweight form of verifyRotaBaxter for enumeration loops.
    """
    structure = RotaBaxterStructure(algebra, T, weight)
    apply = T.apply
    unit = algebra.unit
    for i, j, k in combinations(range(algebra.dim), 3):
        x, y, z = unit(i), unit(j), unit(k)
        lhs = algebra.bracketVectors(apply(x), apply(y), apply(z))
        if lhs != apply(structure.derived(x, y, z)):
            return (i, j, k)
    return None
