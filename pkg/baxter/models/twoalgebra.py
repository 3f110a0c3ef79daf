#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Distributed under the terms of the GNU General Public License v2

##
#
# 3-Lie 2-algebras on g0 + g1, their Rota-Baxter operators and crossed
# modules.
#
# l3 restricted to g0 is a bracket on g0 and l3(x, y, alpha) is the action
# S(x, y) alpha; l3 vanishes with two arguments in g1.  l5 is stored as a
# degree-3 cochain on g0 with values in g1 and T2 as a degree-2 one.
#
##

from itertools import combinations, product

from baxter.lib import ConsistencyError, ContractError, logging
from baxter.lib.linalg import (Matrix, addVectors, combine, isZeroVector, one,
                               scaleVector, solve, subVectors, unitVector)
from baxter.algebra.basic import (RBRepresentation, Representation,
                                  RotaBaxterStructure, ThreeLieAlgebra, Verdict,
                                  formatVector, requireVerified,
                                  verifyFundamentalIdentity, verifyRbRepresentation,
                                  verifyRepresentation, verifyRotaBaxter)
from baxter.models.cochains import Cochain, argumentKeys, keyArgs
from baxter.models.differentials import Complexes, partialValue, phiValue


def _sum(*vectors):
    total = vectors[0]
    for vector in vectors[1:]:
        total = addVectors(total, vector)
    return total


class ThreeLie2Algebra(object):
    """ Two-term 3-Lie algebra (g0, g1, d, l3, l5).

    @param g0 ThreeLieAlgebra holding l3 on g0
    @param S Representation of g0 on g1 holding l3(x, y, alpha)
    @param dmap n0 x n1 Matrix of d: g1 -> g0
    @param l5 degree-3 Cochain on g0 with values in g1
    """
    def __init__(self, g0, S, dmap, l5):
        n0, n1 = g0.dim, S.mdim
        if S.algebra is not g0 and not S.algebra.sameAs(g0):
            raise ContractError('action is over a different algebra')
        if (dmap.rows, dmap.cols) != (n0, n1):
            raise ContractError('d must be %sx%s' % (n0, n1))
        if (l5.degree, l5.d, l5.m) != (3, n0, n1):
            raise ContractError('l5 must be a degree 3 cochain on g0 with values in g1')
        self.g0 = g0
        self.S = S
        self.dmap = dmap
        self.l5 = l5

    @property
    def n0(self):
        return self.g0.dim

    @property
    def n1(self):
        return self.S.mdim

    def isSkeletal(self):
        return self.dmap.isZero()

    def isStrict(self):
        return self.l5.isZero()

    def act(self, x, y, alpha):
        return self.S.actionVectors(x, y).apply(alpha)

    def sameAs(self, other):
        return (self.g0.sameAs(other.g0) and self.S.sameAs(other.S)
                and self.dmap == other.dmap and self.l5 == other.l5)

    def __repr__(self):
        return 'ThreeLie2Algebra(n0=%s, n1=%s)' % (self.n0, self.n1)


class RB2Algebra(object):
    """ A 3-Lie 2-algebra with operators (T0, T1, T2) of one weight.

    @param underlying ThreeLie2Algebra
    @param T0 n0 x n0 Matrix
    @param T1 n1 x n1 Matrix
    @param T2 degree-2 Cochain on g0 with values in g1
    @param weight Rational
    """
    def __init__(self, underlying, T0, T1, T2, weight):
        n0, n1 = underlying.n0, underlying.n1
        if (T0.rows, T0.cols) != (n0, n0) or (T1.rows, T1.cols) != (n1, n1):
            raise ContractError('operators must be %sx%s and %sx%s' % (n0, n0, n1, n1))
        if (T2.degree, T2.d, T2.m) != (2, n0, n1):
            raise ContractError('T2 must be a degree 2 cochain on g0 with values in g1')
        self.underlying = underlying
        self.T0 = T0
        self.T1 = T1
        self.T2 = T2
        self.structure = RotaBaxterStructure(underlying.g0, T0, weight)

    @property
    def weight(self):
        return self.structure.weight

    def representation(self):
        """ (g1, S, T1) over (g0, T0) as an unverified RBRepresentation.

        """
        return RBRepresentation(self.underlying.S, self.T1, self.structure)

    def isStrict(self):
        return self.underlying.isStrict() and self.T2.isZero()

    def sameAs(self, other):
        return (self.underlying.sameAs(other.underlying) and self.T0 == other.T0
                and self.T1 == other.T1 and self.T2 == other.T2
                and self.weight == other.weight)

    def __repr__(self):
        return 'RB2Algebra(n0=%s, n1=%s, weight=%s)' % (
            self.underlying.n0, self.underlying.n1, self.weight)


class CrossedModule(object):
    """ (g0, g1, d, S, T0, T1) with base (g0, T0) of some weight.

    @param base RotaBaxterStructure on g0
    @param g1 ThreeLieAlgebra
    @param dmap n0 x n1 Matrix
    @param S Representation of g0 on g1
    @param T1 n1 x n1 Matrix
    """
    def __init__(self, base, g1, dmap, S, T1):
        n0, n1 = base.dim, g1.dim
        if S.mdim != n1 or (S.algebra is not base.algebra
                            and not S.algebra.sameAs(base.algebra)):
            raise ContractError('action must be on g1 and over the base algebra')
        if (dmap.rows, dmap.cols) != (n0, n1):
            raise ContractError('d must be %sx%s' % (n0, n1))
        if (T1.rows, T1.cols) != (n1, n1):
            raise ContractError('T1 must be %sx%s' % (n1, n1))
        self.base = base
        self.g1 = g1
        self.dmap = dmap
        self.S = S
        self.T1 = T1

    def sameAs(self, other):
        return (self.base.sameAs(other.base) and self.g1.sameAs(other.g1)
                and self.dmap == other.dmap and self.S.sameAs(other.S)
                and self.T1 == other.T1)

    def __repr__(self):
        return 'CrossedModule(n0=%s, n1=%s)' % (self.base.dim, self.g1.dim)


def verify2Algebra(A):
    """ Checks the six defining identities on basis tuples.

    Identities (1), (2), (4) and (5) are checked on every tuple, (3) and (6)
    on increasing pairs and triples where both sides are skew.

    @param A ThreeLie2Algebra
    @return Verdict
    """
    verdict = Verdict('3-lie 2-algebra')
    n0, n1 = A.n0, A.n1
    br = A.g0.bracketVectors
    act = A.act
    d = A.dmap.apply
    l5 = A.l5.evaluateVectors
    x = [unitVector(n0, i) for i in range(n0)]
    a = [unitVector(n1, i) for i in range(n1)]
    for i, j in combinations(range(n0), 2):
        for k in range(n1):
            if d(act(x[i], x[j], a[k])) != br(x[i], x[j], d(a[k])):
                verdict.add('2-algebra (1)', (i, j, k))
    for k, l in product(range(n1), repeat=2):
        for i in range(n0):
            if act(d(a[l]), x[i], a[k]) != act(x[i], d(a[k]), a[l]):
                verdict.add('2-algebra (2)', (k, l, i))
    for i, j in combinations(range(n0), 2):
        for p, q, r in combinations(range(n0), 3):
            lhs = d(l5([x[i], x[j], x[p], x[q], x[r]]))
            rhs = _sum(subVectors(br(x[p], br(x[i], x[j], x[q]), x[r]),
                                  br(x[i], x[j], br(x[p], x[q], x[r]))),
                       br(br(x[i], x[j], x[p]), x[q], x[r]),
                       br(x[p], x[q], br(x[i], x[j], x[r])))
            if lhs != rhs:
                verdict.add('2-algebra (3)', (i, j, p, q, r),
                            formatVector(subVectors(lhs, rhs)))
    for k in range(n1):
        al = a[k]
        for j, p, q, r in product(range(n0), repeat=4):
            lhs = l5([d(al), x[j], x[p], x[q], x[r]])
            rhs = combine([(-one, act(x[j], br(x[p], x[q], x[r]), al)),
                           (-one, act(x[p], x[r], act(x[j], x[q], al))),
                           (one, act(x[q], x[r], act(x[j], x[p], al))),
                           (one, act(x[p], x[q], act(x[j], x[r], al)))], n1)
            if lhs != rhs:
                verdict.add('2-algebra (4)', (k, j, p, q, r))
        for i, j, q, r in product(range(n0), repeat=4):
            lhs = l5([x[i], x[j], d(al), x[q], x[r]])
            rhs = combine([(-one, act(x[i], x[j], act(x[q], x[r], al))),
                           (one, act(br(x[i], x[j], x[q]), x[r], al)),
                           (one, act(x[q], x[r], act(x[i], x[j], al))),
                           (one, act(x[q], br(x[i], x[j], x[r]), al))], n1)
            if lhs != rhs:
                verdict.add('2-algebra (5)', (i, j, k, q, r))
    _checkSix(A, verdict)
    logging.debug('%r: %s violations', A, len(verdict.violations))
    return verdict


def _checkSix(A, verdict):
    """ The l5 coherence identity on seven arguments.

    """
    n0 = A.n0
    br = A.g0.bracketVectors
    act = A.act
    l5 = A.l5.evaluateVectors
    x = [unitVector(n0, i) for i in range(n0)]
    for key in argumentKeys(n0, 4):
        x1, x2, x3, x4, x5, x6, x7 = [x[i] for i in keyArgs(key, 4)]
        lhs = _sum(act(x6, x7, l5([x1, x2, x3, x4, x5])),
                   scaleVector(-1, act(x5, x7, l5([x1, x2, x3, x4, x6]))),
                   act(x1, x2, l5([x3, x4, x5, x6, x7])),
                   act(x5, x6, l5([x1, x2, x3, x4, x7])),
                   l5([x1, x2, br(x3, x4, x5), x6, x7]),
                   l5([x1, x2, x5, br(x3, x4, x6), x7]),
                   l5([x1, x2, x5, x6, br(x3, x4, x7)]))
        rhs = _sum(act(x3, x4, l5([x1, x2, x5, x6, x7])),
                   l5([br(x1, x2, x3), x4, x5, x6, x7]),
                   l5([x3, br(x1, x2, x4), x5, x6, x7]),
                   l5([x3, x4, br(x1, x2, x5), x6, x7]),
                   l5([x3, x4, x5, br(x1, x2, x6), x7]),
                   l5([x1, x2, x3, x4, br(x5, x6, x7)]),
                   l5([x3, x4, x5, x6, br(x1, x2, x7)]))
        if lhs != rhs:
            verdict.add('2-algebra (6)', keyArgs(key, 4),
                        formatVector(subVectors(lhs, rhs)))


def verifyRb2Algebra(A):
    """ Checks conditions (a) to (d) of a Rota-Baxter operator on a 2-algebra.

    (c) reads l3(T0 x, T0 y, T1 alpha) for its last term.  (d) is taken in
    full: phi^3(l5) + partial^2(T2) = 0 over the representation (g1, S, T1),
    all weight tiers included.

    @param A RB2Algebra whose underlying 2-algebra is valid
    @return Verdict
    """
    verdict = Verdict('rota-baxter 2-algebra')
    G = A.underlying
    n0, n1 = G.n0, G.n1
    d = G.dmap.apply
    br = G.g0.bracketVectors
    act = G.act
    T0, T1 = A.T0.apply, A.T1.apply
    T2 = A.T2.evaluateVectors
    w = A.weight
    x = [unitVector(n0, i) for i in range(n0)]
    a = [unitVector(n1, i) for i in range(n1)]
    location = (A.T0 * G.dmap - G.dmap * A.T1).firstNonzero()
    if location is not None:
        verdict.add('rota-baxter 2-algebra (a)', location)
    for i, j, k in combinations(range(n0), 3):
        lhs = subVectors(T0(A.structure.derived(x[i], x[j], x[k])),
                         br(T0(x[i]), T0(x[j]), T0(x[k])))
        rhs = d(T2([x[i], x[j], x[k]]))
        if lhs != rhs:
            verdict.add('rota-baxter 2-algebra (b)', (i, j, k),
                        formatVector(subVectors(lhs, rhs)))
    for i, j in combinations(range(n0), 2):
        u, v = x[i], x[j]
        tu, tv = T0(u), T0(v)
        for k in range(n1):
            al = a[k]
            tal = T1(al)
            inner = combine([(one, act(tu, tv, al)), (one, act(u, tv, tal)),
                             (one, act(tu, v, tal)), (w, act(tu, v, al)),
                             (w, act(u, tv, al)), (w, act(u, v, tal)),
                             (w * w, act(u, v, al))], n1)
            lhs = subVectors(T1(inner), act(tu, tv, tal))
            rhs = T2([u, v, d(al)])
            if lhs != rhs:
                verdict.add('rota-baxter 2-algebra (c)', (i, j, k),
                            formatVector(subVectors(lhs, rhs)))
    P = A.representation()
    for key in argumentKeys(n0, 3):
        args = keyArgs(key, 3)
        value = addVectors(phiValue(P, G.l5, args), partialValue(P, A.T2, args))
        if not isZeroVector(value):
            verdict.add('rota-baxter 2-algebra (d)', args, formatVector(value))
    return verdict


def _baseAndRepresentation(A):
    structure = A.structure
    if not verifyFundamentalIdentity(structure.algebra).ok:
        raise ContractError('g0 bracket fails the fundamental identity')
    if not verifyRotaBaxter(structure).ok:
        raise ContractError('T0 is not a rota-baxter operator')
    P = A.representation()
    if not verifyRepresentation(P.rep).ok or not verifyRbRepresentation(P).ok:
        raise ContractError('(g1, S, T1) is not a rota-baxter representation')
    return structure, P


def skeletalToCocycle(A, limit=None):
    """ Reads (l5, T2) of a skeletal instance as a degree-3 cochain pair.

    @param A RB2Algebra with d = 0
    @keyparam limit cochain size guard for the differentials
    @return (f, theta, ok) where ok is d^3(f, theta) = 0
    """
    if not A.underlying.isSkeletal():
        raise ContractError('only skeletal 2-algebras give cocycles')
    P = _baseAndRepresentation(A)[1]
    f, theta = A.underlying.l5, A.T2
    ok = isZeroVector(Complexes(P, limit).rba(3).apply(f.values + theta.values))
    return f, theta, ok


def skeletalFromCochains(structure, P, f, theta):
    """ Assembles a skeletal instance without checking anything.

    """
    n0, n1 = structure.dim, P.mdim
    G = ThreeLie2Algebra(structure.algebra, P.rep, Matrix.zeros(n0, n1), f)
    return RB2Algebra(G, structure.T, P.TM, theta, structure.weight)


def cocycleToSkeletal(structure, P, f, theta, complexes=None):
    """ Builds the skeletal instance of a degree-3 cocycle pair.

    @param structure verified RotaBaxterStructure (g0, T0)
    @param P verified RBRepresentation over it
    @param f degree-3 Cochain, becomes l5
    @param theta degree-2 Cochain, becomes T2
    @return RB2Algebra
    """
    requireVerified(P, 'rota-baxter representation')
    if P.rb is not structure and not P.rb.sameAs(structure):
        raise ContractError('representation is over a different structure')
    cx = complexes if complexes is not None else Complexes(P)
    residual = cx.rba(3).apply(f.values + theta.values)
    if not isZeroVector(residual):
        raise ContractError('(f, theta) is not a cocycle')
    A = skeletalFromCochains(structure, P, f, theta)
    verdict = verify2Algebra(A.underlying).extend(verifyRb2Algebra(A))
    if not verdict.ok:
        raise ConsistencyError('cocycle gives an invalid skeletal 2-algebra: %s'
                               % (verdict.first(), ), verdict.first().indexes)
    return A


def verifyCrossedModule(C):
    """ Checks every crossed module axiom.

    @param C CrossedModule with a verified base
    @return Verdict
    """
    requireVerified(C.base, 'rota-baxter structure')
    verdict = Verdict('crossed module')
    n0, n1 = C.base.dim, C.g1.dim
    verdict.extend(verifyFundamentalIdentity(C.g1))
    d = C.dmap.apply
    br0 = C.base.algebra.bracketVectors
    br1 = C.g1.bracketVectors
    S = C.S.actionVectors
    x = [unitVector(n0, i) for i in range(n0)]
    a = [unitVector(n1, i) for i in range(n1)]
    for i, j, k in combinations(range(n1), 3):
        if d(br1(a[i], a[j], a[k])) != br0(d(a[i]), d(a[j]), d(a[k])):
            verdict.add('d morphism', (i, j, k))
    if verdict.extend(verifyRepresentation(C.S)).ok:
        verdict.extend(verifyRbRepresentation(RBRepresentation(C.S, C.T1, C.base)))
    for i, j in combinations(range(n0), 2):
        for k in range(n1):
            if d(S(x[i], x[j]).apply(a[k])) != br0(x[i], x[j], d(a[k])):
                verdict.add('d equivariance', (i, j, k))
    location = (C.base.T * C.dmap - C.dmap * C.T1).firstNonzero()
    if location is not None:
        verdict.add('T0 d = d T1', location)
    for i, j in combinations(range(n1), 2):
        for k in range(n1):
            if S(d(a[i]), d(a[j])).apply(a[k]) != br1(a[i], a[j], a[k]):
                verdict.add('S(d, d) = bracket', (i, j, k))
    for i in range(n0):
        for k in range(n1):
            for l in range(k, n1):
                lhs = S(x[i], d(a[k])).apply(a[l])
                rhs = S(x[i], d(a[l])).apply(a[k])
                if lhs != scaleVector(-1, rhs):
                    verdict.add('S(x, d) skew', (i, k, l))
    return verdict


def crossedModuleToStrict(C):
    """ Returns the strict instance l3(x, y, alpha) = S(x, y) alpha.

    @param C CrossedModule passing verifyCrossedModule
    @return (RB2Algebra, Verdict)
    """
    crossed = verifyCrossedModule(C)
    if not crossed.ok:
        raise ContractError('invalid crossed module: %s' % (crossed.first(), ))
    n0, n1 = C.base.dim, C.g1.dim
    G = ThreeLie2Algebra(C.base.algebra, C.S, C.dmap, Cochain(n0, n1, 3))
    A = RB2Algebra(G, C.base.T, C.T1, Cochain(n0, n1, 2), C.base.weight)
    verdict = verify2Algebra(G).extend(verifyRb2Algebra(A))
    if not verdict.ok:
        raise ConsistencyError('crossed module gives an invalid strict 2-algebra: %s'
                               % (verdict.first(), ), verdict.first().indexes)
    return A, verdict


def strictToCrossedModule(A):
    """ Recovers the crossed module of a strict instance.

    [alpha, beta, gamma] = l3(d alpha, d beta, gamma), which must agree with
    l3(d alpha, beta, d gamma) and l3(alpha, d beta, d gamma).

    @param A strict RB2Algebra passing both verifiers
    @return CrossedModule
    """
    if not A.isStrict():
        raise ContractError('only strict 2-algebras give crossed modules')
    G = A.underlying
    verdict = verify2Algebra(G).extend(verifyRb2Algebra(A))
    if not verdict.ok:
        raise ContractError('invalid strict 2-algebra: %s' % (verdict.first(), ))
    n1 = G.n1
    d = G.dmap.apply
    act = G.act
    a = [unitVector(n1, i) for i in range(n1)]
    constants = {}
    for i, j, k in product(range(n1), repeat=3):
        first = act(d(a[i]), d(a[j]), a[k])
        second = scaleVector(-1, act(d(a[i]), d(a[k]), a[j]))
        third = act(d(a[j]), d(a[k]), a[i])
        if not (first == second == third):
            raise ConsistencyError('g1 bracket formulas disagree at %r' % ((i, j, k), ),
                                   (i, j, k))
        if i < j < k:
            constants[i, j, k] = first
    g1 = ThreeLieAlgebra(n1, constants)
    base = RotaBaxterStructure(G.g0, A.T0, A.weight)
    if not verifyFundamentalIdentity(G.g0).ok or not verifyRotaBaxter(base).ok:
        raise ConsistencyError('strict 2-algebra has an invalid base')
    C = CrossedModule(base, g1, G.dmap, G.S, A.T1)
    crossed = verifyCrossedModule(C)
    if not crossed.ok:
        raise ConsistencyError('recovered crossed module is invalid: %s'
                               % (crossed.first(), ), crossed.first().indexes)
    return C


def crossedModuleFromIdeal(structure, ideal):
    """ Returns (I, ad restricted, inclusion) for a T-invariant ideal I.

    @param structure verified RotaBaxterStructure
    @param ideal n0 x k Matrix whose independent columns span I
    @return CrossedModule
    """
    requireVerified(structure, 'rota-baxter structure')
    n0, k = ideal.rows, ideal.cols
    algebra = structure.algebra

    def coordinates(vector):
        found = solve(ideal, vector)
        if found is None:
            raise ContractError('subspace is not an ideal or not T-invariant')
        return found

    basis = [ideal.column(i) for i in range(k)]
    constants = {}
    for i, j, l in combinations(range(k), 3):
        constants[i, j, l] = coordinates(algebra.bracketVectors(basis[i], basis[j], basis[l]))
    g1 = ThreeLieAlgebra(k, constants)
    rho = {}
    for i, j in combinations(range(n0), 2):
        columns = [coordinates(algebra.bracketVectors(algebra.unit(i), algebra.unit(j),
                                                      basis[l])) for l in range(k)]
        rho[i, j] = Matrix.fromColumns(columns, k)
    S = Representation(algebra, k, rho)
    T1 = Matrix.fromColumns([coordinates(structure.T.apply(v)) for v in basis], k)
    return CrossedModule(structure, g1, ideal, S, T1)


def zero2Algebra(g0, n1):
    """ Returns the 2-algebra with g1 of dimension n1 and all mixed data zero.

    """
    S = Representation(g0, n1, {})
    return ThreeLie2Algebra(g0, S, Matrix.zeros(g0.dim, n1), Cochain(g0.dim, n1, 3))
