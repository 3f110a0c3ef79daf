#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Distributed under the terms of the GNU General Public License v2

##
#
# Truncated one-parameter deformations of a Rota-Baxter 3-Lie algebra.
#
# mu_t = mu + mu_1 t + ... + mu_N t^N and T_t = T + T_1 t + ... + T_N t^N
# are kept to order N.  Equivalences are power series
# psi_t = id + psi_1 t + ... + psi_N t^N acting by conjugation.
#
##

from itertools import combinations

from baxter.lib import ConsistencyError, ContractError, logging
from baxter.lib.linalg import (Matrix, addVectors, isZeroVector, solve,
                               subVectors, zeroVector)
from baxter.lib.defaults import modes
from baxter.algebra.basic import (ThreeLieAlgebra, Verdict, formatVector,
                                  requireVerified)
from baxter.algebra.advanced import regularRepresentation
from baxter.models.cochains import (Cochain, cochainDimension, cochainFromBracket,
                                    cochainFromMatrix, constantsFromCochain,
                                    matrixFromCochain)
from baxter.models.differentials import Complexes


def _trilinear(cochain):
    return ThreeLieAlgebra(cochain.d, constantsFromCochain(cochain))


class TruncatedDeformation(object):
    """ A deformation (mu_t, T_t) of a structure, truncated at order N.

    @param base RotaBaxterStructure being deformed
    @param muTerms degree-2 Cochain instances mu_1..mu_N with values in g
    @param tTerms Matrix instances T_1..T_N
    """
    def __init__(self, base, muTerms, tTerms):
        muTerms, tTerms = list(muTerms), list(tTerms)
        if len(muTerms) != len(tTerms):
            raise ContractError('%s bracket terms but %s operator terms'
                                % (len(muTerms), len(tTerms)))
        d = base.dim
        for mu in muTerms:
            if (mu.degree, mu.d, mu.m) != (2, d, d):
                raise ContractError('bracket terms must be skew maps on g')
        for T in tTerms:
            if (T.rows, T.cols) != (d, d):
                raise ContractError('operator terms must be %sx%s' % (d, d))
        self.base = base
        self.muTerms = muTerms
        self.tTerms = tTerms
        self.brackets = [base.algebra] + [_trilinear(mu) for mu in muTerms]
        self._complexes = None

    @classmethod
    def trivial(cls, base, order):
        d = base.dim
        return cls(base, [Cochain(d, d, 2) for _ in range(order)],
                   [Matrix.zeros(d, d) for _ in range(order)])

    @property
    def order(self):
        return len(self.muTerms)

    def operator(self, i):
        return self.base.T if i == 0 else self.tTerms[i - 1]

    def isTrivial(self):
        return all(mu.isZero() for mu in self.muTerms) and \
               all(T.isZero() for T in self.tTerms)

    def complexes(self):
        """ Differentials of the regular representation of the base.

        """
        if self._complexes is None:
            self._complexes = Complexes(regularRepresentation(self.base))
        return self._complexes

    def sameAs(self, other):
        return self.base.sameAs(other.base) and self.muTerms == other.muTerms \
               and self.tTerms == other.tTerms

    def __repr__(self):
        return 'TruncatedDeformation(dim=%s, order=%s)' % (self.base.dim, self.order)


class DeformationEquivalence(object):
    """ psi_t = id + psi_1 t + ... + psi_N t^N.

    """
    def __init__(self, dim, psiTerms):
        psiTerms = list(psiTerms)
        for psi in psiTerms:
            if (psi.rows, psi.cols) != (dim, dim):
                raise ContractError('equivalence terms must be %sx%s' % (dim, dim))
        self.dim = dim
        self.psiTerms = psiTerms

    @classmethod
    def identity(cls, dim, order):
        return cls(dim, [Matrix.zeros(dim, dim) for _ in range(order)])

    @property
    def order(self):
        return len(self.psiTerms)

    def term(self, i):
        return Matrix.identity(self.dim) if i == 0 else self.psiTerms[i - 1]

    def inverseTerms(self):
        """ Returns phi_0..phi_N of the truncated inverse series.

        """
        phis = [Matrix.identity(self.dim)]
        for k in range(1, self.order + 1):
            total = Matrix.zeros(self.dim, self.dim)
            for i in range(1, k + 1):
                total = total + self.psiTerms[i - 1] * phis[k - i]
            phis.append(-total)
        return phis

    def isIdentity(self):
        return all(psi.isZero() for psi in self.psiTerms)

    def __eq__(self, other):
        if not isinstance(other, DeformationEquivalence):
            return NotImplemented
        return self.dim == other.dim and self.psiTerms == other.psiTerms

    def __hash__(self):
        return hash((self.dim, tuple(self.psiTerms)))

    def __repr__(self):
        return 'DeformationEquivalence(dim=%s, order=%s)' % (self.dim, self.order)


def _compositions(total, parts):
    """ Yields every tuple of parts naturals summing to total.

    """
    if parts == 1:
        yield (total, )
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first, ) + rest


def verifyDeformation(D, mode=modes.pair):
    """ Checks the coefficient of t^n of both deformed identities.

    @param D TruncatedDeformation over a verified base
    @keyparam mode 'pair' or 'operator-only'
    @return Verdict; violation indexes are (n, ) + basis tuple
    """
    requireVerified(D.base, 'rota-baxter structure')
    if mode not in modes.names:
        raise ContractError('unknown deformation mode %r' % (mode, ))
    if mode == modes.operatorOnly and not all(mu.isZero() for mu in D.muTerms):
        raise ContractError('operator-only deformations keep the bracket fixed')
    verdict = Verdict('deformation')
    d = D.base.dim
    w = D.base.weight
    unit = D.base.algebra.unit
    br = [b.bracketVectors for b in D.brackets]
    ops = [D.operator(i).apply for i in range(D.order + 1)]
    for n in range(D.order + 1):
        splits2 = list(_compositions(n, 2))
        for a, b in combinations(range(d), 2):
            ua, ub = unit(a), unit(b)
            for c, e, h in combinations(range(d), 3):
                uc, ue, uh = unit(c), unit(e), unit(h)
                lhs = zeroVector(d)
                rhs = zeroVector(d)
                for i, j in splits2:
                    lhs = addVectors(lhs, br[i](ua, ub, br[j](uc, ue, uh)))
                    rhs = addVectors(rhs, br[i](br[j](ua, ub, uc), ue, uh))
                    rhs = addVectors(rhs, br[i](uc, br[j](ua, ub, ue), uh))
                    rhs = addVectors(rhs, br[i](uc, ue, br[j](ua, ub, uh)))
                if lhs != rhs:
                    verdict.add('deformed fundamental identity', (n, a, b, c, e, h),
                                formatVector(subVectors(lhs, rhs)))
        for x, y, z in combinations(range(d), 3):
            ux, uy, uz = unit(x), unit(y), unit(z)
            lhs = zeroVector(d)
            for i, j, k, l in _compositions(n, 4):
                lhs = addVectors(lhs, br[i](ops[j](ux), ops[k](uy), ops[l](uz)))
            rhs = zeroVector(d)
            for i, j, k, l in _compositions(n, 4):
                inner = addVectors(
                    addVectors(br[j](ops[k](ux), ops[l](uy), uz),
                               br[j](ops[k](ux), uy, ops[l](uz))),
                    br[j](ux, ops[k](uy), ops[l](uz)))
                rhs = addVectors(rhs, ops[i](inner))
            if w:
                for i, j, k in _compositions(n, 3):
                    inner = addVectors(
                        addVectors(br[j](ops[k](ux), uy, uz), br[j](ux, ops[k](uy), uz)),
                        br[j](ux, uy, ops[k](uz)))
                    rhs = addVectors(rhs, tuple(w * v for v in ops[i](inner)))
                for i, j in splits2:
                    value = ops[i](br[j](ux, uy, uz))
                    rhs = addVectors(rhs, tuple(w * w * v for v in value))
            if lhs != rhs:
                verdict.add('deformed rota-baxter relation', (n, x, y, z),
                            formatVector(subVectors(lhs, rhs)))
    logging.debug('deformation of order %s: %s violations',
                  D.order, len(verdict.violations))
    return verdict


class Infinitesimal(object):
    """ The t^1 coefficient of a deformation as a cochain.

    @param mode 'pair' or 'operator-only'
    @param mu degree-2 Cochain (zero in operator-only mode)
    @param theta degree-1 Cochain for T_1
    """
    def __init__(self, mode, mu, theta):
        self.mode = mode
        self.mu = mu
        self.theta = theta

    @property
    def coordinates(self):
        if self.mode == modes.operatorOnly:
            return self.theta.values
        return self.mu.values + self.theta.values

    def isZero(self):
        return isZeroVector(self.coordinates)


def _stageVector(D, n):
    return D.muTerms[n - 1].values + cochainFromMatrix(D.tTerms[n - 1]).values


def infinitesimal(D, mode=modes.pair):
    """ Returns (mu_1, T_1) and checks it is a cocycle.

    In pair mode the pair is a degree-2 cocycle of the mapping-cone complex
    of the regular representation; in operator-only mode T_1 is a degree-1
    cocycle of the operator complex.

    @param D TruncatedDeformation of order >= 1
    @return Infinitesimal
    """
    if D.order < 1:
        raise ContractError('infinitesimals need a deformation of order >= 1')
    cx = D.complexes()
    result = Infinitesimal(mode, D.muTerms[0], cochainFromMatrix(D.tTerms[0]))
    if mode == modes.operatorOnly:
        if not D.muTerms[0].isZero():
            raise ContractError('operator-only deformations keep the bracket fixed')
        image = cx.partial(1).apply(result.coordinates)
    else:
        image = cx.rba(2).apply(result.coordinates)
    if not isZeroVector(image):
        raise ContractError('infinitesimal is not a cocycle; verify the deformation first')
    return result


def coboundaryOf(D, psi):
    """ Returns the coordinates of d^1(psi, 0) for a d x d matrix psi.

    """
    cx = D.complexes()
    d = D.base.dim
    vector = cochainFromMatrix(psi).values + zeroVector(cochainDimension(d, d, 0))
    return cx.rba(1).apply(vector)


def applyEquivalence(D, E):
    """ Conjugates a deformation by psi_t, truncated at order N.

    mu'_t = psi_t^-1 mu_t (psi_t, psi_t, psi_t) and T'_t = psi_t^-1 T_t psi_t.
    The t^1 coefficients are checked to move by d^1(psi_1, 0).

    @param D TruncatedDeformation
    @param E DeformationEquivalence of the same order
    @return TruncatedDeformation
    """
    if D.order != E.order:
        raise ContractError('deformation has order %s, equivalence %s'
                            % (D.order, E.order))
    d = D.base.dim
    N = D.order
    phis = E.inverseTerms()
    psis = [E.term(i) for i in range(N + 1)]
    br = [b.bracketVectors for b in D.brackets]
    unit = D.base.algebra.unit
    images = [[psi.apply(unit(i)) for i in range(d)] for psi in psis]
    muTerms, tTerms = [], []
    for n in range(1, N + 1):
        entries = {}
        for x, y, z in combinations(range(d), 3):
            value = zeroVector(d)
            for a, b, c, e, f in _compositions(n, 5):
                inner = br[b](images[c][x], images[e][y], images[f][z])
                value = addVectors(value, phis[a].apply(inner))
            entries[x, y, z] = value
        muTerms.append(Cochain.fromEntries(d, d, 2, entries))
        total = Matrix.zeros(d, d)
        for a, b, c in _compositions(n, 3):
            total = total + phis[a] * D.operator(b) * psis[c]
        tTerms.append(total)
    result = TruncatedDeformation(D.base, muTerms, tTerms)
    result._complexes = D._complexes
    if N >= 1:
        moved = subVectors(_stageVector(result, 1), _stageVector(D, 1))
        if moved != coboundaryOf(D, E.psiTerms[0]):
            raise ConsistencyError('first order terms do not move by d^1(psi_1, 0)', (1, ))
    return result


def composeEquivalences(E1, E2):
    """ Returns the equivalence applying E1 then E2.

    The product series psi1_t psi2_t, truncated.
    """
    if (E1.dim, E1.order) != (E2.dim, E2.order):
        raise ContractError('equivalences of different shapes')
    terms = []
    for n in range(1, E1.order + 1):
        total = Matrix.zeros(E1.dim, E1.dim)
        for i, j in _compositions(n, 2):
            total = total + E1.term(i) * E2.term(j)
        terms.append(total)
    return DeformationEquivalence(E1.dim, terms)


def twistTrivial(base, E):
    """ Pushes the undeformed structure through an equivalence.

    """
    return applyEquivalence(TruncatedDeformation.trivial(base, E.order), E)


class Obstruction(object):
    """ A stage whose leading terms are a cocycle but not a coboundary.

    """
    def __init__(self, order, mu, theta):
        self.order = order
        self.mu = mu
        self.theta = theta

    @property
    def coordinates(self):
        return self.mu.values + self.theta.values

    def asDict(self):
        return {
            'order': self.order,
            'mu': self.mu,
            'theta': self.theta,
        }

    def __repr__(self):
        return 'Obstruction(order=%s)' % self.order


def trivialize(D):
    """ Tries to conjugate a deformation back to the base, stage by stage.

    At the lowest nonzero order n the terms (mu_n, T_n) form a cocycle.  When
    it equals d^1(x, 0) the equivalence id - x t^n removes it; otherwise the
    deformation is obstructed at n.

    @param D TruncatedDeformation passing verifyDeformation
    @return (DeformationEquivalence, None) or (None, Obstruction)
    """
    d = D.base.dim
    N = D.order
    cx = D.complexes()
    solver = cx.rba(1)
    cocycle = cx.rba(2)
    total = DeformationEquivalence.identity(d, N)
    current = D
    for n in range(1, N + 1):
        vector = _stageVector(current, n)
        if isZeroVector(vector):
            continue
        if not isZeroVector(cocycle.apply(vector)):
            raise ConsistencyError('order %s terms are not a cocycle' % n, (n, ))
        x = solve(solver, vector)
        if x is None:
            logging.debug('deformation obstructed at order %s', n)
            return None, Obstruction(n, current.muTerms[n - 1],
                                     cochainFromMatrix(current.tTerms[n - 1]))
        psi = matrixFromCochain(Cochain(d, d, 1, x[:d * d]))
        terms = [Matrix.zeros(d, d) for _ in range(N)]
        terms[n - 1] = -psi
        stage = DeformationEquivalence(d, terms)
        current = applyEquivalence(current, stage)
        total = composeEquivalences(total, stage)
        if not isZeroVector(_stageVector(current, n)):
            raise ConsistencyError('order %s survives its equivalence' % n, (n, ))
        logging.debug('order %s removed', n)
    if not current.isTrivial():
        raise ConsistencyError('trivialized deformation is not the base', (N, ))
    return total, None


def deformationFromBracket(base, algebra, order=1):
    """ Returns the deformation mu + t [.,.,.]' with T unchanged.

    """
    d = base.dim
    terms = [cochainFromBracket(algebra)] + [Cochain(d, d, 2) for _ in range(order - 1)]
    return TruncatedDeformation(base, terms, [Matrix.zeros(d, d) for _ in range(order)])
