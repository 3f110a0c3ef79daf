#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Distributed under the terms of the GNU General Public License v2

##
#
# Abelian extensions 0 -> M -> E -> g -> 0 of Rota-Baxter 3-Lie algebras.
#
# Built extensions live on g + M with the algebra coordinates first.
# A degree-2 cocycle (psi, chi) of the mapping-cone complex twists the
# semidirect bracket by psi and the operator by chi.
#
##

from itertools import combinations

from baxter.lib import ConsistencyError, ContractError, logging
from baxter.lib.linalg import (Matrix, determinant, isZeroVector, rank, solve,
                               subVectors, unitVector, zero, zeroVector)
from baxter.algebra.basic import (RBRepresentation, Representation,
                                  RotaBaxterStructure, ThreeLieAlgebra, Verdict,
                                  formatVector, isRotaBaxterMorphism, requireVerified,
                                  verifyFundamentalIdentity, verifyRbRepresentation,
                                  verifyRepresentation, verifyRotaBaxter)
from baxter.models.cochains import (Cochain, cochainDimension, cochainFromMatrix,
                                    matrixFromCochain)
from baxter.models.differentials import Complexes


class ExtensionCocycle(object):
    """ A pair (psi, chi) in C^2 + C^1 with values in the module.

    @param psi degree-2 Cochain
    @param chi degree-1 Cochain
    """
    def __init__(self, psi, chi):
        if (psi.degree, chi.degree) != (2, 1) or (psi.d, psi.m) != (chi.d, chi.m):
            raise ContractError('extension cocycles pair a degree 2 and a degree 1 '
                                'cochain over the same spaces')
        self.psi = psi
        self.chi = chi

    @classmethod
    def zero(cls, d, m):
        return cls(Cochain(d, m, 2), Cochain(d, m, 1))

    @classmethod
    def fromCoordinates(cls, d, m, vector):
        split = cochainDimension(d, m, 2)
        return cls(Cochain(d, m, 2, vector[:split]), Cochain(d, m, 1, vector[split:]))

    @property
    def coordinates(self):
        return self.psi.values + self.chi.values

    def __sub__(self, other):
        return ExtensionCocycle(self.psi - other.psi, self.chi - other.chi)

    def __eq__(self, other):
        if not isinstance(other, ExtensionCocycle):
            return NotImplemented
        return self.psi == other.psi and self.chi == other.chi

    def __hash__(self):
        return hash((self.psi, self.chi))

    def __repr__(self):
        return 'ExtensionCocycle(d=%s, m=%s)' % (self.psi.d, self.psi.m)


class AbelianExtension(object):
    """ An extension of a structure by an abelian module.

    @param total RotaBaxterStructure on the (d + m)-dimensional space
    @param inclusion (d + m) x m Matrix of i
    @param projection d x (d + m) Matrix of p
    @param base RotaBaxterStructure on g
    @param TM m x m operator on the fiber
    """
    def __init__(self, total, inclusion, projection, base, TM):
        d, m = base.dim, TM.rows
        if total.dim != d + m:
            raise ContractError('total space must have dimension %s' % (d + m))
        if (inclusion.rows, inclusion.cols) != (d + m, m):
            raise ContractError('inclusion must be %sx%s' % (d + m, m))
        if (projection.rows, projection.cols) != (d, d + m):
            raise ContractError('projection must be %sx%s' % (d, d + m))
        self.total = total
        self.inclusion = inclusion
        self.projection = projection
        self.base = base
        self.TM = TM

    @property
    def d(self):
        return self.base.dim

    @property
    def m(self):
        return self.TM.rows

    def validate(self):
        """ Checks exactness, the abelian fiber and the commuting diagram.

        @return Verdict
        """
        verdict = Verdict('abelian extension')
        i, p = self.inclusion, self.projection
        total = self.total.algebra
        if not (p * i).isZero():
            verdict.add('projection kills inclusion', (p * i).firstNonzero())
        if rank(p) != self.d:
            verdict.add('projection surjective', (rank(p), ))
        if rank(i) != self.m:
            verdict.add('inclusion injective', (rank(i), ))
        fiber = [i.column(w) for w in range(self.m)]
        for a, b in combinations(range(self.m), 2):
            for k in range(total.dim):
                value = total.bracketVectors(fiber[a], fiber[b], total.unit(k))
                if not isZeroVector(value):
                    verdict.add('abelian fiber', (a, b, k))
        location = (self.total.T * i - i * self.TM).firstNonzero()
        if location is not None:
            verdict.add('operator on fiber', location)
        if verdict.ok:
            for a, b, c in combinations(range(total.dim), 3):
                lhs = p.apply(total.bracket(a, b, c))
                rhs = self.base.algebra.bracketVectors(
                    p.column(a), p.column(b), p.column(c))
                if lhs != rhs:
                    verdict.add('projection morphism', (a, b, c))
            location = (p * self.total.T - self.base.T * p).firstNonzero()
            if location is not None:
                verdict.add('operator on base', location)
        return verdict

    def toFiber(self, vector):
        """ Reads a vector of i(M) in module coordinates.

        """
        coordinates = solve(self.inclusion, vector)
        if coordinates is None:
            raise ConsistencyError('vector does not lie in the fiber', tuple(vector))
        return coordinates

    def checkSection(self, s):
        if (s.rows, s.cols) != (self.d + self.m, self.d):
            raise ContractError('section must be %sx%s' % (self.d + self.m, self.d))
        if self.projection * s != Matrix.identity(self.d):
            raise ContractError('p s is not the identity')

    def canonicalSection(self):
        """ Returns the section lifting each e_i with zero free coordinates.

        """
        columns = []
        for k in range(self.d):
            lift = solve(self.projection, unitVector(self.d, k))
            if lift is None:
                raise ContractError('projection is not surjective')
            columns.append(lift)
        return Matrix.fromColumns(columns, self.d + self.m)

    def __repr__(self):
        return 'AbelianExtension(d=%s, m=%s)' % (self.d, self.m)


def _cocycleCheck(P, cocycle, complexes=None):
    cx = complexes if complexes is not None else Complexes(P)
    return isZeroVector(cx.rba(2).apply(cocycle.coordinates))


def buildExtension(P, cocycle, complexes=None):
    """ Builds g + M with [.,.,.]_psi and T_chi.

    [x+u, y+v, z+w] = [x,y,z] + psi(x,y,z) + rho(x,y)w + rho(y,z)u + rho(z,x)v
    and T_chi(x+u) = Tx + chi(x) + T_M u.  The total structure is valid
    exactly when d^2(psi, chi) = 0; both sides are computed and compared.

    @param P verified RBRepresentation
    @param cocycle ExtensionCocycle over P
    @return (AbelianExtension, Verdict of the total structure)
    """
    requireVerified(P, 'rota-baxter representation')
    d, m = P.dim, P.mdim
    if (cocycle.psi.d, cocycle.psi.m) != (d, m):
        raise ContractError('cocycle lives over dimensions (%s, %s), expected (%s, %s)'
                            % (cocycle.psi.d, cocycle.psi.m, d, m))
    algebra = P.rb.algebra
    constants = {}
    for a, b, c in combinations(range(d), 3):
        constants[a, b, c] = tuple(algebra.bracket(a, b, c)) + \
                             tuple(cocycle.psi.evaluate((a, b, c)))
    for (a, b), matrix in P.rep.rho.items():
        for w in range(m):
            column = matrix.column(w)
            if any(column):
                constants[a, b, d + w] = (zero, ) * d + tuple(column)
    names = algebra.names + ['m%s' % (w + 1) for w in range(m)]
    totalAlgebra = ThreeLieAlgebra(d + m, constants, names)
    T = Matrix.block([[P.rb.T, Matrix.zeros(d, m)],
                      [matrixFromCochain(cocycle.chi), P.TM]])
    total = RotaBaxterStructure(totalAlgebra, T, P.weight)
    verdict = Verdict('extension')
    if verdict.extend(verifyFundamentalIdentity(totalAlgebra)).ok:
        verdict.extend(verifyRotaBaxter(total))
    isCocycle = _cocycleCheck(P, cocycle, complexes)
    if verdict.ok != isCocycle:
        raise ConsistencyError('extension validity %s but cocycle condition %s'
                               % (verdict.ok, isCocycle))
    inclusion = Matrix.block([[Matrix.zeros(d, m)], [Matrix.identity(m)]])
    projection = Matrix.block([[Matrix.identity(d), Matrix.zeros(d, m)]])
    extension = AbelianExtension(total, inclusion, projection, P.rb, P.TM)
    logging.debug('built %r, valid %s', extension, verdict.ok)
    return extension, verdict


def extractCocycle(E, s):
    """ Reads the cocycle and the module action off a section.

    psi(x,y,z) = [sx,sy,sz] - s[x,y,z], chi(x) = T s(x) - s(Tx) and
    rho(x,y)u = [sx, sy, i(u)].

    @param E valid AbelianExtension
    @param s section matrix with p s = id
    @return (ExtensionCocycle, RBRepresentation)
    """
    requireVerified(E.total, 'extension total structure')
    requireVerified(E.base, 'base structure')
    E.checkSection(s)
    d, m = E.d, E.m
    total = E.total.algebra
    base = E.base.algebra
    lifts = [s.column(k) for k in range(d)]
    psiEntries = {}
    for a, b, c in combinations(range(d), 3):
        value = subVectors(total.bracketVectors(lifts[a], lifts[b], lifts[c]),
                           s.apply(base.bracket(a, b, c)))
        psiEntries[a, b, c] = E.toFiber(value)
    psi = Cochain.fromEntries(d, m, 2, psiEntries)
    chi = Cochain.fromFunction(d, m, 1, lambda args: E.toFiber(subVectors(
        E.total.T.apply(lifts[args[0]]), s.apply(E.base.T.apply(base.unit(args[0]))))))
    fiber = [E.inclusion.column(w) for w in range(m)]
    rho = {}
    for a, b in combinations(range(d), 2):
        columns = [E.toFiber(total.bracketVectors(lifts[a], lifts[b], fiber[w]))
                   for w in range(m)]
        rho[a, b] = Matrix.fromColumns(columns, m)
    rep = Representation(base, m, rho)
    if not verifyRepresentation(rep).ok:
        raise ConsistencyError('induced action is not a representation')
    P = RBRepresentation(rep, E.TM, E.base)
    if not verifyRbRepresentation(P).ok:
        raise ConsistencyError('induced action is not a rota-baxter representation')
    cocycle = ExtensionCocycle(psi, chi)
    if not _cocycleCheck(P, cocycle):
        raise ConsistencyError('extracted pair is not a cocycle')
    return cocycle, P


def sectionDifference(E, s1, s2):
    """ Returns gamma = s1 - s2 as a module-valued degree-1 cochain.

    """
    E.checkSection(s1)
    E.checkSection(s2)
    difference = s1 - s2
    columns = [E.toFiber(difference.column(k)) for k in range(E.d)]
    return cochainFromMatrix(Matrix.fromColumns(columns, E.m))


def _formatEntries(f):
    entries = f.entries()
    return '{%s}' % ', '.join('%s: %s' % (args, formatVector(entries[args]))
                              for args in sorted(entries))


def isoFromCohomologous(P, c1, c2, gamma, complexes=None):
    """ Returns zeta(x + u) = x + gamma(x) + u from E_c1 to E_c2.

    @param P verified RBRepresentation
    @param c1 ExtensionCocycle
    @param c2 ExtensionCocycle
    @param gamma degree-1 Cochain with c1 - c2 = d^1(gamma, 0)
    @return (d + m) x (d + m) Matrix
    """
    cx = complexes if complexes is not None else Complexes(P)
    d, m = P.dim, P.mdim
    bounded = cx.rba(1).apply(gamma.values + zeroVector(m))
    residual = subVectors((c1 - c2).coordinates, bounded)
    if not isZeroVector(residual):
        left = ExtensionCocycle.fromCoordinates(d, m, residual)
        raise ContractError('cocycles do not differ by d^1(gamma, 0); residual psi %s, '
                            'chi %s' % (_formatEntries(left.psi), _formatEntries(left.chi)))
    E1, verdict1 = buildExtension(P, c1, cx)
    E2, verdict2 = buildExtension(P, c2, cx)
    zeta = Matrix.block([[Matrix.identity(d), Matrix.zeros(d, m)],
                         [matrixFromCochain(gamma), Matrix.identity(m)]])
    if determinant(zeta) == 0:
        raise ConsistencyError('isomorphism is singular')
    morphism = isRotaBaxterMorphism(E1.total, E2.total, zeta)
    if not morphism.ok:
        raise ConsistencyError('zeta fails to intertwine: %s' % (morphism.first(), ),
                               morphism.first().indexes)
    if zeta * E1.inclusion != E2.inclusion or E2.projection * zeta != E1.projection:
        raise ConsistencyError('zeta does not commute with the exact sequences')
    return zeta
