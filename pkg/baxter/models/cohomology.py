#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Distributed under the terms of the GNU General Public License v2

##
#
# Cohomology of the three complexes: dimensions, bases, the map induced
# by phi and the dimension identity of the long exact sequence.
#
##

from baxter.lib import ConsistencyError, ContractError, logging
from baxter.lib.linalg import (Matrix, imageBasis, inSpan, isZeroVector,
                               kernelBasis, rank, solve)
from baxter.algebra.basic import Verdict
from baxter.models.differentials import Complexes


class CohomologyReport(object):
    """ Cocycles, coboundaries and their quotient dimension in one degree.

    """
    def __init__(self, complex, degree, dimension, cocycleBasis, coboundaryBasis):
        self.complex = complex
        self.degree = degree
        self.dimension = dimension
        self.cocycleBasis = cocycleBasis
        self.coboundaryBasis = coboundaryBasis

    @property
    def dimCocycles(self):
        return len(self.cocycleBasis)

    @property
    def dimCoboundaries(self):
        return len(self.coboundaryBasis)

    @property
    def betti(self):
        return self.dimCocycles - self.dimCoboundaries

    def asDict(self, withBases=False):
        result = {
            'complex': self.complex,
            'degree': self.degree,
            'cochains': self.dimension,
            'cocycles': self.dimCocycles,
            'coboundaries': self.dimCoboundaries,
            'betti': self.betti,
        }
        if withBases:
            result['cocycleBasis'] = [list(v) for v in self.cocycleBasis]
            result['coboundaryBasis'] = [list(v) for v in self.coboundaryBasis]
        return result

    def __repr__(self):
        return 'CohomologyReport(%s, degree=%s, betti=%s)' % (
            self.complex, self.degree, self.betti)


def _complexes(P, complexes):
    return complexes if complexes is not None else Complexes(P)


def betti(P, complex, n, complexes=None):
    """ Computes H^n of one complex.

    @param P verified RBRepresentation
    @param complex '3lie', 'rbo' or 'rba'
    @param n degree >= 0
    @keyparam complexes Complexes cache to reuse
    @return CohomologyReport
    """
    if n < 0:
        raise ContractError('negative degree %s' % n)
    cx = _complexes(P, complexes)
    D = cx.differential(complex, n)
    cocycles = kernelBasis(D)
    coboundaries = imageBasis(cx.differential(complex, n - 1)) if n else []
    for vector in coboundaries:
        if not isZeroVector(D.apply(vector)):
            raise ConsistencyError('%s coboundary in degree %s is not a cocycle'
                                   % (complex, n), (complex, n))
    report = CohomologyReport(complex, n, cx.dimension(complex, n),
                              cocycles, coboundaries)
    logging.debug('%r', report)
    return report


def cohomologyRepresentatives(P, complex, n, complexes=None, reverse=False):
    """ Chooses cocycles whose classes form a basis of H^n.

    Kernel vectors are taken greedily in enumeration order, skipping those
    already spanned by coboundaries and earlier choices.

    @keyparam reverse walk the kernel basis backwards
    @return (representatives, report)
    """
    report = betti(P, complex, n, complexes)
    cocycles = list(report.cocycleBasis)
    if reverse:
        cocycles.reverse()
    spanning = list(report.coboundaryBasis)
    chosen = []
    for vector in cocycles:
        if len(chosen) == report.betti:
            break
        if not inSpan(spanning, vector):
            spanning.append(vector)
            chosen.append(vector)
    if len(chosen) != report.betti:
        raise ConsistencyError('found %s representatives for betti number %s'
                               % (len(chosen), report.betti), (complex, n))
    return chosen, report


class InducedMap(object):
    """ The map H^n_3Lie -> H^n_RBO induced by phi^n.

    """
    def __init__(self, degree, matrix, sourceBetti, targetBetti):
        self.degree = degree
        self.matrix = matrix
        self.sourceBetti = sourceBetti
        self.targetBetti = targetBetti
        self.rank = rank(matrix)

    @property
    def kernel(self):
        return self.sourceBetti - self.rank

    @property
    def cokernel(self):
        return self.targetBetti - self.rank

    def asDict(self):
        return {
            'degree': self.degree,
            'source': self.sourceBetti,
            'target': self.targetBetti,
            'rank': self.rank,
        }


def inducedPhiOnCohomology(P, n, complexes=None, reverse=False):
    """ Returns the matrix of phi on cohomology and its rank.

    Checks that phi sends cocycles to cocycles and coboundaries to
    coboundaries before reading off coordinates.

    @param P verified RBRepresentation
    @param n degree
    @return InducedMap
    """
    cx = _complexes(P, complexes)
    phi = cx.phi(n)
    partial = cx.partial(n)
    sources, sourceReport = cohomologyRepresentatives(P, '3lie', n, cx, reverse)
    targets, targetReport = cohomologyRepresentatives(P, 'rbo', n, cx, reverse)
    bounding = list(targetReport.coboundaryBasis)
    for vector in sourceReport.cocycleBasis:
        if not isZeroVector(partial.apply(phi.apply(vector))):
            raise ConsistencyError('phi^%s of a cocycle is not a cocycle' % n, (n, ))
    for vector in sourceReport.coboundaryBasis:
        if not inSpan(bounding, phi.apply(vector)):
            raise ConsistencyError('phi^%s of a coboundary is not a coboundary' % n,
                                   (n, ))
    size = cx.dimension('rbo', n)
    basis = Matrix.fromColumns(bounding + targets, size)
    columns = []
    for vector in sources:
        coordinates = solve(basis, phi.apply(vector))
        if coordinates is None:
            raise ConsistencyError('phi^%s image escapes the cocycles' % n, (n, ))
        columns.append(coordinates[len(bounding):])
    matrix = Matrix.fromColumns(columns, len(targets))
    return InducedMap(n, matrix, len(sources), len(targets))


def lesConsistency(P, nMax, complexes=None):
    """ Checks dim H^n_RBA = dim ker phi*_n + dim coker phi*_(n-1).

    @param P verified RBRepresentation
    @param nMax highest degree checked
    @return (Verdict, table) with one table row per degree 1..nMax
    """
    cx = _complexes(P, complexes)
    verdict = Verdict('long exact sequence')
    table = []
    induced = {0: inducedPhiOnCohomology(P, 0, cx)}
    for n in range(1, nMax + 1):
        induced[n] = inducedPhiOnCohomology(P, n, cx)
        rba = betti(P, 'rba', n, cx).betti
        kernel = induced[n].kernel
        cokernel = induced[n - 1].cokernel
        row = {
            'degree': n,
            'rba': rba,
            '3lie': induced[n].sourceBetti,
            'rbo': induced[n].targetBetti,
            'rbo-previous': induced[n - 1].targetBetti,
            'rank': induced[n].rank,
            'rank-previous': induced[n - 1].rank,
            'kernel': kernel,
            'cokernel-previous': cokernel,
            'ok': rba == kernel + cokernel,
        }
        table.append(row)
        if not row['ok']:
            verdict.add('long exact sequence', (n, ),
                        '%s != %s + %s' % (rba, kernel, cokernel))
    return verdict, table
